// Copyright 2026 coherence-lab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * File formats of the command line tool. States and frames travel as JSON
 * with separate row-major real and imaginary arrays; sweep records as CSV
 * with a version comment line and 12 significant digits, so outputs are
 * golden-file comparable.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "cohlab/core.hpp"
#include "cohlab/hermitian.hpp"
#include "cohlab/quantifiers.hpp"
#include "cohlab/usd.hpp"

namespace cohlab {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

/// Frames carry "kind" in {"basis", "projectors", "povm"}; projector frames
/// may add a "refinement" vector list, POVM frames are completed on load.
nlohmann::json frame_to_json(const ReferenceFrame& frame);
ReferenceFrame frame_from_json(const nlohmann::json& j);

DensityMatrix load_state(const std::string& path);
ReferenceFrame load_frame(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

/// "%.12g" rendering used by every CSV column.
std::string format_double(double x);

/// CSV with header
/// eta,alpha,max,min,at_theta_states,max_vartheta,max_varphi,min_vartheta,min_varphi
/// preceded by a "# coherence-lab <version>" comment line.
void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(const std::string& path);

}  // namespace cohlab
