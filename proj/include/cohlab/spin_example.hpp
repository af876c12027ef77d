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
 * The two-qubit total-spin example: the z-component observable with its
 * degenerate middle eigenvalue, the three-block projector decomposition, a
 * refinement observable picking the symmetric/antisymmetric combinations,
 * both reduction channels, and closed forms for the residual coherence of
 * states supported on the degenerate block.
 */

#pragma once

#include <optional>

#include "cohlab/core.hpp"
#include "cohlab/measurement.hpp"

namespace cohlab {

struct SpinExample {
    HermitianOperator observable;             // spectrum {2, 0, 0, -2}
    ProjectorDecomposition decomposition;     // blocks of ranks (1, 2, 1)
    HermitianOperator refinement_observable;  // spectrum {6, 4, 2, 0}
    OrthonormalBasis refinement;              // |z0 z0>, |zz+>, |z1 z1>, |zz->
};

SpinExample build_spin_example();

/// Outcome of a refinement measurement determines the original observable's
/// value: 6 -> 2, 4 -> 0, 2 -> -2, 0 -> 0.
double spin_refinement_to_observable(double refinement_eigenvalue);

/// Both reduction channels applied to a two-qubit state: (full dephasing in
/// the refinement basis, block dephasing).
std::pair<DensityMatrix, DensityMatrix> spin_reductions(const DensityMatrix& rho);

/// Residual-coherence closed forms for the state supported on the middle
/// block, written as ((u, conj(v)), (v, 1-u)) in the {|zz+>, |zz->} basis.
/// The weight value is only known in closed form when both u and 1-u are at
/// least |v|.
struct SpinDeltas {
    double l1 = 0.0;
    double relent = 0.0;
    double alpha2 = 0.0;
    double robustness = 0.0;
    std::optional<double> weight;
};

SpinDeltas spin_delta_closed_forms(double u, Complex v);

/// The middle-block qubit embedded as a 4 x 4 two-qubit state, and back.
DensityMatrix spin_embed_middle_block(double u, Complex v);
std::pair<double, Complex> spin_extract_middle_block(const DensityMatrix& rho);

}  // namespace cohlab
