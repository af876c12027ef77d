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
 * Randomized property suites over divergences, quantifiers and the two
 * distance-like measures. Each suite samples seeded instances, evaluates
 * both sides of its inequality and reports the worst violation; violations
 * are data, not errors.
 */

#pragma once

#include <string>
#include <vector>

#include "cohlab/core.hpp"

namespace cohlab {

struct PropertyReport {
    std::string property;
    int trials = 0;
    double max_violation = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string worst_case;  // instance behind the largest violation
};

/// Known property identifiers:
///   scaling, additivity, divergence-monotonicity, joint-convexity,
///   quantifier-convexity, quantifier-monotonicity, hierarchy, faithfulness,
///   averaged-monotonicity, robustness-convexity, robustness-monotonicity,
///   weight-convexity, weight-monotonicity.
std::vector<std::string> property_ids();

/// Run one suite. `dims` picks the sampled dimensions (ignored by the
/// hierarchy suite, which runs on the two-qubit spin frames); `alphas` must
/// stay inside (0, 2] for the monotonicity-type suites. The default
/// threshold of each suite is baked in.
PropertyReport property_check(const std::string& property_id, const std::vector<int>& dims,
                              const std::vector<double>& alphas, int n_trials,
                              std::uint64_t seed);

}  // namespace cohlab
