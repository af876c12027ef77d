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
 * Shared aliases, tolerances, error types and small utilities used by the
 * whole library. Dense complex matrices only; dimensions stay at desk scale
 * (<= 16), so everything is double precision with fixed tolerances.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cohlab {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances. All fixed for double precision at dims <= 16.
inline constexpr double kHermTol = 1e-10;    // Hermiticity check
inline constexpr double kTraceTol = 1e-10;   // unit-trace check
inline constexpr double kPsdTol = 1e-10;     // admissible eigenvalue negativity
inline constexpr double kEigTol = 1e-10;     // eigendecomposition residuals
inline constexpr double kSupportTol = 1e-9;  // support threshold, relative to largest eigenvalue
inline constexpr double kCloseTol = 1e-10;   // completeness / orthonormality residuals
inline constexpr double kDivTol = 1e-10;     // admissible negativity of divergence values
// Quantifiers with an (alpha - 1) denominator switch to the entropic branch
// inside this window around alpha = 1.
inline constexpr double kAlphaOneWindow = 1e-6;

/// Raised when a constructed object violates its structural invariants
/// (non-Hermitian input, incomplete POVM, non-trace-preserving channel, ...).
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Derive a child seed for a parallel worker or sub-generator. Splitmix64
/// finalizer over (seed, index); identical inputs give identical streams on
/// every platform.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Run fn(i) for i in [0, n). Work items must be independent; results should
/// be written into per-index slots so the outcome does not depend on the
/// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace cohlab
