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
 * Dense complex Hermitian linear algebra: checked operator types,
 * deterministic eigendecomposition, matrix functions on the support,
 * embeddings and seeded random generators.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "cohlab/core.hpp"

namespace cohlab {

/// Hermitian operator. Construction symmetrizes nothing: the input must
/// already satisfy H = H^dagger within kHermTol or validation fails.
class HermitianOperator {
  public:
    explicit HermitianOperator(ComplexMatrix m);

    Eigen::Index dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }

  private:
    ComplexMatrix mat_;
};

/// Unit-trace positive semidefinite operator. Eigenvalues may dip to
/// -kPsdTol to absorb numerical drift after channel application.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);
    explicit DensityMatrix(HermitianOperator h);

    Eigen::Index dim() const { return op_.dim(); }
    const ComplexMatrix& matrix() const { return op_.matrix(); }
    const HermitianOperator& hermitian() const { return op_; }

  private:
    HermitianOperator op_;
};

/// Eigensystem of a Hermitian operator. Eigenvalues ascend; eigenvector
/// columns are orthonormal and phase-fixed (first significant component real
/// positive) so repeated runs on identical input agree bit for bit.
struct EigenDecomposition {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // columns, orthonormal
};

EigenDecomposition eig_hermitian(const HermitianOperator& h);

/// A^alpha for PSD A and alpha > 0, mapping eigenvalues with 0^alpha := 0.
/// Eigenvalues in [-kPsdTol, 0) are clamped to zero first (anything more
/// negative is a validation error) and the numerical kernel below the
/// relative support threshold also maps to zero.
HermitianOperator matrix_power(const HermitianOperator& a, double alpha);

/// ln A restricted to the support: eigenvalues above the relative support
/// threshold map to their logarithm, kernel directions map to 0. Support
/// conditions are the caller's business.
HermitianOperator matrix_log_support(const HermitianOperator& a);

/// Entrywise norm sum_ij |a_ij| in the stored (calculation-basis)
/// representation.
double ell1_norm(const ComplexMatrix& a);

/// Orthogonal projector onto the range of a PSD operator, with the kernel
/// decided by the relative support threshold.
HermitianOperator support_projector(const HermitianOperator& a);

/// diag(rho, 0): embed into a space enlarged by `extra` dimensions.
DensityMatrix direct_sum_embed(const DensityMatrix& rho, Eigen::Index extra);

/// Seeded Gaussian-based generators. Identical seeds reproduce identical
/// output on one platform.
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed);
ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Kraus operators of a random channel, built by slicing a Haar-random
/// isometry from dim_in to n_kraus * dim_out. Satisfies the completeness
/// relation within kCloseTol.
std::vector<ComplexMatrix> random_cptp(Eigen::Index dim_in, Eigen::Index dim_out,
                                       int n_kraus, std::uint64_t seed);

/// Seeded Haar-random state vector (unit norm), used by property suites.
ComplexVector random_pure_state(Eigen::Index dim, std::uint64_t seed);

}  // namespace cohlab
