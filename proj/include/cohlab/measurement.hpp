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
 * Measurement formalism: orthogonal projector decompositions with their
 * dephasing (Lueders) channel, refinement bases with the full von Neumann
 * dephasing, Kraus channels, rank-one POVMs and their completion to an
 * orthonormal basis of the enlarged space.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/hermitian.hpp"

namespace cohlab {

/// Complete set of mutually orthogonal projectors Pi_j with sum Pi_j = I.
class ProjectorDecomposition {
  public:
    explicit ProjectorDecomposition(std::vector<HermitianOperator> projectors);

    Eigen::Index dim() const { return projectors_.front().dim(); }
    std::size_t block_count() const { return projectors_.size(); }
    const std::vector<HermitianOperator>& projectors() const { return projectors_; }
    const std::vector<Eigen::Index>& block_dims() const { return block_dims_; }

    /// True when every block is rank one (projective measurement without
    /// degeneracy; the decomposition and any refinement coincide).
    bool is_rank_one() const;

  private:
    std::vector<HermitianOperator> projectors_;
    std::vector<Eigen::Index> block_dims_;
};

/// Orthonormal basis, optionally labelled (j, beta) by the block j of a
/// parent decomposition and the index beta inside it.
class OrthonormalBasis {
  public:
    explicit OrthonormalBasis(ComplexMatrix vectors,
                              std::optional<std::vector<std::pair<int, int>>> labels = {});

    Eigen::Index dim() const { return vectors_.rows(); }
    const ComplexMatrix& vectors() const { return vectors_; }
    ComplexVector vector(Eigen::Index j) const { return vectors_.col(j); }
    const std::optional<std::vector<std::pair<int, int>>>& labels() const { return labels_; }

  private:
    ComplexMatrix vectors_;  // columns
    std::optional<std::vector<std::pair<int, int>>> labels_;
};

/// Trace-preserving Kraus representation, sum K^dagger K = I within kCloseTol.
class KrausChannel {
  public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus);

    Eigen::Index dim_in() const { return kraus_.front().cols(); }
    Eigen::Index dim_out() const { return kraus_.front().rows(); }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  private:
    std::vector<ComplexMatrix> kraus_;
};

/// Rank-one POVM given by N sub-normalized vectors in dimension d (N >= d),
/// sum |mu_j><mu_j| = I within kCloseTol.
class RankOnePovm {
  public:
    explicit RankOnePovm(std::vector<ComplexVector> mu_vectors);

    Eigen::Index dim() const { return mu_[0].size(); }
    std::size_t outcomes() const { return mu_.size(); }
    const std::vector<ComplexVector>& mu_vectors() const { return mu_; }

    /// d x N matrix whose columns are the mu vectors.
    ComplexMatrix mu_matrix() const;

  private:
    std::vector<ComplexVector> mu_;
};

/// Orthonormal basis of the N-dimensional extension whose columns carry the
/// POVM vectors in their first d components, exactly.
class NaimarkBasis {
  public:
    NaimarkBasis(ComplexMatrix unitary, Eigen::Index principal_dim);

    Eigen::Index extended_dim() const { return unitary_.rows(); }
    Eigen::Index principal_dim() const { return principal_dim_; }
    const ComplexMatrix& unitary() const { return unitary_; }
    OrthonormalBasis basis() const { return OrthonormalBasis(unitary_); }
    ComplexMatrix top_block() const { return unitary_.topRows(principal_dim_); }

    /// Rotate the ancilla rows by a unitary of size (N - d); the top block is
    /// untouched, so all quantifier inputs of the embedded state survive.
    NaimarkBasis rotate_ancilla(const ComplexMatrix& v) const;

  private:
    ComplexMatrix unitary_;
    Eigen::Index principal_dim_;
};

/// Cluster the spectrum of X with single-linkage at a relative gap tolerance
/// and return one projector per eigenvalue cluster, ordered by ascending
/// eigenvalue.
ProjectorDecomposition spectral_projectors(const HermitianOperator& x,
                                           double degeneracy_tol = 1e-8);

/// The rank-one decomposition carried by a basis; the Lueders and
/// von Neumann channels coincide on it.
ProjectorDecomposition rank_one_decomposition(const OrthonormalBasis& b);

/// Lueders reduction: sum_j Pi_j rho Pi_j.
DensityMatrix luders_apply(const ProjectorDecomposition& p, const DensityMatrix& rho);

/// von Neumann reduction: full dephasing in the given basis.
DensityMatrix vonneumann_apply(const OrthonormalBasis& b, const DensityMatrix& rho);

/// Orthonormal basis adapted to the blocks of p. Each block contributes its
/// deterministic eigenvector frame, optionally rotated by a caller-supplied
/// unitary of the block's dimension; labels (j, beta) are recorded.
OrthonormalBasis refinement_basis(const ProjectorDecomposition& p,
                                  const std::vector<std::optional<ComplexMatrix>>&
                                      block_unitaries = {});

/// True when b (labelled or checked numerically) refines p: every basis
/// vector lies inside a single block.
bool basis_refines(const OrthonormalBasis& b, const ProjectorDecomposition& p,
                   double tol = 1e-8);

bool is_invariant(const DensityMatrix& rho, const ProjectorDecomposition& p, double tol);
bool is_invariant(const DensityMatrix& rho, const OrthonormalBasis& b, double tol);

/// Complete the d x N coefficient matrix of a POVM to an N x N unitary by
/// seeding the missing rows with canonical unit rows and running modified
/// Gram-Schmidt, skipping candidates whose residual drops below the support
/// threshold. Deterministic.
NaimarkBasis naimark_completion(const RankOnePovm& povm);

KrausChannel channel_from_projectors(const ProjectorDecomposition& p);
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

}  // namespace cohlab
