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
 * Independent numeric minimizers over invariant-state sets. These search the
 * feasible domains directly (simplex lattices, Cholesky block factors, dense
 * angle grids) and report minima evaluated through the generic divergence
 * route, so they can arbitrate every closed form elsewhere in the library.
 */

#pragma once

#include <functional>
#include <optional>

#include "cohlab/core.hpp"
#include "cohlab/divergence.hpp"
#include "cohlab/measurement.hpp"

namespace cohlab {

struct OracleConfig {
    int grid_density = 64;  // lattice steps per free simplex dimension (capped at 3 free dims)
    int multistarts = 16;
    int refine_iters = 200;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
};

enum class OracleMode { ScalarBlocks, FullBlockDiagonal, PureStates };

struct OracleResult {
    double min_value = 0.0;
    ComplexMatrix argmin;  // minimizing state
    OracleMode mode = OracleMode::ScalarBlocks;
    double residual = 0.0;  // convergence / cross-evaluation diagnostic
    bool infinite = false;
};

/// Objective for the full block-diagonal minimizer.
enum class BlockObjective { Divergence, EllOneDistance };

/// Maps unconstrained real vectors to block-diagonal unit-trace PSD states of
/// a projector decomposition through per-block lower-triangular factors.
/// Shared by the oracle minimizers and the robustness/weight feasibility
/// searches.
class BlockStateParam {
  public:
    explicit BlockStateParam(const ProjectorDecomposition& p);

    int param_count() const { return param_count_; }
    Eigen::Index dim() const { return frames_.empty() ? 0 : frames_[0].rows(); }

    /// Assemble the unit-trace block-diagonal state for a parameter vector.
    ComplexMatrix state(const RealVector& params) const;

    /// Parameters reproducing a given block-diagonal state (interior-shifted
    /// so the Cholesky factors exist).
    RealVector params_from_state(const ComplexMatrix& block_diagonal) const;

  private:
    std::vector<ComplexMatrix> frames_;  // orthonormal columns per block
    std::vector<Eigen::Index> block_dims_;
    int param_count_ = 0;
};

/// Plain Nelder-Mead on an unconstrained real vector. Returns the best value
/// found; x is updated to the best point. The final simplex value spread is
/// written to *spread when given.
double nelder_mead(const std::function<double(const RealVector&)>& f, RealVector& x,
                   double initial_step, int max_iters, double* spread = nullptr);

/// Minimize D_alpha(rho || sum_j xi_j Pi_j) over xi_j >= 0 with
/// sum_j xi_j dim(Pi_j) = 1 by a simplex lattice plus local descent. Blocks
/// carrying no weight of rho are pinned to xi_j = 0. The reported minimum is
/// re-evaluated through quantum_divergence on the assembled state; the
/// residual records the cross-evaluation difference.
OracleResult minimize_over_scalar_blocks(const DensityMatrix& rho,
                                         const ProjectorDecomposition& p, double alpha,
                                         const OracleConfig& cfg = {});

/// Minimize the chosen objective over all block-diagonal density matrices
/// (each block parameterized by a complex Cholesky factor, global trace
/// normalized), multistart local descent. For the ell-1 objective the
/// distance is measured in `representation` (default: the decomposition's
/// canonical refinement basis).
OracleResult minimize_over_block_diagonal(const DensityMatrix& rho,
                                          const ProjectorDecomposition& p, BlockObjective obj,
                                          double alpha, const OracleConfig& cfg = {},
                                          const std::optional<OrthonormalBasis>& representation = {});

struct PureScanConfig {
    int n_theta = 721;
    int n_phi = 1441;
    int refine_rounds = 4;
    int golden_iters = 60;
};

struct PureScanResult {
    double min_value = 0.0;
    double max_value = 0.0;
    double min_theta = 0.0, min_phi = 0.0;
    double max_theta = 0.0, max_phi = 0.0;
};

/// Dense grid scan of an objective over (theta, phi) in
/// [0, pi/2] x [0, 2 pi], followed by coordinate-wise golden-section
/// refinement of both the minimum and the maximum.
PureScanResult minimize_over_pure_states(const std::function<double(double, double)>& objective,
                                         const PureScanConfig& cfg = {});

}  // namespace cohlab
