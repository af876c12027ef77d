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

#include "cohlab/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cohlab {

FrameKind frame_kind(const ReferenceFrame& frame) {
    if (std::holds_alternative<OrthonormalBasis>(frame)) return FrameKind::Basis;
    if (std::holds_alternative<LudersFrame>(frame)) return FrameKind::Luders;
    return FrameKind::Povm;
}

namespace {

std::vector<double> block_traces(const ProjectorDecomposition& p, const ComplexMatrix& m) {
    std::vector<double> t(p.block_count());
    for (std::size_t j = 0; j < p.block_count(); ++j)
        t[j] = std::max((p.projectors()[j].matrix() * m).trace().real(), 0.0);
    return t;
}

// Which block does each basis vector live in? Requires b to refine p.
std::vector<int> block_assignment(const OrthonormalBasis& b, const ProjectorDecomposition& p) {
    if (b.labels()) {
        std::vector<int> blocks;
        blocks.reserve(b.labels()->size());
        for (const auto& [j, beta] : *b.labels()) blocks.push_back(j);
        return blocks;
    }
    std::vector<int> blocks(static_cast<std::size_t>(b.dim()), -1);
    for (Eigen::Index c = 0; c < b.dim(); ++c) {
        const ComplexVector y = b.vector(c);
        for (std::size_t j = 0; j < p.block_count(); ++j) {
            const double w = (y.adjoint() * p.projectors()[j].matrix() * y)(0).real();
            if (w > 0.5) {
                blocks[static_cast<std::size_t>(c)] = static_cast<int>(j);
                break;
            }
        }
        if (blocks[static_cast<std::size_t>(c)] < 0)
            throw std::invalid_argument("block_assignment: basis does not refine the decomposition");
    }
    return blocks;
}

}  // namespace

ClosestInvariantState closest_invariant_state(const DensityMatrix& rho,
                                              const ProjectorDecomposition& p, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("closest_invariant_state: alpha <= 0");
    if (p.dim() != rho.dim())
        throw std::invalid_argument("closest_invariant_state: dimension mismatch");

    const bool entropic = std::abs(alpha - 1.0) < kAlphaOneWindow;
    std::vector<double> b(p.block_count());
    if (entropic) {
        b = block_traces(p, rho.matrix());
    } else {
        ComplexMatrix rho_alpha = matrix_power(rho.hermitian(), alpha).matrix();
        std::vector<double> t = block_traces(p, rho_alpha);
        // Blocks carrying no weight of rho keep b_j = 0.
        std::vector<double> prob = block_traces(p, rho.matrix());
        double norm = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            b[j] = prob[j] > 1e-14 ? std::pow(t[j], 1.0 / alpha) : 0.0;
            norm += b[j];
        }
        for (double& x : b) x /= norm;
    }

    ComplexMatrix printed = ComplexMatrix::Zero(p.dim(), p.dim());
    for (std::size_t j = 0; j < b.size(); ++j) printed += b[j] * p.projectors()[j].matrix();
    const double tr = printed.trace().real();
    ClosestInvariantState out{printed, DensityMatrix(ComplexMatrix(printed / tr)), b,
                              std::abs(tr - 1.0) > kTraceTol};
    return out;
}

namespace {

QuantifierResult alpha_quantifier_from_traces(const std::vector<double>& t, double alpha,
                                              FrameKind kind) {
    double norm = 0.0;
    for (double tj : t) norm += std::pow(tj, 1.0 / alpha);
    QuantifierResult res;
    res.alpha = alpha;
    res.frame = kind;
    res.value = (std::pow(norm, alpha) - 1.0) / (alpha - 1.0);
    return res;
}

}  // namespace

QuantifierResult coherence_alpha(const DensityMatrix& rho, const ReferenceFrame& frame,
                                 double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("coherence_alpha: alpha <= 0");
    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        QuantifierResult res = coherence_relent(rho, frame);
        res.alpha = alpha;
        return res;
    }
    if (const auto* povm_frame = std::get_if<PovmFrame>(&frame))
        return povm_coherence(rho, povm_frame->povm, alpha);

    const ProjectorDecomposition& p =
        std::holds_alternative<LudersFrame>(frame)
            ? std::get<LudersFrame>(frame).decomposition
            : rank_one_decomposition(std::get<OrthonormalBasis>(frame));
    ComplexMatrix rho_alpha = matrix_power(rho.hermitian(), alpha).matrix();
    QuantifierResult res =
        alpha_quantifier_from_traces(block_traces(p, rho_alpha), alpha, frame_kind(frame));
    ClosestInvariantState closest = closest_invariant_state(rho, p, alpha);
    res.witness = closest.normalized.matrix();
    res.degenerate_frame = !p.is_rank_one();
    return res;
}

QuantifierResult luders_scalar_coherence(const DensityMatrix& rho,
                                         const ProjectorDecomposition& p, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("luders_scalar_coherence: alpha <= 0");
    QuantifierResult res;
    res.alpha = alpha;
    res.frame = FrameKind::Luders;
    res.degenerate_frame = !p.is_rank_one();

    std::vector<double> prob = block_traces(p, rho.matrix());
    ComplexMatrix delta = ComplexMatrix::Zero(p.dim(), p.dim());
    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        // min over xi of -S(rho) - sum_j p_j ln xi_j s.t. sum_j xi_j dim_j = 1
        // is attained at xi_j = p_j / dim_j.
        double value = -von_neumann_entropy(rho.hermitian());
        for (std::size_t j = 0; j < prob.size(); ++j) {
            const double dj = static_cast<double>(p.block_dims()[j]);
            if (prob[j] > 0.0) value -= prob[j] * std::log(prob[j] / dj);
            delta += (prob[j] / dj) * p.projectors()[j].matrix();
        }
        res.value = value;
        res.witness = delta;
        return res;
    }

    ComplexMatrix rho_alpha = matrix_power(rho.hermitian(), alpha).matrix();
    std::vector<double> t = block_traces(p, rho_alpha);
    double norm = 0.0;
    std::vector<double> xi(t.size(), 0.0);
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (prob[j] <= 1e-14) continue;
        const double dj = static_cast<double>(p.block_dims()[j]);
        const double term = std::pow(dj, 1.0 - 1.0 / alpha) * std::pow(t[j], 1.0 / alpha);
        xi[j] = std::pow(t[j] / dj, 1.0 / alpha);
        norm += term;
    }
    for (std::size_t j = 0; j < xi.size(); ++j) {
        xi[j] /= norm;
        delta += xi[j] * p.projectors()[j].matrix();
    }
    res.value = (std::pow(norm, alpha) - 1.0) / (alpha - 1.0);
    res.witness = delta;
    return res;
}

QuantifierResult coherence_relent(const DensityMatrix& rho, const ReferenceFrame& frame) {
    QuantifierResult res;
    res.alpha = 1.0;
    res.frame = frame_kind(frame);
    const double s_rho = von_neumann_entropy(rho.hermitian());

    if (const auto* basis = std::get_if<OrthonormalBasis>(&frame)) {
        std::vector<double> prob(static_cast<std::size_t>(basis->dim()));
        for (Eigen::Index j = 0; j < basis->dim(); ++j) {
            const ComplexVector y = basis->vector(j);
            prob[static_cast<std::size_t>(j)] =
                std::max((y.adjoint() * rho.matrix() * y)(0).real(), 0.0);
        }
        res.value = shannon_entropy(prob) - s_rho;
        res.witness = vonneumann_apply(*basis, rho).matrix();
        return res;
    }
    if (const auto* luders = std::get_if<LudersFrame>(&frame)) {
        const ProjectorDecomposition& p = luders->decomposition;
        res.value = shannon_entropy(block_traces(p, rho.matrix())) - s_rho;
        res.degenerate_frame = !p.is_rank_one();
        res.witness = luders_apply(p, rho).matrix();
        return res;
    }
    const auto& povm_frame = std::get<PovmFrame>(frame);
    const auto& mu = povm_frame.povm.mu_vectors();
    std::vector<double> prob(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j)
        prob[j] = std::max((mu[j].adjoint() * rho.matrix() * mu[j])(0).real(), 0.0);
    res.value = shannon_entropy(prob) - s_rho;
    return res;
}

QuantifierResult luders_relent_minimum(const DensityMatrix& rho,
                                       const ProjectorDecomposition& p) {
    QuantifierResult res;
    res.alpha = 1.0;
    res.frame = FrameKind::Luders;
    res.degenerate_frame = !p.is_rank_one();
    DensityMatrix pinched = luders_apply(p, rho);
    res.value = von_neumann_entropy(pinched.hermitian()) - von_neumann_entropy(rho.hermitian());
    res.witness = pinched.matrix();
    return res;
}

QuantifierResult coherence_l1(const DensityMatrix& rho, const ReferenceFrame& frame) {
    QuantifierResult res;
    res.alpha = 0.0;
    res.frame = frame_kind(frame);

    if (const auto* basis = std::get_if<OrthonormalBasis>(&frame)) {
        ComplexMatrix rep = basis->vectors().adjoint() * rho.matrix() * basis->vectors();
        res.value = ell1_norm(rep) - rep.diagonal().cwiseAbs().sum();
        return res;
    }
    if (const auto* luders = std::get_if<LudersFrame>(&frame)) {
        if (!luders->refinement)
            throw std::invalid_argument(
                "coherence_l1: Lueders frame carries no refinement representation");
        const OrthonormalBasis& ref = *luders->refinement;
        std::vector<int> blocks = block_assignment(ref, luders->decomposition);
        ComplexMatrix rep = ref.vectors().adjoint() * rho.matrix() * ref.vectors();
        double sum = 0.0;
        for (Eigen::Index r = 0; r < rep.rows(); ++r)
            for (Eigen::Index c = 0; c < rep.cols(); ++c)
                if (blocks[static_cast<std::size_t>(r)] != blocks[static_cast<std::size_t>(c)])
                    sum += std::abs(rep(r, c));
        res.value = sum;
        res.degenerate_frame = !luders->decomposition.is_rank_one();
        return res;
    }
    const auto& povm_frame = std::get<PovmFrame>(frame);
    const ComplexMatrix mu = povm_frame.povm.mu_matrix();
    ComplexMatrix overlap = mu.adjoint() * rho.matrix() * mu;
    res.value = ell1_norm(overlap) - overlap.diagonal().cwiseAbs().sum();
    return res;
}

QuantifierResult povm_coherence(const DensityMatrix& rho, const RankOnePovm& povm, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("povm_coherence: alpha <= 0");
    if (povm.dim() != rho.dim()) throw std::invalid_argument("povm_coherence: dimension mismatch");
    const auto& mu = povm.mu_vectors();

    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        std::vector<double> prob(mu.size());
        for (std::size_t j = 0; j < mu.size(); ++j)
            prob[j] = std::max((mu[j].adjoint() * rho.matrix() * mu[j])(0).real(), 0.0);
        QuantifierResult res;
        res.alpha = alpha;
        res.frame = FrameKind::Povm;
        res.value = shannon_entropy(prob) - von_neumann_entropy(rho.hermitian());
        return res;
    }

    ComplexMatrix rho_alpha = matrix_power(rho.hermitian(), alpha).matrix();
    std::vector<double> t(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j)
        t[j] = std::max((mu[j].adjoint() * rho_alpha * mu[j])(0).real(), 0.0);
    return alpha_quantifier_from_traces(t, alpha, FrameKind::Povm);
}

// ---------------------------------------------------------------------------
// Robustness and weight

namespace {

// Every frame reduces to (state, decomposition) in the space where the
// invariant set is block diagonal; POVM frames move to the extended space.
struct SolverProblem {
    DensityMatrix rho;
    ProjectorDecomposition decomposition;
};

SolverProblem solver_problem(const DensityMatrix& rho, const ReferenceFrame& frame) {
    if (const auto* basis = std::get_if<OrthonormalBasis>(&frame))
        return {rho, rank_one_decomposition(*basis)};
    if (const auto* luders = std::get_if<LudersFrame>(&frame))
        return {rho, luders->decomposition};
    const auto& povm_frame = std::get<PovmFrame>(frame);
    const Eigen::Index extra = povm_frame.naimark.extended_dim() - rho.dim();
    return {direct_sum_embed(rho, extra),
            rank_one_decomposition(povm_frame.naimark.basis())};
}

// Maximize lambda_min(target(delta)) over invariant delta; positive means
// feasible. Warm starts carry the previous bisection step's solution.
class FeasibilitySearch {
  public:
    FeasibilitySearch(const ProjectorDecomposition& p, const SolverConfig& cfg,
                      const ComplexMatrix& pinched_start)
        : param_(p), cfg_(cfg) {
        starts_.push_back(param_.params_from_state(pinched_start));
        const Eigen::Index d = p.dim();
        starts_.push_back(param_.params_from_state(
            ComplexMatrix::Identity(d, d) / static_cast<double>(d)));
        for (int s = static_cast<int>(starts_.size()); s < cfg.multistarts; ++s) {
            std::mt19937_64 gen(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
            std::normal_distribution<double> normal(0.0, 1.0);
            RealVector x(param_.param_count());
            for (int i = 0; i < param_.param_count(); ++i) x(i) = normal(gen);
            starts_.push_back(x);
        }
    }

    /// Best lambda_min over the invariant set for the given matrix map.
    double solve(const std::function<ComplexMatrix(const ComplexMatrix&)>& target,
                 ComplexMatrix* argmax) {
        auto objective = [&](const RealVector& x) -> double {
            ComplexMatrix m = target(param_.state(x));
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
            return -solver.eigenvalues().minCoeff();
        };
        double best = std::numeric_limits<double>::infinity();
        RealVector best_x;
        std::vector<RealVector> starts = starts_;
        if (warm_.size() > 0) starts.insert(starts.begin(), warm_);
        for (auto& x : starts) {
            double v = nelder_mead(objective, x, 0.2, cfg_.inner_iters);
            if (v < best) {
                best = v;
                best_x = x;
            }
            if (best < -10.0 * kFeasTol) break;  // clearly feasible
        }
        best = std::min(best, nelder_mead(objective, best_x, 0.02, cfg_.inner_iters));
        best = std::min(best, nelder_mead(objective, best_x, 0.002, cfg_.inner_iters));
        warm_ = best_x;
        if (argmax) *argmax = param_.state(best_x);
        return -best;
    }

    static constexpr double kFeasTol = 1e-9;

  private:
    BlockStateParam param_;
    SolverConfig cfg_;
    std::vector<RealVector> starts_;
    RealVector warm_;
};

QuantifierResult bisection_solver(const DensityMatrix& rho, const ReferenceFrame& frame,
                                  const SolverConfig& cfg, bool weight_mode) {
    SolverProblem prob = solver_problem(rho, frame);
    QuantifierResult res;
    res.alpha = 0.0;
    res.frame = frame_kind(frame);
    res.degenerate_frame = !prob.decomposition.is_rank_one();

    if (is_invariant(prob.rho, prob.decomposition, cfg.invariance_tol)) {
        res.value = 0.0;
        res.witness = prob.rho.matrix();
        return res;
    }

    const ComplexMatrix pinched = luders_apply(prob.decomposition, prob.rho).matrix();
    FeasibilitySearch search(prob.decomposition, cfg, pinched);
    const ComplexMatrix& rho_m = prob.rho.matrix();

    auto feasible = [&](double x, ComplexMatrix* witness) {
        const double lam = weight_mode
                               ? search.solve(
                                     [&](const ComplexMatrix& delta) -> ComplexMatrix {
                                         return rho_m - (1.0 - x) * delta;
                                     },
                                     witness)
                               : search.solve(
                                     [&](const ComplexMatrix& delta) -> ComplexMatrix {
                                         return (1.0 + x) * delta - rho_m;
                                     },
                                     witness);
        return lam >= -FeasibilitySearch::kFeasTol;
    };

    double lo = 0.0;
    double hi = weight_mode ? 1.0 : static_cast<double>(prob.rho.dim());
    ComplexMatrix witness;
    if (!feasible(hi, &witness))
        throw validation_error("bisection_solver: upper bracket infeasible (solver failure)");
    while (hi - lo > cfg.tol) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid, nullptr))
            hi = mid;
        else
            lo = mid;
    }
    feasible(hi, &witness);
    res.value = hi;
    res.witness = witness;
    return res;
}

}  // namespace

QuantifierResult robustness(const DensityMatrix& rho, const ReferenceFrame& frame,
                            const SolverConfig& cfg) {
    return bisection_solver(rho, frame, cfg, false);
}

QuantifierResult coherence_weight(const DensityMatrix& rho, const ReferenceFrame& frame,
                                  const SolverConfig& cfg) {
    return bisection_solver(rho, frame, cfg, true);
}

// ---------------------------------------------------------------------------
// Residual coherence

double delta_c(const DensityMatrix& rho, const OrthonormalBasis& b,
               const ProjectorDecomposition& p, DeltaKind kind, double alpha,
               const OracleConfig& oracle_cfg, const SolverConfig& solver_cfg) {
    if (!basis_refines(b, p))
        throw std::invalid_argument("delta_c: basis does not refine the decomposition");

    switch (kind) {
        case DeltaKind::EllOne: {
            const double basis_value = coherence_l1(rho, ReferenceFrame(b)).value;
            const double luders_value =
                coherence_l1(rho, ReferenceFrame(LudersFrame{p, b})).value;
            return basis_value - luders_value;
        }
        case DeltaKind::RelativeEntropy: {
            const double basis_value = coherence_relent(rho, ReferenceFrame(b)).value;
            return basis_value - luders_relent_minimum(rho, p).value;
        }
        case DeltaKind::Alpha: {
            if (std::abs(alpha - 1.0) < kAlphaOneWindow)
                return delta_c(rho, b, p, DeltaKind::RelativeEntropy, alpha, oracle_cfg,
                               solver_cfg);
            const double basis_value = coherence_alpha(rho, ReferenceFrame(b), alpha).value;
            if (is_invariant(rho, p, solver_cfg.invariance_tol)) return basis_value;
            OracleResult full =
                minimize_over_block_diagonal(rho, p, BlockObjective::Divergence, alpha, oracle_cfg);
            return basis_value - full.min_value;
        }
        case DeltaKind::Robustness: {
            const double basis_value = robustness(rho, ReferenceFrame(b), solver_cfg).value;
            const double luders_value =
                robustness(rho, ReferenceFrame(LudersFrame{p, b}), solver_cfg).value;
            return basis_value - luders_value;
        }
        case DeltaKind::Weight: {
            const double basis_value = coherence_weight(rho, ReferenceFrame(b), solver_cfg).value;
            const double luders_value =
                coherence_weight(rho, ReferenceFrame(LudersFrame{p, b}), solver_cfg).value;
            return basis_value - luders_value;
        }
    }
    throw std::invalid_argument("delta_c: unknown kind");
}

// ---------------------------------------------------------------------------
// Averaged monotonicity

DensityMatrix random_invariant_state(const ProjectorDecomposition& p, std::uint64_t seed) {
    OrthonormalBasis ref = refinement_basis(p);
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(p.block_count());
    double norm = 0.0;
    for (double& x : w) {
        x = expo(gen);
        norm += x;
    }
    ComplexMatrix out = ComplexMatrix::Zero(p.dim(), p.dim());
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < p.block_count(); ++j) {
        const Eigen::Index bd = p.block_dims()[j];
        ComplexMatrix frame = ref.vectors().middleCols(col, bd);
        ComplexMatrix sigma = random_density(bd, bd, derive_seed(seed, j + 1)).matrix();
        out += (w[j] / norm) * frame * sigma * frame.adjoint();
        col += bd;
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

std::optional<std::pair<DensityMatrix, std::size_t>> find_invariance_violation(
    const KrausChannel& channel, const ProjectorDecomposition& p, int samples,
    std::uint64_t seed, double tol) {
    for (int s = 0; s < samples; ++s) {
        DensityMatrix delta = random_invariant_state(p, derive_seed(seed, static_cast<std::uint64_t>(s)));
        for (std::size_t i = 0; i < channel.kraus().size(); ++i) {
            const ComplexMatrix& k = channel.kraus()[i];
            ComplexMatrix image = k * delta.matrix() * k.adjoint();
            const double tr = image.trace().real();
            if (tr < 1e-12) continue;
            ComplexMatrix dephased = ComplexMatrix::Zero(p.dim(), p.dim());
            for (const auto& pj : p.projectors())
                dephased += pj.matrix() * image * pj.matrix();
            if (max_abs(dephased - image) > tol * std::max(1.0, tr))
                return std::make_pair(delta, i);
        }
    }
    return std::nullopt;
}

Theorem2Report theorem2_check(const DensityMatrix& rho, const KrausChannel& channel,
                              const ProjectorDecomposition& p, double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0 + 1e-12)
        throw std::invalid_argument("theorem2_check: alpha must lie in (0, 2]");
    if (channel.dim_in() != p.dim() || channel.dim_out() != p.dim())
        throw std::invalid_argument("theorem2_check: channel dimension mismatch");
    if (auto violation = find_invariance_violation(channel, p, 12, 17, 1e-8))
        throw krasup_violation("theorem2_check: Kraus operator " +
                                   std::to_string(violation->second) +
                                   " maps an invariant state outside the invariant set",
                               violation->first.matrix(), violation->second);

    ReferenceFrame frame = LudersFrame{p, std::nullopt};
    Theorem2Report report;
    report.rhs = coherence_alpha(rho, frame, alpha).value;

    const ComplexMatrix delta_star = closest_invariant_state(rho, p, alpha).as_printed;
    const bool entropic = std::abs(alpha - 1.0) < kAlphaOneWindow;
    for (const auto& k : channel.kraus()) {
        const double q = std::max((k * rho.matrix() * k.adjoint()).trace().real(), 0.0);
        const double s = std::max((k * delta_star * k.adjoint()).trace().real(), 0.0);
        report.q.push_back(q);
        report.s.push_back(s);
        if (q < 1e-14) continue;
        ComplexMatrix out = k * rho.matrix() * k.adjoint() / q;
        DensityMatrix rho_i(0.5 * (out + out.adjoint()));
        const double c_i = coherence_alpha(rho_i, frame, alpha).value;
        const double coeff = entropic ? q : std::pow(q, alpha) * std::pow(s, 1.0 - alpha);
        report.lhs += coeff * c_i;
    }

    DivergenceValue dqs = tsallis_divergence_raw(report.q, report.s, alpha);
    report.omega_factor = dqs.infinite ? std::numeric_limits<double>::infinity()
                                       : 1.0 + (alpha - 1.0) * dqs.value;
    report.omega.resize(report.q.size(), 0.0);
    if (std::isfinite(report.omega_factor) && std::abs(report.omega_factor) > 1e-14) {
        for (std::size_t i = 0; i < report.q.size(); ++i) {
            const double coeff = entropic ? report.q[i]
                                          : std::pow(report.q[i], alpha) *
                                                std::pow(report.s[i], 1.0 - alpha);
            report.omega[i] = coeff / report.omega_factor;
        }
    }
    return report;
}

KrausChannel random_monomial_channel(Eigen::Index dim, int n_kraus, std::uint64_t seed) {
    if (dim < 1 || n_kraus < 1)
        throw std::invalid_argument("random_monomial_channel: invalid sizes");
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

    // Column j of weights: how outcome i splits the j-th basis direction.
    std::vector<std::vector<double>> weight(static_cast<std::size_t>(n_kraus),
                                            std::vector<double>(static_cast<std::size_t>(dim)));
    for (Eigen::Index j = 0; j < dim; ++j) {
        double norm = 0.0;
        for (int i = 0; i < n_kraus; ++i) {
            weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = expo(gen);
            norm += weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        for (int i = 0; i < n_kraus; ++i)
            weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /= norm;
    }
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < n_kraus; ++i) {
        std::vector<Eigen::Index> sigma(static_cast<std::size_t>(dim));
        for (Eigen::Index j = 0; j < dim; ++j) sigma[static_cast<std::size_t>(j)] = j;
        std::shuffle(sigma.begin(), sigma.end(), gen);
        ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j)
            k(sigma[static_cast<std::size_t>(j)], j) =
                std::sqrt(weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                std::exp(Complex(0.0, phase(gen)));
        kraus.push_back(k);
    }
    return KrausChannel(std::move(kraus));
}

KrausChannel random_block_diagonal_channel(const ProjectorDecomposition& p, int n_kraus,
                                           std::uint64_t seed) {
    OrthonormalBasis ref = refinement_basis(p);
    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(n_kraus),
                                     ComplexMatrix::Zero(p.dim(), p.dim()));
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < p.block_count(); ++j) {
        const Eigen::Index bd = p.block_dims()[j];
        ComplexMatrix frame = ref.vectors().middleCols(col, bd);
        std::vector<ComplexMatrix> block = random_cptp(bd, bd, n_kraus, derive_seed(seed, j + 1));
        for (int i = 0; i < n_kraus; ++i)
            kraus[static_cast<std::size_t>(i)] += frame * block[static_cast<std::size_t>(i)] * frame.adjoint();
        col += bd;
    }
    return KrausChannel(std::move(kraus));
}

DegenerateFrameReport degenerate_frame_report(const DensityMatrix& rho,
                                              const ProjectorDecomposition& p, double alpha,
                                              const OracleConfig& cfg) {
    DegenerateFrameReport report;
    report.alpha = alpha;
    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        report.printed_closed_form =
            coherence_relent(rho, ReferenceFrame(LudersFrame{p, std::nullopt})).value;
    } else {
        ComplexMatrix rho_alpha = matrix_power(rho.hermitian(), alpha).matrix();
        report.printed_closed_form =
            alpha_quantifier_from_traces(block_traces(p, rho_alpha), alpha, FrameKind::Luders)
                .value;
    }
    report.scalar_constrained_closed_form = luders_scalar_coherence(rho, p, alpha).value;
    report.scalar_oracle_min = minimize_over_scalar_blocks(rho, p, alpha, cfg).min_value;
    report.full_oracle_min =
        minimize_over_block_diagonal(rho, p, BlockObjective::Divergence, alpha, cfg).min_value;
    report.printed_vs_full_gap = report.printed_closed_form - report.full_oracle_min;
    report.scalar_vs_full_gap = report.scalar_oracle_min - report.full_oracle_min;
    return report;
}

}  // namespace cohlab
