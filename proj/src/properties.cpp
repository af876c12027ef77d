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

#include "cohlab/properties.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cohlab/divergence.hpp"
#include "cohlab/hermitian.hpp"
#include "cohlab/measurement.hpp"
#include "cohlab/quantifiers.hpp"
#include "cohlab/spin_example.hpp"

namespace cohlab {

namespace {

constexpr double kInfViolation = 1e30;

struct SuiteOutcome {
    double violation = 0.0;
    std::string desc;
};

PropertyReport run_suite(const std::string& name, double threshold, int n_trials,
                         std::uint64_t seed,
                         const std::function<SuiteOutcome(std::uint64_t, int)>& trial) {
    std::vector<SuiteOutcome> outcomes(static_cast<std::size_t>(n_trials));
    parallel_for(static_cast<std::size_t>(n_trials), [&](std::size_t i) {
        outcomes[i] = trial(derive_seed(seed, i), static_cast<int>(i));
    });
    PropertyReport report;
    report.property = name;
    report.trials = n_trials;
    report.threshold = threshold;
    for (const auto& o : outcomes) {
        if (o.violation > report.max_violation) {
            report.max_violation = o.violation;
            report.worst_case = o.desc;
        }
    }
    report.pass = report.max_violation <= threshold;
    return report;
}

int pick_dim(const std::vector<int>& dims, int trial) {
    return dims[static_cast<std::size_t>(trial) % dims.size()];
}

double pick_uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t n) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double norm = 0.0;
    for (double& x : w) {
        x = expo(gen);
        norm += x;
    }
    for (double& x : w) x /= norm;
    return w;
}

HermitianOperator scaled_random_psd(Eigen::Index dim, std::uint64_t seed, double scale) {
    return HermitianOperator(scale * random_density(dim, dim, seed).matrix());
}

void require_monotonicity_alphas(const std::vector<double>& alphas, const char* who) {
    for (double a : alphas)
        if (!(a > 0.0) || a > 2.0 + 1e-12)
            throw std::invalid_argument(std::string(who) +
                                        ": alpha outside (0, 2], where the inequality is not "
                                        "asserted");
}

std::string describe(int trial, int dim, double alpha, double viol) {
    std::ostringstream os;
    os << "trial=" << trial << " dim=" << dim << " alpha=" << alpha << " violation=" << viol;
    return os.str();
}

double value_or_inf(const DivergenceValue& v) { return v.infinite ? kInfViolation : v.value; }

/// Degenerate decomposition at dim 3 (blocks 1,2) or dim 4 (blocks 1,2,1),
/// conjugated by a random unitary.
ProjectorDecomposition random_degenerate_frame(int dim, std::uint64_t seed) {
    RealVector vals(dim);
    if (dim == 3)
        vals << 0.0, 1.0, 1.0;
    else if (dim == 4)
        vals << 0.0, 1.0, 1.0, 2.0;
    else
        throw std::invalid_argument("random_degenerate_frame: dim must be 3 or 4");
    ComplexMatrix u = random_unitary(dim, seed);
    ComplexMatrix h = u * vals.asDiagonal() * u.adjoint();
    return spectral_projectors(HermitianOperator(0.5 * (h + h.adjoint())));
}

KrausChannel conjugated_monomial_channel(const ComplexMatrix& u, int n_kraus,
                                         std::uint64_t seed) {
    KrausChannel mono = random_monomial_channel(u.rows(), n_kraus, seed);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(mono.kraus().size());
    for (const auto& k : mono.kraus()) kraus.push_back(u * k * u.adjoint());
    return KrausChannel(std::move(kraus));
}

// --------------------------------------------------------------------------
// Individual suites

SuiteOutcome scaling_trial(const std::vector<int>& dims, const std::vector<double>& alphas,
                           std::uint64_t s, int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    HermitianOperator a = scaled_random_psd(dim, derive_seed(s, 1), pick_uniform(gen, 0.2, 3.0));
    HermitianOperator b = scaled_random_psd(dim, derive_seed(s, 2), pick_uniform(gen, 0.2, 3.0));
    const double lambda = pick_uniform(gen, 0.0, 5.0);
    SuiteOutcome out;
    for (double alpha : alphas) {
        const double base = quantum_divergence(a, b, alpha).value;
        const double scaled =
            quantum_divergence(HermitianOperator(lambda * a.matrix()),
                               HermitianOperator(lambda * b.matrix()), alpha)
                .value;
        const double viol = std::abs(scaled - lambda * base);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

SuiteOutcome additivity_trial(const std::vector<int>& dims, const std::vector<double>& alphas,
                              std::uint64_t s, int trial) {
    const int d1 = pick_dim(dims, trial);
    const int d2 = pick_dim(dims, trial + 1);
    std::mt19937_64 gen(s);
    HermitianOperator a1 = scaled_random_psd(d1, derive_seed(s, 1), pick_uniform(gen, 0.2, 2.0));
    HermitianOperator b1 = scaled_random_psd(d1, derive_seed(s, 2), pick_uniform(gen, 0.2, 2.0));
    HermitianOperator a2 = scaled_random_psd(d2, derive_seed(s, 3), pick_uniform(gen, 0.2, 2.0));
    HermitianOperator b2 = scaled_random_psd(d2, derive_seed(s, 4), pick_uniform(gen, 0.2, 2.0));

    auto direct_sum = [](const ComplexMatrix& x, const ComplexMatrix& y) {
        ComplexMatrix out = ComplexMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
        out.topLeftCorner(x.rows(), x.cols()) = x;
        out.bottomRightCorner(y.rows(), y.cols()) = y;
        return out;
    };
    HermitianOperator a(direct_sum(a1.matrix(), a2.matrix()));
    HermitianOperator b(direct_sum(b1.matrix(), b2.matrix()));

    SuiteOutcome out;
    for (double alpha : alphas) {
        const double joint = value_or_inf(quantum_divergence(a, b, alpha));
        const double split = value_or_inf(quantum_divergence(a1, b1, alpha)) +
                             value_or_inf(quantum_divergence(a2, b2, alpha));
        const double viol = std::abs(joint - split);
        if (viol > out.violation) out = {viol, describe(trial, d1 + d2, alpha, viol)};
    }
    return out;
}

SuiteOutcome divergence_monotonicity_trial(const std::vector<int>& dims,
                                           const std::vector<double>& alphas, std::uint64_t s,
                                           int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    DensityMatrix rho = random_density(dim, dim, derive_seed(s, 1));
    DensityMatrix sigma = random_density(dim, dim, derive_seed(s, 2));
    const int n_kraus = 1 + static_cast<int>(gen() % 3);
    KrausChannel phi(random_cptp(dim, dim, n_kraus, derive_seed(s, 3)));
    DensityMatrix rho_out = apply_channel(phi, rho);
    DensityMatrix sigma_out = apply_channel(phi, sigma);

    SuiteOutcome out;
    for (double alpha : alphas) {
        const double before = value_or_inf(quantum_divergence(rho.hermitian(), sigma.hermitian(), alpha));
        const double after =
            value_or_inf(quantum_divergence(rho_out.hermitian(), sigma_out.hermitian(), alpha));
        const double viol = std::max(0.0, after - before);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

SuiteOutcome joint_convexity_trial(const std::vector<int>& dims, const std::vector<double>& alphas,
                                   std::uint64_t s, int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    const std::size_t parts = 3;
    std::vector<double> q = random_simplex(gen, parts);
    std::vector<DensityMatrix> rhos, sigmas;
    ComplexMatrix rho_mix = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix sigma_mix = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < parts; ++i) {
        rhos.push_back(random_density(dim, dim, derive_seed(s, 10 + i)));
        sigmas.push_back(random_density(dim, dim, derive_seed(s, 20 + i)));
        rho_mix += q[i] * rhos.back().matrix();
        sigma_mix += q[i] * sigmas.back().matrix();
    }
    HermitianOperator rm(0.5 * (rho_mix + rho_mix.adjoint()));
    HermitianOperator sm(0.5 * (sigma_mix + sigma_mix.adjoint()));

    SuiteOutcome out;
    for (double alpha : alphas) {
        double split = 0.0;
        for (std::size_t i = 0; i < parts; ++i)
            split += q[i] *
                     value_or_inf(quantum_divergence(rhos[i].hermitian(), sigmas[i].hermitian(), alpha));
        const double mixed = value_or_inf(quantum_divergence(rm, sm, alpha));
        const double viol = std::max(0.0, mixed - split);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

SuiteOutcome quantifier_convexity_trial(const std::vector<int>& dims,
                                        const std::vector<double>& alphas, std::uint64_t s,
                                        int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    OrthonormalBasis basis(random_unitary(dim, derive_seed(s, 1)));
    ReferenceFrame frame = LudersFrame{rank_one_decomposition(basis), basis};
    const std::size_t parts = 3;
    std::vector<double> q = random_simplex(gen, parts);
    ComplexMatrix mix = ComplexMatrix::Zero(dim, dim);
    std::vector<DensityMatrix> rhos;
    for (std::size_t i = 0; i < parts; ++i) {
        rhos.push_back(random_density(dim, dim, derive_seed(s, 10 + i)));
        mix += q[i] * rhos.back().matrix();
    }
    DensityMatrix rho_mix(0.5 * (mix + mix.adjoint()));

    SuiteOutcome out;
    for (double alpha : alphas) {
        double split = 0.0;
        for (std::size_t i = 0; i < parts; ++i)
            split += q[i] * coherence_alpha(rhos[i], frame, alpha).value;
        const double mixed = coherence_alpha(rho_mix, frame, alpha).value;
        const double viol = std::max(0.0, mixed - split);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

SuiteOutcome quantifier_monotonicity_trial(const std::vector<int>& dims,
                                           const std::vector<double>& alphas, std::uint64_t s,
                                           int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    ComplexMatrix u = random_unitary(dim, derive_seed(s, 1));
    OrthonormalBasis basis(u);
    ReferenceFrame frame = LudersFrame{rank_one_decomposition(basis), basis};
    KrausChannel channel =
        conjugated_monomial_channel(u, 1 + static_cast<int>(gen() % 3), derive_seed(s, 2));
    DensityMatrix rho = random_density(dim, dim, derive_seed(s, 3));
    DensityMatrix rho_out = apply_channel(channel, rho);

    SuiteOutcome out;
    for (double alpha : alphas) {
        const double before = coherence_alpha(rho, frame, alpha).value;
        const double after = coherence_alpha(rho_out, frame, alpha).value;
        const double viol = std::max(0.0, after - before);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

SuiteOutcome hierarchy_trial(const std::vector<double>& alphas, std::uint64_t s, int trial) {
    static const SpinExample ex = build_spin_example();
    ReferenceFrame basis_frame{ex.refinement};
    ReferenceFrame luders_frame{LudersFrame{ex.decomposition, ex.refinement}};
    DensityMatrix rho = random_density(4, 4, derive_seed(s, 1));

    SuiteOutcome out;
    auto check = [&](double basis_value, double luders_value, double alpha) {
        const double viol = std::max(0.0, luders_value - basis_value);
        if (viol > out.violation) out = {viol, describe(trial, 4, alpha, viol)};
    };
    check(coherence_l1(rho, basis_frame).value, coherence_l1(rho, luders_frame).value, 0.0);
    check(coherence_relent(rho, basis_frame).value, coherence_relent(rho, luders_frame).value,
          1.0);
    for (double alpha : alphas)
        check(coherence_alpha(rho, basis_frame, alpha).value,
              coherence_alpha(rho, luders_frame, alpha).value, alpha);
    return out;
}

SuiteOutcome faithfulness_trial(const std::vector<int>& dims, const std::vector<double>& alphas,
                                std::uint64_t s, int trial) {
    const int dim = pick_dim(dims, trial);
    OrthonormalBasis basis(random_unitary(dim, derive_seed(s, 1)));
    ProjectorDecomposition p = rank_one_decomposition(basis);
    ReferenceFrame frame = LudersFrame{p, basis};

    DensityMatrix invariant = random_invariant_state(p, derive_seed(s, 2));
    DensityMatrix coherent = random_density(dim, dim, derive_seed(s, 3));
    const bool coherent_ok = !is_invariant(coherent, p, 1e-6);

    SuiteOutcome out;
    auto check = [&](double inv_value, double coh_value, double alpha) {
        double viol = std::max(std::abs(inv_value), std::max(0.0, -coh_value));
        if (coherent_ok) viol = std::max(viol, std::max(0.0, 1e-8 - coh_value));
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    };
    check(coherence_l1(invariant, frame).value, coherence_l1(coherent, frame).value, 0.0);
    check(coherence_relent(invariant, frame).value, coherence_relent(coherent, frame).value, 1.0);
    for (double alpha : alphas)
        check(coherence_alpha(invariant, frame, alpha).value,
              coherence_alpha(coherent, frame, alpha).value, alpha);
    return out;
}

SuiteOutcome averaged_monotonicity_trial(const std::vector<int>& dims,
                                         const std::vector<double>& alphas, std::uint64_t s,
                                         int trial) {
    const int dim = pick_dim(dims, trial);
    std::mt19937_64 gen(s);
    ComplexMatrix u = random_unitary(dim, derive_seed(s, 1));
    OrthonormalBasis basis(u);
    ProjectorDecomposition p = rank_one_decomposition(basis);
    KrausChannel channel =
        conjugated_monomial_channel(u, 1 + static_cast<int>(gen() % 3), derive_seed(s, 2));
    DensityMatrix rho = random_density(dim, dim, derive_seed(s, 3));

    SuiteOutcome out;
    for (double alpha : alphas) {
        Theorem2Report rep = theorem2_check(rho, channel, p, alpha);
        const double viol = std::max(0.0, rep.lhs - rep.rhs);
        if (viol > out.violation) out = {viol, describe(trial, dim, alpha, viol)};
    }
    return out;
}

struct SolverFrames {
    ReferenceFrame frame;                       // solver target
    std::optional<ReferenceFrame> basis_frame;  // refinement of a degenerate frame
};

// Even trials use a random basis frame; odd trials at dims 3-4 use a
// degenerate decomposition so the block parameterization is exercised.
SolverFrames solver_frames(int dim, int trial, std::uint64_t s) {
    if (trial % 2 == 1 && (dim == 3 || dim == 4)) {
        ProjectorDecomposition p = random_degenerate_frame(dim, derive_seed(s, 1));
        OrthonormalBasis ref = refinement_basis(p);
        return {LudersFrame{p, ref}, ReferenceFrame{ref}};
    }
    OrthonormalBasis basis(random_unitary(dim, derive_seed(s, 1)));
    return {ReferenceFrame{basis}, std::nullopt};
}

SolverConfig property_solver_config(std::uint64_t s) {
    SolverConfig cfg;
    cfg.tol = 2e-7;
    cfg.multistarts = 3;
    cfg.inner_iters = 90;
    cfg.seed = s;
    return cfg;
}

using SolverFn = QuantifierResult (*)(const DensityMatrix&, const ReferenceFrame&,
                                      const SolverConfig&);

SuiteOutcome solver_convexity_trial(const std::vector<int>& dims, SolverFn solver,
                                    std::uint64_t s, int trial) {
    const int dim = pick_dim(dims, trial);
    SolverFrames frames = solver_frames(dim, trial, s);
    SolverConfig cfg = property_solver_config(derive_seed(s, 9));
    DensityMatrix rho1 = random_density(dim, dim, derive_seed(s, 2));
    DensityMatrix rho2 = random_density(dim, dim, derive_seed(s, 3));
    const double r1 = solver(rho1, frames.frame, cfg).value;
    const double r2 = solver(rho2, frames.frame, cfg).value;

    SuiteOutcome out;
    for (double t : {0.25, 0.5, 0.75}) {
        ComplexMatrix mix = t * rho1.matrix() + (1.0 - t) * rho2.matrix();
        const double mixed =
            solver(DensityMatrix(0.5 * (mix + mix.adjoint())), frames.frame, cfg).value;
        const double viol = std::max(0.0, mixed - (t * r1 + (1.0 - t) * r2));
        if (viol > out.violation) out = {viol, describe(trial, dim, t, viol)};
    }
    // Larger invariant sets can only shrink the measure: check the refinement
    // side when the frame is degenerate.
    if (frames.basis_frame) {
        const double basis_value = solver(rho1, *frames.basis_frame, cfg).value;
        const double viol = std::max(0.0, r1 - basis_value);
        if (viol > out.violation)
            out = {viol, describe(trial, dim, -1.0, viol) + " (refinement ordering)"};
    }
    return out;
}

SuiteOutcome solver_monotonicity_trial(const std::vector<int>& dims, SolverFn solver,
                                       std::uint64_t s, int trial) {
    const int dim = pick_dim(dims, trial);
    SolverFrames frames = solver_frames(dim, trial, s);
    SolverConfig cfg = property_solver_config(derive_seed(s, 9));
    DensityMatrix rho = random_density(dim, dim, derive_seed(s, 2));

    std::mt19937_64 gen(s);
    const int n_kraus = 1 + static_cast<int>(gen() % 2);
    KrausChannel channel = [&] {
        if (const auto* luders = std::get_if<LudersFrame>(&frames.frame))
            return random_block_diagonal_channel(luders->decomposition, n_kraus,
                                                 derive_seed(s, 3));
        const auto& basis = std::get<OrthonormalBasis>(frames.frame);
        return conjugated_monomial_channel(basis.vectors(), n_kraus, derive_seed(s, 3));
    }();

    const double before = solver(rho, frames.frame, cfg).value;
    double averaged = 0.0;
    for (const auto& k : channel.kraus()) {
        ComplexMatrix image = k * rho.matrix() * k.adjoint();
        const double q = image.trace().real();
        if (q < 1e-12) continue;
        image /= q;
        averaged += q * solver(DensityMatrix(0.5 * (image + image.adjoint())), frames.frame, cfg)
                            .value;
    }
    const double viol = std::max(0.0, averaged - before);
    SuiteOutcome out{viol, describe(trial, dim, 0.0, viol)};
    return out;
}

}  // namespace

std::vector<std::string> property_ids() {
    return {"scaling",
            "additivity",
            "divergence-monotonicity",
            "joint-convexity",
            "quantifier-convexity",
            "quantifier-monotonicity",
            "hierarchy",
            "faithfulness",
            "averaged-monotonicity",
            "robustness-convexity",
            "robustness-monotonicity",
            "weight-convexity",
            "weight-monotonicity"};
}

PropertyReport property_check(const std::string& property_id, const std::vector<int>& dims_in,
                              const std::vector<double>& alphas_in, int n_trials,
                              std::uint64_t seed) {
    if (n_trials < 1) throw std::invalid_argument("property_check: need at least one trial");
    std::vector<int> dims = dims_in.empty() ? std::vector<int>{2, 3} : dims_in;
    for (int d : dims)
        if (d < 2 || d > 8) throw std::invalid_argument("property_check: dims must lie in [2, 8]");
    std::vector<double> alphas =
        alphas_in.empty() ? std::vector<double>{0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0} : alphas_in;
    for (double a : alphas)
        if (!(a > 0.0)) throw std::invalid_argument("property_check: alpha must be positive");

    if (property_id == "scaling")
        return run_suite(property_id, 1e-10, n_trials, seed, [&](std::uint64_t s, int t) {
            return scaling_trial(dims, alphas, s, t);
        });
    if (property_id == "additivity")
        return run_suite(property_id, 1e-9, n_trials, seed, [&](std::uint64_t s, int t) {
            return additivity_trial(dims, alphas, s, t);
        });
    if (property_id == "divergence-monotonicity") {
        require_monotonicity_alphas(alphas, "divergence-monotonicity");
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return divergence_monotonicity_trial(dims, alphas, s, t);
        });
    }
    if (property_id == "joint-convexity") {
        require_monotonicity_alphas(alphas, "joint-convexity");
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return joint_convexity_trial(dims, alphas, s, t);
        });
    }
    if (property_id == "quantifier-convexity") {
        require_monotonicity_alphas(alphas, "quantifier-convexity");
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return quantifier_convexity_trial(dims, alphas, s, t);
        });
    }
    if (property_id == "quantifier-monotonicity") {
        require_monotonicity_alphas(alphas, "quantifier-monotonicity");
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return quantifier_monotonicity_trial(dims, alphas, s, t);
        });
    }
    if (property_id == "hierarchy")
        return run_suite(property_id, 1e-9, n_trials, seed, [&](std::uint64_t s, int t) {
            return hierarchy_trial(alphas, s, t);
        });
    if (property_id == "faithfulness")
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return faithfulness_trial(dims, alphas, s, t);
        });
    if (property_id == "averaged-monotonicity") {
        require_monotonicity_alphas(alphas, "averaged-monotonicity");
        return run_suite(property_id, 1e-8, n_trials, seed, [&](std::uint64_t s, int t) {
            return averaged_monotonicity_trial(dims, alphas, s, t);
        });
    }
    if (property_id == "robustness-convexity")
        return run_suite(property_id, 1e-6, n_trials, seed, [&](std::uint64_t s, int t) {
            return solver_convexity_trial(dims, &robustness, s, t);
        });
    if (property_id == "robustness-monotonicity")
        return run_suite(property_id, 1e-6, n_trials, seed, [&](std::uint64_t s, int t) {
            return solver_monotonicity_trial(dims, &robustness, s, t);
        });
    if (property_id == "weight-convexity")
        return run_suite(property_id, 1e-6, n_trials, seed, [&](std::uint64_t s, int t) {
            return solver_convexity_trial(dims, &coherence_weight, s, t);
        });
    if (property_id == "weight-monotonicity")
        return run_suite(property_id, 1e-6, n_trials, seed, [&](std::uint64_t s, int t) {
            return solver_monotonicity_trial(dims, &coherence_weight, s, t);
        });
    throw std::invalid_argument("property_check: unknown property '" + property_id + "'");
}

}  // namespace cohlab
