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

#include "cohlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cohlab {

namespace {

constexpr double kHuge = 1e100;  // stand-in for the infinite sentinel during search
constexpr double kInteriorShift = 1e-6;

}  // namespace

// ---------------------------------------------------------------------------
// Block parameterization

BlockStateParam::BlockStateParam(const ProjectorDecomposition& p) {
    OrthonormalBasis ref = refinement_basis(p);
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < p.block_count(); ++j) {
        const Eigen::Index bd = p.block_dims()[j];
        frames_.push_back(ref.vectors().middleCols(col, bd));
        block_dims_.push_back(bd);
        param_count_ += static_cast<int>(bd * bd);
        col += bd;
    }
}

ComplexMatrix BlockStateParam::state(const RealVector& params) const {
    const Eigen::Index d = dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    int pos = 0;
    for (std::size_t j = 0; j < frames_.size(); ++j) {
        const Eigen::Index bd = block_dims_[j];
        ComplexMatrix low = ComplexMatrix::Zero(bd, bd);
        for (Eigen::Index r = 0; r < bd; ++r) {
            low(r, r) = Complex(params(pos++), 0.0);
            for (Eigen::Index c = 0; c < r; ++c) {
                const double re = params(pos++);
                const double im = params(pos++);
                low(r, c) = Complex(re, im);
            }
        }
        ComplexMatrix block = low * low.adjoint();
        out += frames_[j] * block * frames_[j].adjoint();
    }
    double tr = out.trace().real();
    if (tr < 1e-14) {
        out = ComplexMatrix::Identity(d, d);
        tr = static_cast<double>(d);
    }
    out /= tr;
    return 0.5 * (out + out.adjoint());
}

RealVector BlockStateParam::params_from_state(const ComplexMatrix& block_diagonal) const {
    RealVector params(param_count_);
    int pos = 0;
    for (std::size_t j = 0; j < frames_.size(); ++j) {
        const Eigen::Index bd = block_dims_[j];
        ComplexMatrix block = frames_[j].adjoint() * block_diagonal * frames_[j];
        block = 0.5 * (block + block.adjoint());
        // Shift into the interior so the factorization always exists.
        block += kInteriorShift * ComplexMatrix::Identity(bd, bd);
        Eigen::LLT<ComplexMatrix> llt(block);
        ComplexMatrix low = llt.matrixL();
        for (Eigen::Index r = 0; r < bd; ++r) {
            params(pos++) = low(r, r).real();
            for (Eigen::Index c = 0; c < r; ++c) {
                params(pos++) = low(r, c).real();
                params(pos++) = low(r, c).imag();
            }
        }
    }
    return params;
}

// ---------------------------------------------------------------------------
// Nelder-Mead

double nelder_mead(const std::function<double(const RealVector&)>& f, RealVector& x,
                   double initial_step, int max_iters, double* spread) {
    const int n = static_cast<int>(x.size());
    std::vector<RealVector> pts(static_cast<std::size_t>(n) + 1, x);
    std::vector<double> vals(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pts[static_cast<std::size_t>(i)](i - 1) += initial_step;
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = f(pts[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(pts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<RealVector> np(pts.size());
        std::vector<double> nv(pts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            np[i] = pts[idx[i]];
            nv[i] = vals[idx[i]];
        }
        pts.swap(np);
        vals.swap(nv);
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        order();
        if (std::abs(vals.back() - vals.front()) < 1e-14 * (1.0 + std::abs(vals.front()))) break;
        RealVector centroid = RealVector::Zero(n);
        for (int i = 0; i < n; ++i) centroid += pts[static_cast<std::size_t>(i)];
        centroid /= static_cast<double>(n);

        const RealVector& worst = pts.back();
        RealVector refl = centroid + (centroid - worst);
        double frefl = f(refl);
        if (frefl < vals.front()) {
            RealVector expd = centroid + 2.0 * (centroid - worst);
            double fexpd = f(expd);
            if (fexpd < frefl) {
                pts.back() = expd;
                vals.back() = fexpd;
            } else {
                pts.back() = refl;
                vals.back() = frefl;
            }
        } else if (frefl < vals[vals.size() - 2]) {
            pts.back() = refl;
            vals.back() = frefl;
        } else {
            RealVector contr = centroid + 0.5 * (worst - centroid);
            double fcontr = f(contr);
            if (fcontr < vals.back()) {
                pts.back() = contr;
                vals.back() = fcontr;
            } else {
                for (std::size_t i = 1; i < pts.size(); ++i) {
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }
    order();
    if (spread) *spread = vals.back() - vals.front();
    x = pts.front();
    return vals.front();
}

// ---------------------------------------------------------------------------
// Scalar-block minimizer

namespace {

// Enumerate compositions of g into m nonnegative parts.
void compositions(int g, int m, std::vector<int>& cur, const std::function<void()>& emit) {
    if (m == 1) {
        cur.push_back(g);
        emit();
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= g; ++k) {
        cur.push_back(k);
        compositions(g - k, m - 1, cur, emit);
        cur.pop_back();
    }
}

double composition_count(int g, int m) {
    double c = 1.0;
    for (int i = 1; i < m; ++i) c = c * (g + i) / i;
    return c;
}

}  // namespace

OracleResult minimize_over_scalar_blocks(const DensityMatrix& rho,
                                         const ProjectorDecomposition& p, double alpha,
                                         const OracleConfig& cfg) {
    if (!(alpha > 0.0)) throw std::invalid_argument("minimize_over_scalar_blocks: alpha <= 0");
    if (p.dim() != rho.dim())
        throw std::invalid_argument("minimize_over_scalar_blocks: dimension mismatch");
    const bool entropic = std::abs(alpha - 1.0) < kAlphaOneWindow;
    const std::size_t m = p.block_count();

    std::vector<double> t(m), prob(m);
    ComplexMatrix rho_alpha =
        entropic ? rho.matrix() : matrix_power(rho.hermitian(), alpha).matrix();
    for (std::size_t j = 0; j < m; ++j) {
        t[j] = std::max((p.projectors()[j].matrix() * rho_alpha).trace().real(), 0.0);
        prob[j] = std::max((p.projectors()[j].matrix() * rho.matrix()).trace().real(), 0.0);
    }
    const double entropy = entropic ? von_neumann_entropy(rho.hermitian()) : 0.0;

    // Blocks without weight are pinned to xi_j = 0.
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < m; ++j)
        if (prob[j] > 1e-14) active.push_back(j);
    const std::size_t ma = active.size();

    // Divergence as a function of the trace allocation w_j = xi_j * dim_j.
    auto fast_value = [&](const std::vector<double>& w) -> double {
        double sum = 0.0;
        for (std::size_t i = 0; i < ma; ++i) {
            const std::size_t j = active[i];
            const double xi = w[i] / static_cast<double>(p.block_dims()[j]);
            if (entropic) {
                if (xi <= 0.0) return kHuge;
                sum -= prob[j] * std::log(xi);
            } else if (xi <= 0.0) {
                if (alpha > 1.0) return kHuge;
                // for alpha < 1 the term xi^(1-alpha) t_j vanishes
            } else {
                sum += std::pow(xi, 1.0 - alpha) * t[j];
            }
        }
        if (entropic) return sum - entropy;
        return (sum - 1.0) / (alpha - 1.0);
    };

    // Lattice over the allocation simplex, capped near 50k points.
    int g = std::max(cfg.grid_density, 8);
    while (ma > 1 && composition_count(g, static_cast<int>(ma)) > 50000.0 && g > 8)
        g = std::max(8, (3 * g) / 4);

    struct Candidate {
        double value;
        std::vector<double> w;
    };
    std::vector<Candidate> best;
    const std::size_t keep = static_cast<std::size_t>(std::max(cfg.multistarts, 1));
    auto consider = [&](double v, const std::vector<double>& w) {
        if (best.size() < keep) {
            best.push_back({v, w});
            std::push_heap(best.begin(), best.end(),
                           [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
        } else if (v < best.front().value) {
            std::pop_heap(best.begin(), best.end(),
                          [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
            best.back() = {v, w};
            std::push_heap(best.begin(), best.end(),
                           [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
        }
    };

    std::vector<int> cur;
    std::vector<double> w(ma);
    compositions(g, static_cast<int>(ma), cur, [&] {
        for (std::size_t i = 0; i < ma; ++i) w[i] = static_cast<double>(cur[i]) / g;
        consider(fast_value(w), w);
    });

    // Local descent from the best lattice points, in softmax coordinates so
    // the iterate stays inside the simplex.
    auto softmax = [&](const RealVector& c, std::vector<double>& out) {
        double mx = c.maxCoeff();
        double z = 0.0;
        for (std::size_t i = 0; i < ma; ++i) z += std::exp(c(static_cast<Eigen::Index>(i)) - mx);
        for (std::size_t i = 0; i < ma; ++i)
            out[i] = std::exp(c(static_cast<Eigen::Index>(i)) - mx) / z;
    };
    std::vector<double> wtmp(ma);
    auto objective = [&](const RealVector& c) {
        softmax(c, wtmp);
        return fast_value(wtmp);
    };

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_w(ma, 1.0 / std::max<double>(1.0, static_cast<double>(ma)));
    for (auto& cand : best) {
        RealVector c(ma);
        for (std::size_t i = 0; i < ma; ++i)
            c(static_cast<Eigen::Index>(i)) =
                std::log(cand.w[i] * (1.0 - kInteriorShift) + kInteriorShift / ma);
        double v = nelder_mead(objective, c, 0.25, cfg.refine_iters);
        v = nelder_mead(objective, c, 0.01, cfg.refine_iters);  // polish
        if (v < best_value) {
            best_value = v;
            softmax(c, best_w);
        }
        if (cand.value < best_value) {
            best_value = cand.value;
            best_w = cand.w;
        }
    }

    OracleResult res;
    res.mode = OracleMode::ScalarBlocks;
    ComplexMatrix delta = ComplexMatrix::Zero(p.dim(), p.dim());
    for (std::size_t i = 0; i < ma; ++i) {
        const std::size_t j = active[i];
        delta += (best_w[i] / static_cast<double>(p.block_dims()[j])) * p.projectors()[j].matrix();
    }
    res.argmin = delta;
    if (best_value >= kHuge) {
        res.infinite = true;
        return res;
    }
    // Report through the generic divergence route.
    DivergenceValue check = quantum_divergence(rho.hermitian(), HermitianOperator(delta), alpha);
    res.infinite = check.infinite;
    res.min_value = check.infinite ? 0.0 : check.value;
    res.residual = check.infinite ? 0.0 : std::abs(check.value - best_value);
    return res;
}

// ---------------------------------------------------------------------------
// Full block-diagonal minimizer

OracleResult minimize_over_block_diagonal(const DensityMatrix& rho,
                                          const ProjectorDecomposition& p, BlockObjective obj,
                                          double alpha, const OracleConfig& cfg,
                                          const std::optional<OrthonormalBasis>& representation) {
    if (p.dim() != rho.dim())
        throw std::invalid_argument("minimize_over_block_diagonal: dimension mismatch");
    Eigen::Index total = 0;
    for (Eigen::Index bd : p.block_dims()) total += bd;
    if (total > 8)
        throw std::invalid_argument("minimize_over_block_diagonal: dimension above numeric scope");
    if (obj == BlockObjective::Divergence && !(alpha > 0.0))
        throw std::invalid_argument("minimize_over_block_diagonal: alpha <= 0");

    BlockStateParam param(p);
    const ComplexMatrix rep = representation ? representation->vectors()
                                             : refinement_basis(p).vectors();
    const ComplexMatrix rho_rep = rep.adjoint() * rho.matrix() * rep;

    auto objective = [&](const RealVector& x) -> double {
        ComplexMatrix delta = param.state(x);
        if (obj == BlockObjective::EllOneDistance)
            return ell1_norm(rho_rep - rep.adjoint() * delta * rep);
        DivergenceValue v = quantum_divergence(rho.hermitian(), HermitianOperator(delta), alpha);
        return v.infinite ? kHuge : v.value;
    };

    // Start 0: interior-shifted pinched state; the rest: seeded random factors.
    ComplexMatrix pinched = luders_apply(p, rho).matrix();
    pinched = (1.0 - kInteriorShift) * pinched +
              kInteriorShift * ComplexMatrix::Identity(p.dim(), p.dim()) / static_cast<double>(p.dim());
    std::vector<RealVector> starts;
    starts.push_back(param.params_from_state(pinched));
    const int n_starts = std::max(cfg.multistarts, 1);
    for (int s = 1; s < n_starts; ++s) {
        std::mt19937_64 gen(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
        std::normal_distribution<double> normal(0.0, 1.0);
        RealVector x(param.param_count());
        for (int i = 0; i < param.param_count(); ++i) x(i) = normal(gen);
        starts.push_back(x);
    }

    double best_value = std::numeric_limits<double>::infinity();
    RealVector best_x;
    double best_spread = 0.0;
    std::vector<double> values(starts.size());
    std::vector<double> spreads(starts.size());
    parallel_for(starts.size(), [&](std::size_t s) {
        double spread = 0.0;
        double v = nelder_mead(objective, starts[s], 0.3, cfg.refine_iters, &spread);
        v = nelder_mead(objective, starts[s], 0.02, cfg.refine_iters, &spread);
        values[s] = v;
        spreads[s] = spread;
    });
    for (std::size_t s = 0; s < starts.size(); ++s) {
        if (values[s] < best_value) {
            best_value = values[s];
            best_x = starts[s];
            best_spread = spreads[s];
        }
    }

    OracleResult res;
    res.mode = OracleMode::FullBlockDiagonal;
    res.argmin = param.state(best_x);
    res.min_value = best_value;
    res.infinite = best_value >= kHuge;
    const double feas = max_abs(luders_apply(p, DensityMatrix(res.argmin)).matrix() - res.argmin);
    res.residual = std::max(best_spread, feas);
    return res;
}

// ---------------------------------------------------------------------------
// Pure-state scan

namespace {

double golden_1d(const std::function<double(double)>& f, double lo, double hi, int iters,
                 bool maximize, double* arg) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        const bool pick_c = maximize ? (fc > fd) : (fc < fd);
        if (pick_c) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    if (arg) *arg = mid;
    return f(mid);
}

}  // namespace

PureScanResult minimize_over_pure_states(const std::function<double(double, double)>& objective,
                                         const PureScanConfig& cfg) {
    const double theta_hi = M_PI / 2.0;
    const double phi_hi = 2.0 * M_PI;
    const int nt = std::max(cfg.n_theta, 2);
    const int np = std::max(cfg.n_phi, 2);

    PureScanResult res;
    res.min_value = std::numeric_limits<double>::infinity();
    res.max_value = -std::numeric_limits<double>::infinity();
    std::vector<double> row_min(static_cast<std::size_t>(nt)), row_max(static_cast<std::size_t>(nt));
    std::vector<double> row_min_phi(static_cast<std::size_t>(nt)), row_max_phi(static_cast<std::size_t>(nt));
    parallel_for(static_cast<std::size_t>(nt), [&](std::size_t it) {
        const double th = theta_hi * static_cast<double>(it) / (nt - 1);
        double mn = std::numeric_limits<double>::infinity(), mx = -mn;
        double mnp = 0.0, mxp = 0.0;
        for (int ip = 0; ip < np; ++ip) {
            const double ph = phi_hi * static_cast<double>(ip) / (np - 1);
            const double v = objective(th, ph);
            if (v < mn) {
                mn = v;
                mnp = ph;
            }
            if (v > mx) {
                mx = v;
                mxp = ph;
            }
        }
        row_min[it] = mn;
        row_max[it] = mx;
        row_min_phi[it] = mnp;
        row_max_phi[it] = mxp;
    });
    for (int it = 0; it < nt; ++it) {
        const double th = theta_hi * static_cast<double>(it) / (nt - 1);
        if (row_min[static_cast<std::size_t>(it)] < res.min_value) {
            res.min_value = row_min[static_cast<std::size_t>(it)];
            res.min_theta = th;
            res.min_phi = row_min_phi[static_cast<std::size_t>(it)];
        }
        if (row_max[static_cast<std::size_t>(it)] > res.max_value) {
            res.max_value = row_max[static_cast<std::size_t>(it)];
            res.max_theta = th;
            res.max_phi = row_max_phi[static_cast<std::size_t>(it)];
        }
    }

    // Coordinate-wise golden-section refinement around both extrema.
    const double dth = theta_hi / (nt - 1);
    const double dph = phi_hi / (np - 1);
    auto refine = [&](double& th, double& ph, double& val, bool maximize) {
        double best_th = th, best_ph = ph, best_val = val;
        for (int round = 0; round < cfg.refine_rounds; ++round) {
            double arg = th;
            golden_1d([&](double t) { return objective(t, ph); },
                      std::max(0.0, th - dth), std::min(theta_hi, th + dth), cfg.golden_iters,
                      maximize, &arg);
            th = arg;
            arg = ph;
            golden_1d([&](double q) { return objective(th, q); }, std::max(0.0, ph - dph),
                      std::min(phi_hi, ph + dph), cfg.golden_iters, maximize, &arg);
            ph = arg;
            const double v = objective(th, ph);
            if (maximize ? v > best_val : v < best_val) {
                best_th = th;
                best_ph = ph;
                best_val = v;
            }
        }
        th = best_th;
        ph = best_ph;
        val = best_val;
    };
    refine(res.min_theta, res.min_phi, res.min_value, false);
    refine(res.max_theta, res.max_phi, res.max_value, true);
    return res;
}

}  // namespace cohlab
