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

#include "cohlab/usd.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace cohlab {

namespace {

void check_eta(double eta) {
    if (!(eta > 0.0) || !(eta < 1.0))
        throw std::invalid_argument(
            "UsdScenario: overlap must lie strictly between 0 and 1 "
            "(identical or orthogonal states admit no discrimination trade-off)");
}

double quantifier_of_probs(double p1, double p2, double p3, double alpha) {
    p1 = std::max(p1, 0.0);
    p2 = std::max(p2, 0.0);
    p3 = std::max(p3, 0.0);
    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        double h = 0.0;
        if (p1 > 0.0) h -= p1 * std::log(p1);
        if (p2 > 0.0) h -= p2 * std::log(p2);
        if (p3 > 0.0) h -= p3 * std::log(p3);
        return h;
    }
    const double inv = 1.0 / alpha;
    const double norm = std::pow(p1, inv) + std::pow(p2, inv) + std::pow(p3, inv);
    return (std::pow(norm, alpha) - 1.0) / (alpha - 1.0);
}

}  // namespace

UsdScenario UsdScenario::from_eta(double eta, double gamma) {
    check_eta(eta);
    return {std::acos(eta) / 2.0, eta, gamma};
}

UsdScenario UsdScenario::from_theta(double theta, double gamma) {
    const double eta = std::cos(2.0 * theta);
    check_eta(eta);
    return {theta, eta, gamma};
}

UsdSystem usd_build(const UsdScenario& scenario) {
    check_eta(scenario.eta);
    const double eta = scenario.eta;
    const double st = std::sin(scenario.theta);
    const double ct = std::cos(scenario.theta);
    const double root = std::sqrt(1.0 + eta);

    ComplexVector theta_plus(2), theta_minus(2);
    theta_plus << Complex(ct, 0), Complex(st, 0);
    theta_minus << Complex(ct, 0), Complex(-st, 0);

    ComplexVector mu_plus(2), mu_minus(2), mu_inc(2);
    mu_plus << Complex(st / root, 0), Complex(ct / root, 0);
    mu_minus << Complex(st / root, 0), Complex(-ct / root, 0);
    mu_inc << Complex(std::sqrt(2.0 * eta / (1.0 + eta)), 0), Complex(0, 0);
    RankOnePovm povm({mu_plus, mu_minus, mu_inc});

    // Completed basis with the ancilla phase made explicit.
    const Complex phase = std::exp(Complex(0.0, scenario.gamma));
    ComplexMatrix u(3, 3);
    u.col(0) << mu_plus(0), mu_plus(1), std::sqrt(eta) / root * phase;
    u.col(1) << mu_minus(0), mu_minus(1), std::sqrt(eta) / root * phase;
    u.col(2) << mu_inc(0), mu_inc(1), -std::sqrt(1.0 - eta) / root * phase;
    NaimarkBasis naimark(std::move(u), 2);

    return UsdSystem{std::move(povm), std::move(naimark), std::move(theta_plus),
                     std::move(theta_minus)};
}

UsdProbabilities usd_probabilities(const UsdScenario& scenario, double vartheta, double varphi) {
    const double eta = scenario.eta;
    const double theta = scenario.theta;
    const double s_sum = std::sin(theta + vartheta);
    const double s2t = std::sin(2.0 * theta);
    const double s2v = std::sin(2.0 * vartheta);
    const double sh = std::sin(varphi / 2.0);
    const double ch = std::cos(varphi / 2.0);
    UsdProbabilities pr;
    pr.p_plus = (s_sum * s_sum - s2t * s2v * sh * sh) / (1.0 + eta);
    pr.p_minus = (s_sum * s_sum - s2t * s2v * ch * ch) / (1.0 + eta);
    const double cv = std::cos(vartheta);
    pr.p_inconclusive = 2.0 * eta * cv * cv / (1.0 + eta);
    return pr;
}

double usd_quantifier_pure(const UsdScenario& scenario, double vartheta, double varphi,
                           double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("usd_quantifier_pure: alpha <= 0");
    UsdProbabilities pr = usd_probabilities(scenario, vartheta, varphi);
    return quantifier_of_probs(pr.p_plus, pr.p_minus, pr.p_inconclusive, alpha);
}

UsdMax usd_max_analytic(double eta, double alpha) {
    check_eta(eta);
    if (!(alpha > 0.0)) throw std::invalid_argument("usd_max_analytic: alpha <= 0");
    UsdMax out;
    if (eta >= 0.2) {
        out.value = std::abs(alpha - 1.0) < kAlphaOneWindow
                        ? std::log(3.0)
                        : (std::pow(3.0, alpha - 1.0) - 1.0) / (alpha - 1.0);
        out.vartheta = std::acos(std::sqrt((1.0 + eta) / (6.0 * eta)));
        out.varphi = M_PI / 2.0;
        return out;
    }
    const double pp = (1.0 - eta) / (2.0 * (1.0 + eta));
    const double pq = 2.0 * eta / (1.0 + eta);
    out.value = quantifier_of_probs(pp, pp, pq, alpha);
    out.vartheta = 0.0;
    out.varphi = 0.0;
    return out;
}

double usd_min_analytic(double eta, double alpha) {
    check_eta(eta);
    if (std::abs(alpha - 0.5) < 1e-12) {
        if (eta <= 0.5) return 2.0 - 2.0 / std::sqrt(1.0 + 2.0 * eta);
        const double one2 = 1.0 + 2.0 * eta;
        const double sq = 1.0 / one2 + (4.0 * eta * eta - 1.0) * std::pow(1.0 + 3.0 * eta, 2) /
                                           (2.0 * std::pow(1.0 + eta, 2) * one2 * one2);
        return 2.0 - 2.0 * std::sqrt(sq);
    }
    if (std::abs(alpha - 2.0) < 1e-12) {
        // Minimum of f(z)^2 - 1 at z = eta, f(eta) = sqrt(1-eta) + sqrt(eta).
        return 2.0 * std::sqrt(eta * (1.0 - eta));
    }
    throw std::invalid_argument("usd_min_analytic: closed form only for alpha in {1/2, 2}");
}

double usd_value_at_theta_states(double eta, double alpha) {
    check_eta(eta);
    return quantifier_of_probs(1.0 - eta, 0.0, eta, alpha);
}

UsdMin2Discrepancy usd_min2_discrepancy(double eta, const PureScanConfig& cfg) {
    check_eta(eta);
    UsdMin2Discrepancy rep;
    rep.eta = eta;
    rep.printed_value = std::sqrt(1.0 - eta) + std::sqrt(eta);
    rep.derivation_value = 2.0 * std::sqrt(eta * (1.0 - eta));
    rep.oracle_value = usd_extrema_numeric(eta, 2.0, cfg).min_value;
    return rep;
}

UsdExtrema usd_extrema_numeric(double eta, double alpha, const PureScanConfig& cfg) {
    check_eta(eta);
    if (!(alpha > 0.0)) throw std::invalid_argument("usd_extrema_numeric: alpha <= 0");
    UsdScenario scenario = UsdScenario::from_eta(eta);

    // Ellipse-in-triangle domain carved out by the probability relations.
    const double a2 = (1.0 - eta) / (2.0 * (1.0 + eta));
    const double b = eta / (1.0 + eta);
    std::atomic<int> violations{0};
    auto objective = [&](double vartheta, double varphi) {
        UsdProbabilities pr = usd_probabilities(scenario, vartheta, varphi);
        const double y = (pr.p_minus - pr.p_plus) / std::sqrt(2.0);
        const double z = pr.p_inconclusive;
        if (y * y / a2 + std::pow(z - b, 2) / (b * b) > 1.0 + 1e-10) ++violations;
        return quantifier_of_probs(pr.p_plus, pr.p_minus, pr.p_inconclusive, alpha);
    };
    PureScanResult scan = minimize_over_pure_states(objective, cfg);

    UsdExtrema out;
    out.min_value = scan.min_value;
    out.max_value = scan.max_value;
    out.min_vartheta = scan.min_theta;
    out.min_varphi = scan.min_phi;
    out.max_vartheta = scan.max_theta;
    out.max_varphi = scan.max_phi;
    out.domain_violations = violations.load();
    return out;
}

std::vector<double> usd_eta_grid(int n) {
    if (n < 1) throw std::invalid_argument("usd_eta_grid: need at least one point");
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        grid[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) / (n + 1);
    return grid;
}

std::vector<SweepRecord> usd_sweep(const std::vector<double>& alphas,
                                   const std::vector<double>& eta_grid,
                                   const PureScanConfig& cfg) {
    if (alphas.empty() || eta_grid.empty())
        throw std::invalid_argument("usd_sweep: empty grid");
    std::vector<SweepRecord> records(alphas.size() * eta_grid.size());
    // The scan itself parallelizes over grid rows; cells run sequentially so
    // the worker count never changes the record order.
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        const double alpha = alphas[idx / eta_grid.size()];
        const double eta = eta_grid[idx % eta_grid.size()];
        UsdExtrema ex = usd_extrema_numeric(eta, alpha, cfg);
        SweepRecord& rec = records[idx];
        rec.eta = eta;
        rec.alpha = alpha;
        rec.max_value = ex.max_value;
        rec.min_value = ex.min_value;
        rec.value_at_theta_states = usd_value_at_theta_states(eta, alpha);
        rec.max_vartheta = ex.max_vartheta;
        rec.max_varphi = ex.max_varphi;
        rec.min_vartheta = ex.min_vartheta;
        rec.min_varphi = ex.min_varphi;
    }
    return records;
}

}  // namespace cohlab
