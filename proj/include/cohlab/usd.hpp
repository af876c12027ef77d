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
 * Unambiguous state discrimination as a rank-one POVM case study: the
 * measurement and its three-dimensional completion, closed-form outcome
 * probabilities for arbitrary pure inputs, analytic extrema of the coherence
 * quantifiers over the input Bloch angles, and the sweep data behind the
 * max/min/discrimination-state curves.
 */

#pragma once

#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/measurement.hpp"
#include "cohlab/oracle.hpp"

namespace cohlab {

/// Two non-identical, non-orthogonal pure states with overlap
/// eta = cos(2 theta) in (0, 1); gamma is the free ancilla phase of the
/// completed basis.
struct UsdScenario {
    double theta = 0.0;
    double eta = 0.0;
    double gamma = 0.0;

    static UsdScenario from_eta(double eta, double gamma = 0.0);
    static UsdScenario from_theta(double theta, double gamma = 0.0);
};

struct UsdProbabilities {
    double p_plus = 0.0;
    double p_minus = 0.0;
    double p_inconclusive = 0.0;
};

/// The discrimination measurement: POVM vectors, completed basis, and the
/// two states to be discriminated.
struct UsdSystem {
    RankOnePovm povm;
    NaimarkBasis naimark;
    ComplexVector theta_plus;
    ComplexVector theta_minus;
};

UsdSystem usd_build(const UsdScenario& scenario);

/// Closed-form outcome probabilities for the pure input
/// (cos vartheta, e^{i varphi} sin vartheta).
UsdProbabilities usd_probabilities(const UsdScenario& scenario, double vartheta, double varphi);

/// Coherence alpha-quantifier of a pure input through its outcome
/// distribution: -sum p ln p at alpha = 1, else (||p||_{1/alpha} - 1)/(alpha-1).
double usd_quantifier_pure(const UsdScenario& scenario, double vartheta, double varphi,
                           double alpha);

struct UsdMax {
    double value = 0.0;
    double vartheta = 0.0;
    double varphi = 0.0;  // meaningless when vartheta = 0
};

/// Analytic maximum over pure inputs. For eta >= 1/5 the maximum is
/// (3^(alpha-1) - 1)/(alpha - 1) at cos^2 vartheta = (1+eta)/(6 eta) with
/// relative phase +-pi/2; below 1/5 it sits at vartheta = 0.
UsdMax usd_max_analytic(double eta, double alpha);

/// Analytic minimum for alpha in {1/2, 2}. The alpha = 2 value follows the
/// derivation through f(z) = sqrt(1 - z + |eta - z|/eta) + sqrt(z) evaluated
/// at its minimizer z = eta, i.e. 2 sqrt(eta (1 - eta)); see
/// usd_min2_discrepancy for the printed variant it corrects.
double usd_min_analytic(double eta, double alpha);

/// The final published line for the alpha = 2 minimum reads
/// sqrt(1 - eta) + sqrt(eta), which is f(eta) itself rather than the
/// quantifier f(eta)^2 - 1 the derivation chain computes. Both are reported;
/// the numeric oracle arbitrates.
struct UsdMin2Discrepancy {
    double eta = 0.0;
    double printed_value = 0.0;     // sqrt(1-eta) + sqrt(eta)
    double derivation_value = 0.0;  // 2 sqrt(eta (1-eta))
    double oracle_value = 0.0;      // numeric minimum over pure inputs
};

UsdMin2Discrepancy usd_min2_discrepancy(double eta, const PureScanConfig& cfg = {});

struct UsdExtrema {
    double min_value = 0.0, max_value = 0.0;
    double min_vartheta = 0.0, min_varphi = 0.0;
    double max_vartheta = 0.0, max_varphi = 0.0;
    int domain_violations = 0;  // probability triples outside the ellipse domain
};

/// Numeric extrema of the pure-state quantifier over the Bloch angles, with
/// every visited probability triple checked against the ellipse-in-triangle
/// domain.
UsdExtrema usd_extrema_numeric(double eta, double alpha, const PureScanConfig& cfg = {});

/// Quantifier value at the discrimination states themselves (probability
/// triple (1 - eta, 0, eta)).
double usd_value_at_theta_states(double eta, double alpha);

struct SweepRecord {
    double eta = 0.0;
    double alpha = 0.0;
    double max_value = 0.0;
    double min_value = 0.0;
    double value_at_theta_states = 0.0;
    double max_vartheta = 0.0, max_varphi = 0.0;
    double min_vartheta = 0.0, min_varphi = 0.0;
};

/// One record per (eta, alpha) pair, eta on a uniform interior grid.
/// Cells run in parallel; the output order is fixed by the (alpha, eta) keys.
std::vector<SweepRecord> usd_sweep(const std::vector<double>& alphas,
                                   const std::vector<double>& eta_grid,
                                   const PureScanConfig& cfg = {});

/// Uniform interior grid eta_k = k/(n+1), k = 1..n.
std::vector<double> usd_eta_grid(int n);

}  // namespace cohlab
