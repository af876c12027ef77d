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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cohlab/divergence.hpp"
#include "cohlab/measurement.hpp"
#include "cohlab/properties.hpp"

using namespace cohlab;
using Catch::Approx;

TEST_CASE("probability vector validation") {
    REQUIRE_NOTHROW(ProbabilityVector({0.5, 0.5}));
    REQUIRE_THROWS_AS(ProbabilityVector({0.5, 0.6}), validation_error);
    REQUIRE_THROWS_AS(ProbabilityVector({1.5, -0.5}), validation_error);
}

TEST_CASE("classical divergence on identical distributions vanishes") {
    ProbabilityVector p({0.2, 0.3, 0.5});
    for (double alpha : {0.3, 0.5, 1.0, 1.5, 2.0}) {
        DivergenceValue v = classical_divergence(p, p, alpha);
        REQUIRE_FALSE(v.infinite);
        REQUIRE(v.value == Approx(0.0).margin(1e-14));
    }
}

TEST_CASE("classical divergence direct evaluations") {
    // ((1)^2 / (1/2) - 1) / 1 = 1
    DivergenceValue v = classical_divergence(ProbabilityVector({1.0, 0.0}),
                                             ProbabilityVector({0.5, 0.5}), 2.0);
    REQUIRE(v.value == Approx(1.0).margin(1e-14));

    // unsupported q at alpha >= 1 is the infinite sentinel
    REQUIRE(classical_divergence(ProbabilityVector({0.5, 0.5}), ProbabilityVector({1.0, 0.0}), 2.0)
                .infinite);
    REQUIRE(classical_divergence(ProbabilityVector({0.5, 0.5}), ProbabilityVector({1.0, 0.0}), 1.0)
                .infinite);
    // but contributes nothing below alpha = 1
    DivergenceValue below =
        classical_divergence(ProbabilityVector({0.5, 0.5}), ProbabilityVector({1.0, 0.0}), 0.5);
    REQUIRE_FALSE(below.infinite);
    REQUIRE(below.value == Approx((std::sqrt(0.5) - 1.0) / (-0.5)).margin(1e-14));

    REQUIRE_THROWS_AS(
        classical_divergence(ProbabilityVector({1.0}), ProbabilityVector({0.5, 0.5}), 2.0),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        classical_divergence(ProbabilityVector({1.0}), ProbabilityVector({1.0}), 0.0),
        std::invalid_argument);
}

TEST_CASE("alpha = 1 branch matches the entropic formula") {
    ProbabilityVector p({0.7, 0.3});
    ProbabilityVector q({0.4, 0.6});
    const double expected = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
    REQUIRE(classical_divergence(p, q, 1.0).value == Approx(expected).margin(1e-14));
    // just inside the dispatch window
    REQUIRE(classical_divergence(p, q, 1.0 + 5e-7).value == Approx(expected).margin(1e-12));
    // just outside: continuous in alpha
    REQUIRE(classical_divergence(p, q, 1.0 + 1e-5).value == Approx(expected).margin(1e-4));
}

TEST_CASE("quantum self-divergence vanishes") {
    DensityMatrix rho = random_density(3, 3, 2);
    for (double alpha : {0.3, 1.0, 1.7})
        REQUIRE(quantum_divergence(rho.hermitian(), rho.hermitian(), alpha).value ==
                Approx(0.0).margin(1e-12));
}

TEST_CASE("commuting diagonal inputs reproduce the classical formula") {
    std::mt19937_64 gen(5);
    std::exponential_distribution<double> expo(1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> p(3), q(3);
        double np = 0, nq = 0;
        for (int i = 0; i < 3; ++i) {
            p[static_cast<std::size_t>(i)] = expo(gen);
            q[static_cast<std::size_t>(i)] = expo(gen);
            np += p[static_cast<std::size_t>(i)];
            nq += q[static_cast<std::size_t>(i)];
        }
        for (auto& x : p) x /= np;
        for (auto& x : q) x /= nq;
        ComplexMatrix dp = ComplexMatrix::Zero(3, 3), dq = ComplexMatrix::Zero(3, 3);
        for (int i = 0; i < 3; ++i) {
            dp(i, i) = p[static_cast<std::size_t>(i)];
            dq(i, i) = q[static_cast<std::size_t>(i)];
        }
        for (double alpha : {0.5, 1.0, 2.0}) {
            // independent scalar evaluation
            double expected;
            if (alpha == 1.0) {
                expected = 0.0;
                for (int i = 0; i < 3; ++i)
                    expected += p[static_cast<std::size_t>(i)] *
                                std::log(p[static_cast<std::size_t>(i)] / q[static_cast<std::size_t>(i)]);
            } else {
                double sum = 0.0;
                for (int i = 0; i < 3; ++i)
                    sum += std::pow(p[static_cast<std::size_t>(i)], alpha) *
                           std::pow(q[static_cast<std::size_t>(i)], 1.0 - alpha);
                expected = (sum - 1.0) / (alpha - 1.0);
            }
            REQUIRE(quantum_divergence(HermitianOperator(dp), HermitianOperator(dq), alpha).value ==
                    Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("scaling identity at lambda = 0.37") {
    DensityMatrix a = random_density(3, 3, 7);
    DensityMatrix b = random_density(3, 3, 8);
    const double lambda = 0.37;
    for (double alpha : {0.5, 1.0, 2.0}) {
        const double base = quantum_divergence(a.hermitian(), b.hermitian(), alpha).value;
        const double scaled =
            quantum_divergence(HermitianOperator(lambda * a.matrix()),
                               HermitianOperator(lambda * b.matrix()), alpha)
                .value;
        REQUIRE(scaled == Approx(lambda * base).margin(1e-12));
    }
}

TEST_CASE("support condition drives the infinite sentinel") {
    DensityMatrix pure = random_density(3, 1, 3);
    DensityMatrix other = random_density(3, 1, 4);
    // generic pure states have incompatible supports
    REQUIRE(quantum_divergence(other.hermitian(), pure.hermitian(), 1.5).infinite);
    REQUIRE(quantum_divergence(other.hermitian(), pure.hermitian(), 1.0).infinite);
    // below alpha = 1 the expression is used without the condition
    DivergenceValue v = quantum_divergence(other.hermitian(), pure.hermitian(), 0.5);
    REQUIRE_FALSE(v.infinite);
    REQUIRE(std::isfinite(v.value));

    REQUIRE_THROWS_AS(
        quantum_divergence(pure.hermitian(), HermitianOperator(ComplexMatrix::Identity(2, 2)), 1.0),
        std::invalid_argument);
}

TEST_CASE("non-negativity and faithfulness on density inputs") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        DensityMatrix a = random_density(3, 3, 40 + s);
        DensityMatrix b = random_density(3, 3, 80 + s);
        for (double alpha : {0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0}) {
            DivergenceValue v = quantum_divergence(a.hermitian(), b.hermitian(), alpha);
            REQUIRE(v.value >= -kDivTol);
            REQUIRE(v.value > 1e-8);  // distinct random states stay separated
        }
    }
}

TEST_CASE("property suites: scaling, additivity, monotonicity, joint convexity") {
    PropertyReport scaling = property_check("scaling", {2, 3}, {}, 40, 1);
    INFO(scaling.worst_case);
    REQUIRE(scaling.pass);

    PropertyReport additivity = property_check("additivity", {2, 3}, {}, 30, 2);
    INFO(additivity.worst_case);
    REQUIRE(additivity.pass);

    PropertyReport mono = property_check("divergence-monotonicity", {2, 3}, {}, 40, 3);
    INFO(mono.worst_case);
    REQUIRE(mono.pass);

    PropertyReport convex = property_check("joint-convexity", {2, 3}, {}, 40, 4);
    INFO(convex.worst_case);
    REQUIRE(convex.pass);
}

TEST_CASE("monotonicity suite rejects alpha beyond 2") {
    REQUIRE_THROWS_AS(property_check("divergence-monotonicity", {2}, {3.0}, 5, 1),
                      std::invalid_argument);
}
