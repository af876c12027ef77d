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
#include <complex>

#include "cohlab/hermitian.hpp"

using namespace cohlab;
using Catch::Approx;

namespace {

ComplexMatrix random_hermitian(Eigen::Index d, std::uint64_t seed) {
    ComplexMatrix g = random_unitary(d, seed) + 0.3 * random_unitary(d, seed + 1);
    return g + g.adjoint();
}

}  // namespace

TEST_CASE("constructor rejects non-Hermitian and non-square input") {
    ComplexMatrix bad(2, 2);
    bad << 1, Complex(0, 1), Complex(0, 1), 1;  // equal corners, not conjugate
    REQUIRE_THROWS_AS(HermitianOperator(bad), validation_error);
    REQUIRE_THROWS_AS(HermitianOperator(ComplexMatrix::Zero(2, 3)), validation_error);
}

TEST_CASE("density matrix invariants") {
    ComplexMatrix not_unit = 2.0 * ComplexMatrix::Identity(2, 2);
    REQUIRE_THROWS_AS(DensityMatrix(not_unit), validation_error);
    ComplexMatrix indefinite(2, 2);
    indefinite << 1.5, 0, 0, -0.5;
    REQUIRE_THROWS_AS(DensityMatrix(indefinite), validation_error);
    REQUIRE_NOTHROW(DensityMatrix(ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2))));
}

TEST_CASE("eig_hermitian identity and sigma_z spectra") {
    EigenDecomposition id = eig_hermitian(HermitianOperator(ComplexMatrix::Identity(2, 2)));
    REQUIRE(id.eigenvalues(0) == Approx(1.0));
    REQUIRE(id.eigenvalues(1) == Approx(1.0));

    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    EigenDecomposition ed = eig_hermitian(HermitianOperator(sz));
    REQUIRE(ed.eigenvalues(0) == Approx(-1.0));
    REQUIRE(ed.eigenvalues(1) == Approx(1.0));
}

TEST_CASE("eig_hermitian reconstruction on random input") {
    ComplexMatrix h = random_hermitian(4, 11);
    EigenDecomposition ed = eig_hermitian(HermitianOperator(h));
    ComplexMatrix rebuilt =
        ed.eigenvectors * ed.eigenvalues.asDiagonal() * ed.eigenvectors.adjoint();
    REQUIRE(max_abs(rebuilt - h) <= 1e-12);
    REQUIRE(max_abs(ed.eigenvectors.adjoint() * ed.eigenvectors -
                    ComplexMatrix::Identity(4, 4)) <= kEigTol);
}

TEST_CASE("eig_hermitian reconstruction across dims up to 16") {
    for (Eigen::Index d : {2, 3, 8, 16}) {
        ComplexMatrix h = random_hermitian(d, 100 + static_cast<std::uint64_t>(d));
        EigenDecomposition ed = eig_hermitian(HermitianOperator(h));
        ComplexMatrix rebuilt =
            ed.eigenvectors * ed.eigenvalues.asDiagonal() * ed.eigenvectors.adjoint();
        REQUIRE(max_abs(rebuilt - h) <= 1e-10);
        for (Eigen::Index i = 1; i < d; ++i) REQUIRE(ed.eigenvalues(i) >= ed.eigenvalues(i - 1));
    }
}

TEST_CASE("eig_hermitian is deterministic") {
    ComplexMatrix h = random_hermitian(5, 21);
    EigenDecomposition a = eig_hermitian(HermitianOperator(h));
    EigenDecomposition b = eig_hermitian(HermitianOperator(h));
    REQUIRE(max_abs(a.eigenvectors - b.eigenvectors) == 0.0);
}

TEST_CASE("matrix_power basics") {
    DensityMatrix rho = random_density(3, 3, 5);
    REQUIRE(max_abs(matrix_power(rho.hermitian(), 1.0).matrix() - rho.matrix()) <= 1e-12);

    // projector idempotence: a pure state is fixed by every power
    DensityMatrix pure = random_density(3, 1, 6);
    for (double alpha : {0.5, 2.0, 3.7})
        REQUIRE(max_abs(matrix_power(pure.hermitian(), alpha).matrix() - pure.matrix()) <= 1e-10);

    ComplexMatrix diag(2, 2);
    diag << 0.25, 0, 0, 0.75;
    ComplexMatrix root = matrix_power(HermitianOperator(diag), 0.5).matrix();
    REQUIRE(root(0, 0).real() == Approx(0.5).margin(1e-12));
    REQUIRE(root(1, 1).real() == Approx(0.8660254037844386).margin(1e-12));

    REQUIRE_THROWS_AS(matrix_power(rho.hermitian(), 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(matrix_power(rho.hermitian(), -1.0), std::invalid_argument);
}

TEST_CASE("matrix_power composition on PSD input") {
    DensityMatrix rho = random_density(4, 4, 7);
    ComplexMatrix via_chain =
        matrix_power(matrix_power(rho.hermitian(), 0.7), 1.3).matrix();
    ComplexMatrix direct = matrix_power(rho.hermitian(), 0.7 * 1.3).matrix();
    REQUIRE(max_abs(via_chain - direct) <= 1e-9);
}

TEST_CASE("matrix_log_support") {
    REQUIRE(max_abs(matrix_log_support(HermitianOperator(ComplexMatrix::Identity(3, 3))).matrix()) <=
            1e-12);

    ComplexMatrix m(2, 2);
    m << std::exp(1.0), 0, 0, 1.0;
    ComplexMatrix lg = matrix_log_support(HermitianOperator(m)).matrix();
    REQUIRE(lg(0, 0).real() == Approx(1.0).margin(1e-12));
    REQUIRE(lg(1, 1).real() == Approx(0.0).margin(1e-12));

    ComplexMatrix k(3, 3);
    k.setZero();
    k(0, 0) = 0.5;
    k(1, 1) = 0.5;
    ComplexMatrix lk = matrix_log_support(HermitianOperator(k)).matrix();
    REQUIRE(lk(0, 0).real() == Approx(std::log(0.5)).margin(1e-12));
    REQUIRE(lk(1, 1).real() == Approx(std::log(0.5)).margin(1e-12));
    REQUIRE(std::abs(lk(2, 2)) <= 1e-12);
}

TEST_CASE("ell1_norm") {
    REQUIRE(ell1_norm(ComplexMatrix::Zero(3, 3)) == 0.0);

    ComplexMatrix sy(2, 2);
    sy << 0, Complex(0, 1), Complex(0, -1), 0;
    REQUIRE(ell1_norm(sy) == Approx(2.0));

    // qubit with off-diagonal v: stripping the diagonal leaves 2|v|
    const Complex v(0.21, -0.13);
    ComplexMatrix rho(2, 2);
    rho << 0.6, std::conj(v), v, 0.4;
    ComplexMatrix off = rho;
    off.diagonal().setZero();
    REQUIRE(ell1_norm(off) == Approx(2.0 * std::abs(v)).margin(1e-14));
}

TEST_CASE("ell1_norm triangle inequality and homogeneity") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        ComplexMatrix a = random_unitary(3, 2 * s) * 0.7;
        ComplexMatrix b = random_unitary(3, 2 * s + 1) * 1.3;
        REQUIRE(ell1_norm(a + b) <= ell1_norm(a) + ell1_norm(b) + 1e-12);
        REQUIRE(ell1_norm(ComplexMatrix(-2.5 * a)) == Approx(2.5 * ell1_norm(a)).margin(1e-12));
    }
}

TEST_CASE("support_projector") {
    DensityMatrix full = random_density(3, 3, 9);
    REQUIRE(max_abs(support_projector(full.hermitian()).matrix() -
                    ComplexMatrix::Identity(3, 3)) <= 1e-10);

    ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    REQUIRE(max_abs(support_projector(HermitianOperator(e0)).matrix() - e0) <= 1e-12);

    ComplexMatrix d(3, 3);
    d.setZero();
    d(0, 0) = 0.3;
    d(2, 2) = 0.7;
    ComplexMatrix pr = support_projector(HermitianOperator(d)).matrix();
    REQUIRE(pr(0, 0).real() == Approx(1.0));
    REQUIRE(std::abs(pr(1, 1)) <= 1e-12);
    REQUIRE(pr(2, 2).real() == Approx(1.0));

    // support projector reproduces the operator
    for (Eigen::Index rank : {1, 2, 3}) {
        DensityMatrix rho = random_density(3, rank, 30 + static_cast<std::uint64_t>(rank));
        ComplexMatrix sp = support_projector(rho.hermitian()).matrix();
        REQUIRE(max_abs(sp * rho.matrix() - rho.matrix()) <= 1e-10);
        REQUIRE(max_abs(sp * sp - sp) <= kEigTol);
    }
}

TEST_CASE("direct_sum_embed") {
    DensityMatrix rho = random_density(2, 2, 13);
    REQUIRE(max_abs(direct_sum_embed(rho, 0).matrix() - rho.matrix()) == 0.0);

    DensityMatrix big = direct_sum_embed(rho, 1);
    REQUIRE(big.dim() == 3);
    REQUIRE(max_abs(big.matrix().topLeftCorner(2, 2) - rho.matrix()) == 0.0);
    REQUIRE(big.matrix().row(2).cwiseAbs().sum() == 0.0);
    REQUIRE(big.matrix().col(2).cwiseAbs().sum() == 0.0);
    REQUIRE(big.matrix().trace().real() == Approx(1.0).margin(1e-14));
}

TEST_CASE("random_density rank and reproducibility") {
    DensityMatrix pure = random_density(2, 1, 42);
    EigenDecomposition ed = eig_hermitian(pure.hermitian());
    REQUIRE(ed.eigenvalues(0) == Approx(0.0).margin(1e-12));
    REQUIRE(ed.eigenvalues(1) == Approx(1.0).margin(1e-12));

    REQUIRE(max_abs(random_density(3, 2, 7).matrix() - random_density(3, 2, 7).matrix()) == 0.0);
    REQUIRE(max_abs(random_density(3, 2, 7).matrix() - random_density(3, 2, 8).matrix()) > 1e-3);
    REQUIRE_THROWS_AS(random_density(2, 3, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(random_density(2, 0, 1), std::invalid_argument);
}

TEST_CASE("random_unitary is unitary and seeded") {
    ComplexMatrix u = random_unitary(3, 3);
    REQUIRE(max_abs(u.adjoint() * u - ComplexMatrix::Identity(3, 3)) <= 1e-12);
    REQUIRE(max_abs(u - random_unitary(3, 3)) == 0.0);
}

TEST_CASE("random_cptp satisfies the completeness relation") {
    for (int n_kraus : {1, 2, 4}) {
        auto kraus = random_cptp(3, 3, n_kraus, 19 + static_cast<std::uint64_t>(n_kraus));
        ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
        for (const auto& k : kraus) sum += k.adjoint() * k;
        REQUIRE(max_abs(sum - ComplexMatrix::Identity(3, 3)) <= 1e-10);
    }
    REQUIRE_THROWS_AS(random_cptp(2, 2, 0, 1), std::invalid_argument);
}
