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

#include "cohlab/measurement.hpp"
#include "cohlab/spin_example.hpp"
#include "cohlab/usd.hpp"

using namespace cohlab;
using Catch::Approx;

TEST_CASE("spectral_projectors on the standard spectra") {
    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    ProjectorDecomposition p = spectral_projectors(HermitianOperator(sz));
    REQUIRE(p.block_count() == 2);
    REQUIRE(p.block_dims()[0] == 1);
    REQUIRE(p.block_dims()[1] == 1);

    SpinExample ex = build_spin_example();
    ProjectorDecomposition spin = spectral_projectors(ex.observable);
    REQUIRE(spin.block_count() == 3);
    REQUIRE(spin.block_dims()[0] == 1);
    REQUIRE(spin.block_dims()[1] == 2);
    REQUIRE(spin.block_dims()[2] == 1);

    ProjectorDecomposition trivial =
        spectral_projectors(HermitianOperator(ComplexMatrix::Identity(3, 3)));
    REQUIRE(trivial.block_count() == 1);
    REQUIRE(max_abs(trivial.projectors()[0].matrix() - ComplexMatrix::Identity(3, 3)) <= 1e-12);
}

TEST_CASE("decomposition validation") {
    ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
    REQUIRE_THROWS_AS(ProjectorDecomposition({HermitianOperator(half), HermitianOperator(half)}),
                      validation_error);
    ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
    e0(0, 0) = 1;
    REQUIRE_THROWS_AS(ProjectorDecomposition({HermitianOperator(e0)}), validation_error);
}

TEST_CASE("luders_apply is idempotent and trace preserving") {
    SpinExample ex = build_spin_example();
    DensityMatrix rho = random_density(4, 4, 3);
    DensityMatrix pinched = luders_apply(ex.decomposition, rho);
    REQUIRE(max_abs(luders_apply(ex.decomposition, pinched).matrix() - pinched.matrix()) <= 1e-10);
    REQUIRE(is_invariant(pinched, ex.decomposition, 1e-10));
    REQUIRE(pinched.matrix().trace().real() == Approx(1.0).margin(1e-12));
}

TEST_CASE("luders dephasing of |+><+|") {
    ComplexMatrix plus(2, 2);
    plus.setConstant(Complex(0.5, 0));
    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    ProjectorDecomposition p = spectral_projectors(HermitianOperator(sz));
    DensityMatrix out = luders_apply(p, DensityMatrix(plus));
    REQUIRE(max_abs(out.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("middle-block states are invariant under the block channel") {
    DensityMatrix rho = spin_embed_middle_block(0.6, Complex(0.2, 0.1));
    SpinExample ex = build_spin_example();
    REQUIRE(is_invariant(rho, ex.decomposition, 1e-12));
    REQUIRE_FALSE(is_invariant(rho, ex.refinement, 1e-6));
}

TEST_CASE("vonneumann_apply") {
    SpinExample ex = build_spin_example();

    // a state diagonal in the refinement basis is untouched
    ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
    const ComplexVector zzp = ex.refinement.vector(1);
    const ComplexVector z00 = ex.refinement.vector(0);
    diag = 0.3 * (z00 * z00.adjoint()) + 0.7 * (zzp * zzp.adjoint());
    DensityMatrix rho(diag);
    REQUIRE(max_abs(vonneumann_apply(ex.refinement, rho).matrix() - rho.matrix()) <= 1e-12);
    REQUIRE(is_invariant(rho, ex.refinement, 1e-10));

    // |z0 z1> splits evenly into the two middle projectors
    ComplexVector z01 = ComplexVector::Zero(4);
    z01(1) = 1;
    DensityMatrix offblock((z01 * z01.adjoint()));
    DensityMatrix out = vonneumann_apply(ex.refinement, offblock);
    const ComplexVector zzm = ex.refinement.vector(3);
    ComplexMatrix expected = 0.5 * (zzp * zzp.adjoint()) + 0.5 * (zzm * zzm.adjoint());
    REQUIRE(max_abs(out.matrix() - expected) <= 1e-12);

    // output commutes with every parent projector
    DensityMatrix rnd = random_density(4, 4, 8);
    DensityMatrix vn = vonneumann_apply(ex.refinement, rnd);
    SpinExample ex2 = build_spin_example();
    for (const auto& pj : ex2.decomposition.projectors())
        REQUIRE(max_abs(pj.matrix() * vn.matrix() - vn.matrix() * pj.matrix()) <= 1e-10);
}

TEST_CASE("refinement_basis respects blocks and optional rotations") {
    SpinExample ex = build_spin_example();
    OrthonormalBasis ref = refinement_basis(ex.decomposition);
    REQUIRE(basis_refines(ref, ex.decomposition));
    REQUIRE(ref.labels().has_value());

    // every output vector is fixed by its block projector
    for (Eigen::Index c = 0; c < ref.dim(); ++c) {
        const auto [j, beta] = (*ref.labels())[static_cast<std::size_t>(c)];
        const ComplexVector y = ref.vector(c);
        REQUIRE((ex.decomposition.projectors()[static_cast<std::size_t>(j)].matrix() * y - y)
                    .norm() <= 1e-10);
    }

    // rotating the middle block by the Hadamard-like mix moves its frame
    ComplexMatrix mix(2, 2);
    mix << 1, 1, 1, -1;
    mix /= std::sqrt(2.0);
    std::vector<std::optional<ComplexMatrix>> rotations(3);
    rotations[1] = mix;
    OrthonormalBasis rotated = refinement_basis(ex.decomposition, rotations);
    REQUIRE(basis_refines(rotated, ex.decomposition));
    REQUIRE(max_abs(rotated.vectors() - ref.vectors()) > 0.1);

    std::vector<std::optional<ComplexMatrix>> bad(3);
    bad[0] = mix;  // wrong dimension for a rank-one block
    REQUIRE_THROWS_AS(refinement_basis(ex.decomposition, bad), std::invalid_argument);
}

TEST_CASE("is_invariant classifies the textbook cases") {
    ComplexMatrix sz(2, 2);
    sz << 1, 0, 0, -1;
    ProjectorDecomposition p = spectral_projectors(HermitianOperator(sz));
    DensityMatrix mixed(ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2)));
    REQUIRE(is_invariant(mixed, p, 1e-12));

    ComplexMatrix plus(2, 2);
    plus.setConstant(Complex(0.5, 0));
    REQUIRE_FALSE(is_invariant(DensityMatrix(plus), p, 1e-6));
}

TEST_CASE("basis invariance implies block invariance") {
    SpinExample ex = build_spin_example();
    for (std::uint64_t s = 0; s < 10; ++s) {
        DensityMatrix rho = random_density(4, 4, 50 + s);
        DensityMatrix basis_fixed = vonneumann_apply(ex.refinement, rho);
        REQUIRE(is_invariant(basis_fixed, ex.refinement, 1e-10));
        REQUIRE(is_invariant(basis_fixed, ex.decomposition, 1e-10));
    }
}

TEST_CASE("naimark_completion of an orthonormal basis returns the basis") {
    ComplexMatrix u = random_unitary(3, 12);
    std::vector<ComplexVector> mu;
    for (Eigen::Index c = 0; c < 3; ++c) mu.push_back(u.col(c));
    NaimarkBasis nb = naimark_completion(RankOnePovm(std::move(mu)));
    REQUIRE(nb.extended_dim() == 3);
    REQUIRE(max_abs(nb.unitary() - u) == 0.0);
}

TEST_CASE("naimark_completion of the discrimination POVM") {
    UsdScenario sc = UsdScenario::from_eta(0.5);
    UsdSystem sys = usd_build(sc);
    NaimarkBasis completed = naimark_completion(sys.povm);

    REQUIRE(completed.extended_dim() == 3);
    // top block is the POVM matrix, bit for bit
    REQUIRE(max_abs(completed.top_block() - sys.povm.mu_matrix()) == 0.0);
    // the added row can differ from the published completion by a phase only
    ComplexMatrix published = sys.naimark.unitary();
    for (Eigen::Index c = 0; c < 3; ++c)
        REQUIRE(std::abs(completed.unitary()(2, c)) ==
                Approx(std::abs(published(2, c))).margin(1e-12));
}

TEST_CASE("povm completeness validation") {
    ComplexVector v(2);
    v << 1, 0;
    REQUIRE_THROWS_AS(RankOnePovm({v, v}), validation_error);
}

TEST_CASE("channel_from_projectors matches luders_apply") {
    SpinExample ex = build_spin_example();
    KrausChannel ch = channel_from_projectors(ex.decomposition);
    for (std::uint64_t s = 0; s < 8; ++s) {
        DensityMatrix rho = random_density(4, 4, 70 + s);
        REQUIRE(max_abs(apply_channel(ch, rho).matrix() -
                        luders_apply(ex.decomposition, rho).matrix()) <= 1e-12);
    }
}

TEST_CASE("random channels preserve the trace") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        KrausChannel ch(random_cptp(3, 3, 2, 90 + s));
        DensityMatrix rho = random_density(3, 3, 100 + s);
        REQUIRE(apply_channel(ch, rho).matrix().trace().real() == Approx(1.0).margin(1e-10));
    }
    std::vector<ComplexMatrix> broken{0.5 * ComplexMatrix::Identity(2, 2)};
    REQUIRE_THROWS_AS(KrausChannel(std::move(broken)), validation_error);
}

TEST_CASE("identity channel is the identity") {
    KrausChannel id({ComplexMatrix::Identity(3, 3)});
    DensityMatrix rho = random_density(3, 3, 110);
    REQUIRE(max_abs(apply_channel(id, rho).matrix() - rho.matrix()) == 0.0);
}
