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

#include "cohlab/spin_example.hpp"

#include <cmath>

namespace cohlab {

namespace {

ComplexMatrix pauli(char axis) {
    ComplexMatrix s(2, 2);
    switch (axis) {
        case 'x':
            s << 0, 1, 1, 0;
            break;
        case 'y':
            s << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        default:
            s << 1, 0, 0, -1;
            break;
    }
    return s;
}

ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix total_component(char axis) {
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix s = pauli(axis);
    return kron2(s, id2) + kron2(id2, s);
}

// Computational order |z0 z0>, |z0 z1>, |z1 z0>, |z1 z1> with
// sigma_z |z_j> = (-1)^j |z_j>.
ComplexVector ket(int i) {
    ComplexVector v = ComplexVector::Zero(4);
    v(i) = Complex(1, 0);
    return v;
}

}  // namespace

SpinExample build_spin_example() {
    ComplexMatrix sigma_total_z = total_component('z');

    const ComplexVector z00 = ket(0);
    const ComplexVector z01 = ket(1);
    const ComplexVector z10 = ket(2);
    const ComplexVector z11 = ket(3);
    const ComplexVector zzp = (z01 + z10) / std::sqrt(2.0);
    const ComplexVector zzm = (z01 - z10) / std::sqrt(2.0);

    // Blocks ordered by ascending eigenvalue of the observable: -2, 0, +2.
    ComplexMatrix pi_middle = z01 * z01.adjoint() + z10 * z10.adjoint();
    ProjectorDecomposition decomposition({HermitianOperator(z11 * z11.adjoint()),
                                          HermitianOperator(std::move(pi_middle)),
                                          HermitianOperator(z00 * z00.adjoint())});

    ComplexMatrix total_sq = ComplexMatrix::Zero(4, 4);
    for (char axis : {'x', 'y', 'z'}) {
        ComplexMatrix c = total_component(axis);
        total_sq += c * c;
    }
    ComplexMatrix refinement_obs = sigma_total_z + 0.5 * total_sq;

    ComplexMatrix vectors(4, 4);
    vectors.col(0) = z00;
    vectors.col(1) = zzp;
    vectors.col(2) = z11;
    vectors.col(3) = zzm;
    // Block labels match the decomposition order (-2, 0, +2).
    OrthonormalBasis refinement(std::move(vectors),
                                std::vector<std::pair<int, int>>{{2, 0}, {1, 0}, {0, 0}, {1, 1}});

    return SpinExample{HermitianOperator(std::move(sigma_total_z)), std::move(decomposition),
                       HermitianOperator(std::move(refinement_obs)), std::move(refinement)};
}

double spin_refinement_to_observable(double refinement_eigenvalue) {
    const long v = std::lround(refinement_eigenvalue);
    switch (v) {
        case 6: return 2.0;
        case 4: return 0.0;
        case 2: return -2.0;
        case 0: return 0.0;
        default:
            throw std::invalid_argument("spin_refinement_to_observable: not in {6, 4, 2, 0}");
    }
}

std::pair<DensityMatrix, DensityMatrix> spin_reductions(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("spin_reductions: need a two-qubit state");
    SpinExample ex = build_spin_example();
    return {vonneumann_apply(ex.refinement, rho), luders_apply(ex.decomposition, rho)};
}

namespace {

double binary_entropy(double u) {
    double h = 0.0;
    if (u > 0.0) h -= u * std::log(u);
    if (u < 1.0) h -= (1.0 - u) * std::log(1.0 - u);
    return h;
}

void check_block_state(double u, Complex v) {
    if (!(u >= 0.0) || !(u <= 1.0))
        throw std::invalid_argument("spin block state: u must lie in [0, 1]");
    if (std::abs(v) > std::sqrt(u * (1.0 - u)) + 1e-12)
        throw std::invalid_argument("spin block state: |v| exceeds sqrt(u (1 - u))");
}

}  // namespace

SpinDeltas spin_delta_closed_forms(double u, Complex v) {
    check_block_state(u, v);
    const double av = std::abs(v);
    const double det = u * (1.0 - u) - av * av;
    const double lambda_plus = 0.5 + std::sqrt(std::max(0.25 - det, 0.0));

    SpinDeltas out;
    out.l1 = 2.0 * av;
    out.relent = binary_entropy(u) - binary_entropy(lambda_plus);
    out.alpha2 = std::pow(std::sqrt(u * u + av * av) +
                              std::sqrt((1.0 - u) * (1.0 - u) + av * av),
                          2) -
                 1.0;
    out.robustness = 2.0 * av;
    if (u >= av && 1.0 - u >= av) out.weight = 2.0 * av;
    return out;
}

DensityMatrix spin_embed_middle_block(double u, Complex v) {
    check_block_state(u, v);
    SpinExample ex = build_spin_example();
    const ComplexVector zzp = ex.refinement.vector(1);
    const ComplexVector zzm = ex.refinement.vector(3);
    ComplexMatrix rho = u * (zzp * zzp.adjoint()) + (1.0 - u) * (zzm * zzm.adjoint()) +
                        v * (zzm * zzp.adjoint()) + std::conj(v) * (zzp * zzm.adjoint());
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

std::pair<double, Complex> spin_extract_middle_block(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("spin_extract_middle_block: need a two-qubit state");
    SpinExample ex = build_spin_example();
    const ComplexVector zzp = ex.refinement.vector(1);
    const ComplexVector zzm = ex.refinement.vector(3);
    const double u = (zzp.adjoint() * rho.matrix() * zzp)(0).real();
    const Complex v = (zzm.adjoint() * rho.matrix() * zzp)(0);
    return {u, v};
}

}  // namespace cohlab
