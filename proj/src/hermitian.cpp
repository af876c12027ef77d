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

#include "cohlab/hermitian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace cohlab {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw validation_error("HermitianOperator: matrix is not square");
    if (!mat_.allFinite())
        throw validation_error("HermitianOperator: non-finite entries");
    const double dev = max_abs(mat_ - mat_.adjoint());
    if (dev > kHermTol)
        throw validation_error("HermitianOperator: Hermiticity deviation " + std::to_string(dev));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : DensityMatrix(HermitianOperator(std::move(m))) {}

DensityMatrix::DensityMatrix(HermitianOperator h) : op_(std::move(h)) {
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw validation_error("DensityMatrix: trace " + std::to_string(tr));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op_.matrix(), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kPsdTol)
        throw validation_error("DensityMatrix: eigenvalue " +
                               std::to_string(solver.eigenvalues().minCoeff()));
}

namespace {

// Make the first significant component of each column real positive.
void fix_phases(ComplexMatrix& v) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const double colmax = v.col(j).cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < v.rows(); ++i) {
            const Complex x = v(i, j);
            if (std::abs(x) > 1e-12 * colmax) {
                v.col(j) *= std::conj(x) / std::abs(x);
                break;
            }
        }
    }
}

bool column_less(const ComplexMatrix& v, Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const Complex x = v(i, a), y = v(i, b);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianOperator& h) {
    // Symmetrize before solving; the constructor already bounded the deviation.
    ComplexMatrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw validation_error("eig_hermitian: eigensolver failed");

    EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
    fix_phases(out.eigenvectors);

    // Ties among exactly equal eigenvalues are ordered lexicographically.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(out.eigenvalues.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (out.eigenvalues(a) != out.eigenvalues(b))
            return out.eigenvalues(a) < out.eigenvalues(b);
        return column_less(out.eigenvectors, a, b);
    });
    RealVector vals(out.eigenvalues.size());
    ComplexMatrix vecs(out.eigenvectors.rows(), out.eigenvectors.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
        vals(static_cast<Eigen::Index>(k)) = out.eigenvalues(order[k]);
        vecs.col(static_cast<Eigen::Index>(k)) = out.eigenvectors.col(order[k]);
    }
    return {std::move(vals), std::move(vecs)};
}

namespace {

// Apply f to the clamped eigenvalues of a PSD operator.
HermitianOperator map_psd_eigenvalues(const HermitianOperator& a,
                                      const std::function<double(double)>& f,
                                      const char* who) {
    EigenDecomposition ed = eig_hermitian(a);
    if (ed.eigenvalues.size() > 0 && ed.eigenvalues.minCoeff() < -kPsdTol)
        throw validation_error(std::string(who) + ": operator is not positive semidefinite");
    RealVector mapped(ed.eigenvalues.size());
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
        mapped(i) = f(std::max(ed.eigenvalues(i), 0.0));
    ComplexMatrix m = ed.eigenvectors * mapped.asDiagonal() * ed.eigenvectors.adjoint();
    return HermitianOperator(0.5 * (m + m.adjoint()));
}

}  // namespace

HermitianOperator matrix_power(const HermitianOperator& a, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("matrix_power: alpha must be positive");
    // The numerical kernel maps to zero so that fractional powers do not
    // amplify eigenvalue fuzz of rank-deficient input.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> probe(a.matrix(), Eigen::EigenvaluesOnly);
    const double thr = kSupportTol * std::max(probe.eigenvalues().maxCoeff(), 0.0);
    return map_psd_eigenvalues(
        a, [alpha, thr](double lam) { return lam <= thr ? 0.0 : std::pow(lam, alpha); },
        "matrix_power");
}

HermitianOperator matrix_log_support(const HermitianOperator& a) {
    EigenDecomposition ed = eig_hermitian(a);
    if (ed.eigenvalues.size() > 0 && ed.eigenvalues.minCoeff() < -kPsdTol)
        throw validation_error("matrix_log_support: operator is not positive semidefinite");
    const double thr = kSupportTol * std::max(ed.eigenvalues.size() > 0 ? ed.eigenvalues.maxCoeff() : 0.0, 0.0);
    return map_psd_eigenvalues(
        a, [thr](double lam) { return lam > thr ? std::log(lam) : 0.0; }, "matrix_log_support");
}

double ell1_norm(const ComplexMatrix& a) { return a.cwiseAbs().sum(); }

HermitianOperator support_projector(const HermitianOperator& a) {
    EigenDecomposition ed = eig_hermitian(a);
    if (ed.eigenvalues.size() > 0 && ed.eigenvalues.minCoeff() < -kPsdTol)
        throw validation_error("support_projector: operator is not positive semidefinite");
    const double thr = kSupportTol * std::max(ed.eigenvalues.size() > 0 ? ed.eigenvalues.maxCoeff() : 0.0, 0.0);
    return map_psd_eigenvalues(
        a, [thr](double lam) { return lam > thr ? 1.0 : 0.0; }, "support_projector");
}

DensityMatrix direct_sum_embed(const DensityMatrix& rho, Eigen::Index extra) {
    if (extra < 0) throw std::invalid_argument("direct_sum_embed: extra must be >= 0");
    const Eigen::Index d = rho.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d + extra, d + extra);
    out.topLeftCorner(d, d) = rho.matrix();
    return DensityMatrix(std::move(out));
}

namespace {

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double re = normal(gen);
            const double im = normal(gen);
            g(i, j) = Complex(re, im);
        }
    return g;
}

}  // namespace

DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
    if (dim < 1 || rank < 1 || rank > dim)
        throw std::invalid_argument("random_density: need 1 <= rank <= dim");
    ComplexMatrix g = gaussian_matrix(dim, rank, seed);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random_unitary: dim must be >= 1");
    ComplexMatrix g = gaussian_matrix(dim, dim, seed);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase freedom of QR so the result depends only on g.
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= std::abs(rjj) > 0 ? rjj / std::abs(rjj) : Complex(1, 0);
    }
    return q;
}

std::vector<ComplexMatrix> random_cptp(Eigen::Index dim_in, Eigen::Index dim_out,
                                       int n_kraus, std::uint64_t seed) {
    if (dim_in < 1 || dim_out < 1 || n_kraus < 1)
        throw std::invalid_argument("random_cptp: invalid dimensions");
    const Eigen::Index big = dim_out * n_kraus;
    if (big < dim_in)
        throw std::invalid_argument("random_cptp: n_kraus * dim_out must be >= dim_in");
    ComplexMatrix isometry = random_unitary(big, seed).leftCols(dim_in);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(n_kraus));
    for (int i = 0; i < n_kraus; ++i)
        kraus.push_back(isometry.middleRows(i * dim_out, dim_out));
    return kraus;
}

ComplexVector random_pure_state(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random_pure_state: dim must be >= 1");
    ComplexVector v = gaussian_matrix(dim, 1, seed).col(0);
    return v / v.norm();
}

}  // namespace cohlab
