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

#include "cohlab/divergence.hpp"

#include <cmath>
#include <numeric>

namespace cohlab {

ProbabilityVector::ProbabilityVector(std::vector<double> entries) : entries_(std::move(entries)) {
    double sum = 0.0;
    for (double x : entries_) {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw validation_error("ProbabilityVector: negative or non-finite entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kTraceTol)
        throw validation_error("ProbabilityVector: sum " + std::to_string(sum));
}

DivergenceValue tsallis_divergence_raw(const std::vector<double>& p,
                                       const std::vector<double>& q, double alpha) {
    if (p.size() != q.size())
        throw std::invalid_argument("tsallis_divergence_raw: length mismatch");
    if (!(alpha > 0.0))
        throw std::invalid_argument("tsallis_divergence_raw: alpha must be positive");

    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        double sum = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] <= 0.0) continue;
            if (q[j] <= 0.0) return DivergenceValue::infinity();
            sum += p[j] * std::log(p[j] / q[j]);
        }
        return DivergenceValue::finite(sum);
    }

    double sum = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] <= 0.0) continue;
        if (q[j] <= 0.0) {
            if (alpha >= 1.0) return DivergenceValue::infinity();
            continue;  // q^(1-alpha) -> 0 for alpha < 1
        }
        sum += std::pow(p[j], alpha) * std::pow(q[j], 1.0 - alpha);
    }
    const double trace_p = std::accumulate(p.begin(), p.end(), 0.0);
    return DivergenceValue::finite((sum - trace_p) / (alpha - 1.0));
}

DivergenceValue classical_divergence(const ProbabilityVector& p, const ProbabilityVector& q,
                                     double alpha) {
    if (p.size() != q.size())
        throw std::invalid_argument("classical_divergence: length mismatch");
    return tsallis_divergence_raw(p.entries(), q.entries(), alpha);
}

namespace {

struct SupportInfo {
    ComplexMatrix projector;
    double threshold = 0.0;
    bool borderline = false;  // eigenvalues within a decade of the threshold
};

SupportInfo support_info(const EigenDecomposition& ed) {
    SupportInfo info;
    const Eigen::Index d = ed.eigenvalues.size();
    const double lmax = d > 0 ? std::max(ed.eigenvalues.maxCoeff(), 0.0) : 0.0;
    info.threshold = kSupportTol * lmax;
    info.projector = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lam = ed.eigenvalues(i);
        if (lam > info.threshold)
            info.projector += ed.eigenvectors.col(i) * ed.eigenvectors.col(i).adjoint();
        if (lam > 0.1 * info.threshold && lam < 10.0 * info.threshold) info.borderline = true;
    }
    return info;
}

ComplexMatrix map_spectrum(const EigenDecomposition& ed, double threshold,
                           const std::function<double(double)>& f) {
    RealVector mapped(ed.eigenvalues.size());
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        const double lam = ed.eigenvalues(i);
        mapped(i) = lam > threshold ? f(lam) : 0.0;
    }
    return ed.eigenvectors * mapped.asDiagonal() * ed.eigenvectors.adjoint();
}

}  // namespace

DivergenceValue quantum_divergence(const HermitianOperator& a, const HermitianOperator& b,
                                   double alpha) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("quantum_divergence: dimension mismatch");
    if (!(alpha > 0.0))
        throw std::invalid_argument("quantum_divergence: alpha must be positive");

    EigenDecomposition eda = eig_hermitian(a);
    EigenDecomposition edb = eig_hermitian(b);
    if (eda.eigenvalues.size() > 0 && eda.eigenvalues.minCoeff() < -kPsdTol)
        throw validation_error("quantum_divergence: first argument not PSD");
    if (edb.eigenvalues.size() > 0 && edb.eigenvalues.minCoeff() < -kPsdTol)
        throw validation_error("quantum_divergence: second argument not PSD");

    SupportInfo sb = support_info(edb);
    const double trace_a = a.matrix().trace().real();
    bool warn = sb.borderline;

    if (alpha >= 1.0 - kAlphaOneWindow) {
        // ran(A) <= ran(B) required; measure the leakage of A outside ran(B).
        const double leak =
            trace_a - (sb.projector * a.matrix() * sb.projector).trace().real();
        const double leak_tol = kSupportTol * std::max(trace_a, 1.0);
        if (leak > leak_tol) return DivergenceValue::infinity(warn);
        if (leak > 0.1 * leak_tol) warn = true;
    }

    if (std::abs(alpha - 1.0) < kAlphaOneWindow) {
        const double ta = kSupportTol * std::max(eda.eigenvalues.maxCoeff(), 0.0);
        ComplexMatrix log_a = map_spectrum(eda, ta, [](double l) { return std::log(l); });
        ComplexMatrix log_b = map_spectrum(edb, sb.threshold, [](double l) { return std::log(l); });
        const double v = (a.matrix() * (log_a - log_b)).trace().real();
        return DivergenceValue::finite(v, warn);
    }

    const double thr_a = kSupportTol * std::max(eda.eigenvalues.maxCoeff(), 0.0);
    ComplexMatrix a_pow =
        map_spectrum(eda, thr_a, [alpha](double l) { return std::pow(l, alpha); });
    ComplexMatrix b_pow =
        map_spectrum(edb, sb.threshold, [alpha](double l) { return std::pow(l, 1.0 - alpha); });
    const double t = (a_pow * b_pow).trace().real();
    return DivergenceValue::finite((t - trace_a) / (alpha - 1.0), warn);
}

double von_neumann_entropy(const HermitianOperator& a) {
    EigenDecomposition ed = eig_hermitian(a);
    double s = 0.0;
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        const double lam = ed.eigenvalues(i);
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s;
}

double shannon_entropy(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s -= x * std::log(x);
    return s;
}

}  // namespace cohlab
