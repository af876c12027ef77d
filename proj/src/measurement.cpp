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

#include "cohlab/measurement.hpp"

#include <cmath>

namespace cohlab {

ProjectorDecomposition::ProjectorDecomposition(std::vector<HermitianOperator> projectors)
    : projectors_(std::move(projectors)) {
    if (projectors_.empty())
        throw validation_error("ProjectorDecomposition: no projectors");
    const Eigen::Index d = projectors_.front().dim();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
        const ComplexMatrix& pj = projectors_[j].matrix();
        if (pj.rows() != d)
            throw validation_error("ProjectorDecomposition: mixed dimensions");
        if (max_abs(pj * pj - pj) > kEigTol)
            throw validation_error("ProjectorDecomposition: projector " + std::to_string(j) +
                                   " is not idempotent");
        for (std::size_t k = 0; k < j; ++k)
            if (max_abs(pj * projectors_[k].matrix()) > kCloseTol)
                throw validation_error("ProjectorDecomposition: blocks " + std::to_string(j) +
                                       " and " + std::to_string(k) + " overlap");
        sum += pj;
        block_dims_.push_back(static_cast<Eigen::Index>(std::llround(pj.trace().real())));
    }
    if (max_abs(sum - ComplexMatrix::Identity(d, d)) > kCloseTol)
        throw validation_error("ProjectorDecomposition: projectors do not sum to identity");
}

bool ProjectorDecomposition::is_rank_one() const {
    for (Eigen::Index bd : block_dims_)
        if (bd != 1) return false;
    return true;
}

OrthonormalBasis::OrthonormalBasis(ComplexMatrix vectors,
                                   std::optional<std::vector<std::pair<int, int>>> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
    if (vectors_.rows() != vectors_.cols())
        throw validation_error("OrthonormalBasis: need exactly dim vectors");
    ComplexMatrix gram = vectors_.adjoint() * vectors_;
    if (max_abs(gram - ComplexMatrix::Identity(vectors_.cols(), vectors_.cols())) > kCloseTol)
        throw validation_error("OrthonormalBasis: vectors are not orthonormal");
    if (labels_ && static_cast<Eigen::Index>(labels_->size()) != vectors_.cols())
        throw validation_error("OrthonormalBasis: label count mismatch");
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw validation_error("KrausChannel: empty Kraus list");
    const Eigen::Index din = kraus_.front().cols();
    const Eigen::Index dout = kraus_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(din, din);
    for (const auto& k : kraus_) {
        if (k.cols() != din || k.rows() != dout)
            throw validation_error("KrausChannel: mixed Kraus shapes");
        sum += k.adjoint() * k;
    }
    if (max_abs(sum - ComplexMatrix::Identity(din, din)) > kCloseTol)
        throw validation_error("KrausChannel: completeness relation violated");
}

RankOnePovm::RankOnePovm(std::vector<ComplexVector> mu_vectors) : mu_(std::move(mu_vectors)) {
    if (mu_.empty()) throw validation_error("RankOnePovm: empty vector set");
    const Eigen::Index d = mu_[0].size();
    if (static_cast<Eigen::Index>(mu_.size()) < d)
        throw validation_error("RankOnePovm: fewer outcomes than dimensions");
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& v : mu_) {
        if (v.size() != d) throw validation_error("RankOnePovm: mixed dimensions");
        sum += v * v.adjoint();
    }
    if (max_abs(sum - ComplexMatrix::Identity(d, d)) > kCloseTol)
        throw validation_error("RankOnePovm: completeness relation violated");
}

ComplexMatrix RankOnePovm::mu_matrix() const {
    ComplexMatrix m(dim(), static_cast<Eigen::Index>(mu_.size()));
    for (std::size_t j = 0; j < mu_.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = mu_[j];
    return m;
}

NaimarkBasis::NaimarkBasis(ComplexMatrix unitary, Eigen::Index principal_dim)
    : unitary_(std::move(unitary)), principal_dim_(principal_dim) {
    if (unitary_.rows() != unitary_.cols())
        throw validation_error("NaimarkBasis: matrix is not square");
    if (principal_dim_ < 1 || principal_dim_ > unitary_.rows())
        throw validation_error("NaimarkBasis: bad principal dimension");
    const Eigen::Index n = unitary_.rows();
    if (max_abs(unitary_.adjoint() * unitary_ - ComplexMatrix::Identity(n, n)) > kCloseTol)
        throw validation_error("NaimarkBasis: matrix is not unitary");
}

NaimarkBasis NaimarkBasis::rotate_ancilla(const ComplexMatrix& v) const {
    const Eigen::Index extra = extended_dim() - principal_dim_;
    if (v.rows() != extra || v.cols() != extra)
        throw std::invalid_argument("rotate_ancilla: rotation has wrong size");
    ComplexMatrix rotated = unitary_;
    rotated.bottomRows(extra) = v * unitary_.bottomRows(extra);
    return NaimarkBasis(std::move(rotated), principal_dim_);
}

ProjectorDecomposition spectral_projectors(const HermitianOperator& x, double degeneracy_tol) {
    EigenDecomposition ed = eig_hermitian(x);
    const Eigen::Index d = ed.eigenvalues.size();
    const double scale = std::max(1.0, ed.eigenvalues.cwiseAbs().maxCoeff());
    std::vector<HermitianOperator> projs;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= d; ++i) {
        // Single linkage: a new cluster opens when the gap to the previous
        // eigenvalue exceeds the relative tolerance.
        if (i == d || ed.eigenvalues(i) - ed.eigenvalues(i - 1) > degeneracy_tol * scale) {
            ComplexMatrix block = ed.eigenvectors.middleCols(start, i - start);
            ComplexMatrix pr = block * block.adjoint();
            projs.emplace_back(0.5 * (pr + pr.adjoint()));
            start = i;
        }
    }
    return ProjectorDecomposition(std::move(projs));
}

ProjectorDecomposition rank_one_decomposition(const OrthonormalBasis& b) {
    std::vector<HermitianOperator> projs;
    projs.reserve(static_cast<std::size_t>(b.dim()));
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
        const ComplexVector y = b.vector(j);
        ComplexMatrix pr = y * y.adjoint();
        projs.emplace_back(0.5 * (pr + pr.adjoint()));
    }
    return ProjectorDecomposition(std::move(projs));
}

DensityMatrix luders_apply(const ProjectorDecomposition& p, const DensityMatrix& rho) {
    if (p.dim() != rho.dim()) throw std::invalid_argument("luders_apply: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const auto& pj : p.projectors()) out += pj.matrix() * rho.matrix() * pj.matrix();
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

DensityMatrix vonneumann_apply(const OrthonormalBasis& b, const DensityMatrix& rho) {
    if (b.dim() != rho.dim()) throw std::invalid_argument("vonneumann_apply: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
        const ComplexVector y = b.vector(j);
        const double pj = (y.adjoint() * rho.matrix() * y)(0).real();
        out += pj * (y * y.adjoint());
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

namespace {

// Deterministic orthonormal frame of a projector's range.
ComplexMatrix block_frame(const HermitianOperator& projector, Eigen::Index expected) {
    EigenDecomposition ed = eig_hermitian(projector);
    ComplexMatrix frame(projector.dim(), expected);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i)
        if (ed.eigenvalues(i) > 0.5) frame.col(k++) = ed.eigenvectors.col(i);
    if (k != expected) throw validation_error("block_frame: rank mismatch");
    return frame;
}

}  // namespace

OrthonormalBasis refinement_basis(const ProjectorDecomposition& p,
                                  const std::vector<std::optional<ComplexMatrix>>& block_unitaries) {
    if (!block_unitaries.empty() && block_unitaries.size() != p.block_count())
        throw std::invalid_argument("refinement_basis: one unitary slot per block expected");
    const Eigen::Index d = p.dim();
    ComplexMatrix vectors(d, d);
    std::vector<std::pair<int, int>> labels;
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < p.block_count(); ++j) {
        const Eigen::Index bd = p.block_dims()[j];
        ComplexMatrix frame = block_frame(p.projectors()[j], bd);
        if (!block_unitaries.empty() && block_unitaries[j]) {
            const ComplexMatrix& u = *block_unitaries[j];
            if (u.rows() != bd || u.cols() != bd)
                throw std::invalid_argument("refinement_basis: block unitary " + std::to_string(j) +
                                            " has wrong dimension");
            if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(bd, bd)) > kCloseTol)
                throw std::invalid_argument("refinement_basis: block matrix " + std::to_string(j) +
                                            " is not unitary");
            frame = frame * u;
        }
        for (Eigen::Index beta = 0; beta < bd; ++beta) {
            vectors.col(col++) = frame.col(beta);
            labels.emplace_back(static_cast<int>(j), static_cast<int>(beta));
        }
    }
    return OrthonormalBasis(std::move(vectors), std::move(labels));
}

bool basis_refines(const OrthonormalBasis& b, const ProjectorDecomposition& p, double tol) {
    if (b.dim() != p.dim()) return false;
    for (Eigen::Index c = 0; c < b.dim(); ++c) {
        const ComplexVector y = b.vector(c);
        int hits = 0;
        for (const auto& pj : p.projectors()) {
            const double w = (y.adjoint() * pj.matrix() * y)(0).real();
            if (w > 1.0 - tol)
                ++hits;
            else if (w > tol)
                return false;  // vector straddles two blocks
        }
        if (hits != 1) return false;
    }
    return true;
}

bool is_invariant(const DensityMatrix& rho, const ProjectorDecomposition& p, double tol) {
    return max_abs(luders_apply(p, rho).matrix() - rho.matrix()) <= tol;
}

bool is_invariant(const DensityMatrix& rho, const OrthonormalBasis& b, double tol) {
    return max_abs(vonneumann_apply(b, rho).matrix() - rho.matrix()) <= tol;
}

NaimarkBasis naimark_completion(const RankOnePovm& povm) {
    const Eigen::Index d = povm.dim();
    const Eigen::Index n = static_cast<Eigen::Index>(povm.outcomes());
    ComplexMatrix u(n, n);
    u.topRows(d) = povm.mu_matrix();  // kept exactly as given

    Eigen::Index filled = d;
    for (Eigen::Index cand = 0; cand < n && filled < n; ++cand) {
        Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(n);
        row(cand) = Complex(1, 0);
        // Two Gram-Schmidt passes keep orthogonality at machine precision.
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index r = 0; r < filled; ++r)
                row -= (u.row(r).conjugate().cwiseProduct(row)).sum() * u.row(r);
        const double res = row.norm();
        if (res < kSupportTol) continue;
        u.row(filled++) = row / res;
    }
    if (filled != n)
        throw validation_error("naimark_completion: could not complete the basis");
    return NaimarkBasis(std::move(u), d);
}

KrausChannel channel_from_projectors(const ProjectorDecomposition& p) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(p.block_count());
    for (const auto& pj : p.projectors()) kraus.push_back(pj.matrix());
    return KrausChannel(std::move(kraus));
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
    if (ch.dim_in() != rho.dim()) throw std::invalid_argument("apply_channel: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
    for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace cohlab
