#include "crscope/numerics.hpp"

#include <Eigen/SVD>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace crscope {

Tolerance::Tolerance(double rank, double eig) : rank_tol(rank), eig_tol(eig) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0) || !(eig_tol > 0.0 && eig_tol < 1.0)) {
        throw InputError("Tolerance: rank_tol and eig_tol must lie in (0, 1)");
    }
}

bool all_finite(const RealMatrix& m) { return m.allFinite(); }
bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

RealMatrix realify(const ComplexMatrix& m) {
    const Index p = m.rows(), q = m.cols();
    RealMatrix out(2 * p, 2 * q);
    out.topLeftCorner(p, q) = m.real();
    out.topRightCorner(p, q) = -m.imag();
    out.bottomLeftCorner(p, q) = m.imag();
    out.bottomRightCorner(p, q) = m.real();
    return out;
}

namespace {

template <typename Mat>
RealVector svd_values(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return RealVector(0);
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues();
}

template <typename Mat>
Index rank_impl(const Mat& m, const Tolerance& tol) {
    if (m.size() == 0) throw InputError("numeric_rank: empty matrix");
    if (!all_finite(m)) throw InputError("numeric_rank: non-finite entries");
    const RealVector sv = svd_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = tol.rank_tol * sv(0);
    Index r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return r;
}

}  // namespace

Index numeric_rank(const RealMatrix& m, const Tolerance& tol) { return rank_impl(m, tol); }
Index numeric_rank(const ComplexMatrix& m, const Tolerance& tol) { return rank_impl(m, tol); }

RealVector singular_values(const RealMatrix& m) { return svd_values(m); }
RealVector singular_values(const ComplexMatrix& m) { return svd_values(m); }

double rank_margin(const RealMatrix& m, const Tolerance& tol) {
    const RealVector sv = svd_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return std::numeric_limits<double>::infinity();
    const double cutoff = tol.rank_tol * sv(0);
    double margin = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < sv.size(); ++i) {
        const double s = sv(i);
        margin = std::min(margin, s > cutoff ? s / cutoff : cutoff / std::max(s, 1e-300));
    }
    return margin;
}

double hermitian_deviation(const ComplexMatrix& h) {
    const double scale = std::max(1.0, h.norm());
    return (h - h.adjoint()).norm() / scale;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw InputError("hermitian_eigenvalues: matrix not square");
    if (!all_finite(h)) throw InputError("hermitian_eigenvalues: non-finite entries");
    if (h.rows() == 0) return RealVector(0);
    if (hermitian_deviation(h) > 1e-10) {
        throw InputError("hermitian_eigenvalues: input is not Hermitian within 1e-10");
    }
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Signature signature_of_eigenvalues(const RealVector& eigs, double eig_tol) {
    double scale = 0.0;
    for (Index i = 0; i < eigs.size(); ++i) scale = std::max(scale, std::abs(eigs(i)));
    const double band = eig_tol * scale;
    Signature s;
    for (Index i = 0; i < eigs.size(); ++i) {
        if (eigs(i) > band) ++s.pos;
        else if (eigs(i) < -band) ++s.neg;
        else ++s.zero;
    }
    return s;
}

Signature signature(const ComplexMatrix& h, const Tolerance& tol) {
    return signature_of_eigenvalues(hermitian_eigenvalues(h), tol.eig_tol);
}

namespace {

RealMatrix rotation_block(Index g) {
    RealMatrix b = RealMatrix::Zero(2 * g, 2 * g);
    b.topRightCorner(g, g) = -RealMatrix::Identity(g, g);
    b.bottomLeftCorner(g, g) = RealMatrix::Identity(g, g);
    return b;
}

}  // namespace

RealMatrix standard_complex_structure(Index n_z, Index n_w, Index n_t) {
    if (n_z < 0 || n_w < 0 || n_t < 0 || n_z + n_w + n_t == 0) {
        throw InputError("standard_complex_structure: counts must be nonnegative, not all zero");
    }
    const Index n = n_z + n_w + n_t;
    RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
    Index off = 0;
    for (Index g : {n_z, n_w, n_t}) {
        if (g == 0) continue;
        j.block(off, off, 2 * g, 2 * g) = rotation_block(g);
        off += 2 * g;
    }
    return j;
}

RealMatrix global_complex_structure(Index n) {
    if (n <= 0) throw InputError("global_complex_structure: n must be positive");
    return rotation_block(n);
}

RealMatrix grouped_to_global_permutation(Index n_z, Index n_w, Index n_t) {
    const Index n = n_z + n_w + n_t;
    if (n <= 0) throw InputError("grouped_to_global_permutation: empty coordinate list");
    // Grouped row order: x_z (n_z), y_z (n_z), x_w (n_w), y_w (n_w), x_t, y_t.
    // Global row order: all x (n), then all y (n).
    RealMatrix p = RealMatrix::Zero(2 * n, 2 * n);
    Index grouped = 0;
    Index var = 0;
    const Index groups[3] = {n_z, n_w, n_t};
    for (Index gi = 0; gi < 3; ++gi) {
        const Index g = groups[gi];
        for (Index i = 0; i < g; ++i) p(var + i, grouped + i) = 1.0;            // x rows
        for (Index i = 0; i < g; ++i) p(n + var + i, grouped + g + i) = 1.0;    // y rows
        grouped += 2 * g;
        var += g;
    }
    return p;
}

RealMatrix pseudo_inverse(const RealMatrix& m, const Tolerance& tol) {
    if (m.size() == 0) return RealMatrix(m.cols(), m.rows());
    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? tol.rank_tol * sv(0) : 0.0;
    RealVector inv = RealVector::Zero(sv.size());
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

ComplexMatrix kernel_basis(const ComplexMatrix& m, const Tolerance& tol) {
    if (m.cols() == 0) return ComplexMatrix(0, 0);
    if (m.rows() == 0) return ComplexMatrix::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const RealVector& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 && sv(0) > 0.0 ? tol.rank_tol * sv(0) : 0.0;
    Index r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace crscope
