#include "crscope/quadric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace crscope {

namespace {

void check_shape(const ComplexMatrix& m, Index rows, Index cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw InputError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
    if (!all_finite(m)) throw InputError(std::string(what) + ": non-finite entries");
}

double symmetric_deviation(const ComplexMatrix& m) {
    const double scale = std::max(1.0, m.norm());
    return (m - m.transpose()).norm() / scale;
}

}  // namespace

Quadric::Quadric(Index m_, Index h_, Index p_, std::vector<ComplexMatrix> H_,
                 std::vector<ComplexMatrix> B_, std::vector<ComplexMatrix> C_,
                 std::vector<ComplexMatrix> D_)
    : m(m_), h(h_), p(p_), H(std::move(H_)), B(std::move(B_)), C(std::move(C_)),
      D(std::move(D_)) {
    if (m < 1 || h < 0 || p < 0) throw InputError("Quadric: need m >= 1, h >= 0, p >= 0");
    if (static_cast<Index>(H.size()) != h) throw InputError("Quadric: need h matrices H_j");
    if (static_cast<Index>(B.size()) != p || static_cast<Index>(C.size()) != p ||
        static_cast<Index>(D.size()) != p) {
        throw InputError("Quadric: need p matrices each of B, C, D");
    }
    for (const auto& Hj : H) {
        check_shape(Hj, m, m, "Quadric H_j");
        if (hermitian_deviation(Hj) > 1e-10) {
            throw InputError("Quadric: H_j is not Hermitian within 1e-10");
        }
    }
    for (const auto& Bi : B) check_shape(Bi, m, m, "Quadric B_i");
    for (const auto& Ci : C) {
        check_shape(Ci, m, m, "Quadric C_i");
        if (symmetric_deviation(Ci) > 1e-10) {
            throw InputError("Quadric: C_i is not symmetric within 1e-10");
        }
    }
    for (const auto& Di : D) check_shape(Di, m, h, "Quadric D_i");
}

LambdaMap::LambdaMap(ComplexMatrix B_, ComplexMatrix C_, ComplexMatrix D_)
    : B(std::move(B_)), C(std::move(C_)), D(std::move(D_)) {
    const Index mm = B.rows();
    check_shape(B, mm, mm, "LambdaMap B");
    check_shape(C, mm, mm, "LambdaMap C");
    if (symmetric_deviation(C) > 1e-10) throw InputError("LambdaMap: C is not symmetric");
    check_shape(D, mm, D.cols(), "LambdaMap D");
}

RealMatrix lambda_real_matrix(const LambdaMap& l) {
    const Index mm = l.m(), hh = l.h();
    const RealMatrix F = l.B.real(), G = l.B.imag();
    const RealMatrix P = l.C.real(), Q = l.C.imag();
    const RealMatrix R = l.D.real(), S = l.D.imag();
    RealMatrix out(2 * mm, 2 * mm + hh);
    out.block(0, 0, mm, mm) = F + P;
    out.block(0, mm, mm, mm) = Q - G;
    out.block(0, 2 * mm, mm, hh) = R;
    out.block(mm, 0, mm, mm) = G + Q;
    out.block(mm, mm, mm, mm) = F - P;
    out.block(mm, 2 * mm, mm, hh) = S;
    return out;
}

TransversalityReport is_transversal_origin(const Quadric& q, const Tolerance& tol) {
    if (q.p < 1) throw InputError("is_transversal_origin: quadric has no t-equation");
    TransversalityReport rep;
    RealMatrix stacked(2 * q.m * q.p, 2 * q.m + q.h);
    for (Index i = 0; i < q.p; ++i) {
        const LambdaMap l(q.B[static_cast<std::size_t>(i)], q.C[static_cast<std::size_t>(i)],
                          q.D[static_cast<std::size_t>(i)]);
        const RealMatrix mat = lambda_real_matrix(l);
        EquationTransversality et;
        et.rank = numeric_rank(mat, tol);
        et.transversal = et.rank == 2 * q.m;
        rep.per_equation.push_back(et);
        stacked.middleRows(2 * q.m * i, 2 * q.m) = mat;
    }
    rep.combined_rank = numeric_rank(stacked, tol);
    rep.combined_transversal = rep.combined_rank == std::min<Index>(2 * q.m * q.p, 2 * q.m + q.h);
    rep.combined_is_extension = q.p > 1;
    rep.transversal = std::all_of(rep.per_equation.begin(), rep.per_equation.end(),
                                  [](const EquationTransversality& e) { return e.transversal; });
    return rep;
}

KernelCRType kernel_cr_type(const ComplexMatrix& B, const ComplexMatrix& C,
                            const Tolerance& tol) {
    const Index mm = B.rows();
    check_shape(B, mm, mm, "kernel_cr_type B");
    check_shape(C, mm, mm, "kernel_cr_type C");
    if (symmetric_deviation(C) > 1e-10) throw InputError("kernel_cr_type: C is not symmetric");
    ComplexMatrix stack(2 * mm, mm);
    stack.topRows(mm) = B;
    stack.bottomRows(mm) = C.conjugate();
    const Index r = mm - numeric_rank(stack, tol);
    const LambdaMap l(B, C, ComplexMatrix(mm, 0));
    const Index real_kernel = 2 * mm - numeric_rank(lambda_real_matrix(l), tol);
    const Index s = real_kernel - 2 * r;
    if (s < 0) {
        throw DegeneracyError("kernel_cr_type: real kernel smaller than twice the complex one");
    }
    return {r, s};
}

std::vector<ComplexVector> singular_residual(const Quadric& q, const ComplexVector& z,
                                             const RealVector& v) {
    if (z.size() != q.m) throw InputError("singular_residual: |z| != m");
    if (v.size() != q.h) throw InputError("singular_residual: |v| != h");
    // 2 u_a = z* H_a z on the quadric.
    RealVector hz(q.h);
    for (Index a = 0; a < q.h; ++a) {
        hz(a) = (z.adjoint() * q.H[static_cast<std::size_t>(a)] * z).value().real();
    }
    std::vector<ComplexVector> out;
    out.reserve(static_cast<std::size_t>(q.p));
    for (Index i = 0; i < q.p; ++i) {
        const auto& Bi = q.B[static_cast<std::size_t>(i)];
        const auto& Ci = q.C[static_cast<std::size_t>(i)];
        const auto& Di = q.D[static_cast<std::size_t>(i)];
        ComplexVector res = Bi * z + Ci * z.conjugate();
        if (q.h > 0) {
            res += Di * v.cast<Complex>();
            res += Complex(0.0, 0.5) * (Di.conjugate() * hz.cast<Complex>());
        }
        out.push_back(std::move(res));
    }
    return out;
}

namespace {

// Residual as a real map R^{2m+h} -> R^{2mp}. The map is linear plus the
// quadratic conj(D) (z* H z) term, so the Jacobian is exact.
struct ResidualSystem {
    const Quadric& q;

    RealVector value(const RealVector& xyv) const {
        const Index m = q.m, h = q.h;
        ComplexVector z(m);
        for (Index i = 0; i < m; ++i) z(i) = Complex(xyv(i), xyv(m + i));
        const RealVector v = xyv.segment(2 * m, h);
        const auto res = singular_residual(q, z, v);
        RealVector out(2 * m * q.p);
        for (Index i = 0; i < q.p; ++i) {
            out.segment(2 * m * i, m) = res[static_cast<std::size_t>(i)].real();
            out.segment(2 * m * i + m, m) = res[static_cast<std::size_t>(i)].imag();
        }
        return out;
    }

    RealMatrix jacobian(const RealVector& xyv) const {
        const Index m = q.m, h = q.h;
        ComplexVector z(m);
        for (Index i = 0; i < m; ++i) z(i) = Complex(xyv(i), xyv(m + i));
        // d(z* H_a z) along x_j is 2 Re((H_a z)_j), along y_j is 2 Im((H_a z)_j).
        RealMatrix dhz_dx(h, m), dhz_dy(h, m);
        for (Index a = 0; a < h; ++a) {
            const ComplexVector hz = q.H[static_cast<std::size_t>(a)] * z;
            dhz_dx.row(a) = 2.0 * hz.real().transpose();
            dhz_dy.row(a) = 2.0 * hz.imag().transpose();
        }
        RealMatrix jac(2 * m * q.p, 2 * m + h);
        const Complex ihalf(0.0, 0.5);
        for (Index i = 0; i < q.p; ++i) {
            const auto& Bi = q.B[static_cast<std::size_t>(i)];
            const auto& Ci = q.C[static_cast<std::size_t>(i)];
            const auto& Di = q.D[static_cast<std::size_t>(i)];
            ComplexMatrix dres_dx = Bi + Ci;
            ComplexMatrix dres_dy = Complex(0, 1) * (Bi - Ci);
            if (h > 0) {
                dres_dx += ihalf * (Di.conjugate() * dhz_dx.cast<Complex>());
                dres_dy += ihalf * (Di.conjugate() * dhz_dy.cast<Complex>());
            }
            jac.block(2 * m * i, 0, m, m) = dres_dx.real();
            jac.block(2 * m * i + m, 0, m, m) = dres_dx.imag();
            jac.block(2 * m * i, m, m, m) = dres_dy.real();
            jac.block(2 * m * i + m, m, m, m) = dres_dy.imag();
            if (h > 0) {
                jac.block(2 * m * i, 2 * m, m, h) = Di.real();
                jac.block(2 * m * i + m, 2 * m, m, h) = Di.imag();
            }
        }
        return jac;
    }
};

std::vector<std::vector<Index>> single_linkage(const std::vector<RealVector>& pts,
                                               double radius) {
    const Index n = static_cast<Index>(pts.size());
    std::vector<Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Index{0});
    std::function<Index(Index)> find = [&](Index a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    const double r2 = radius * radius;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if ((pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)])
                    .squaredNorm() <= r2) {
                const Index ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<std::size_t>(ri)] = rj;
            }
        }
    }
    std::vector<std::vector<Index>> groups;
    std::vector<Index> root_of(static_cast<std::size_t>(n), -1);
    for (Index i = 0; i < n; ++i) {
        const Index r = find(i);
        Index g = root_of[static_cast<std::size_t>(r)];
        if (g < 0) {
            g = static_cast<Index>(groups.size());
            root_of[static_cast<std::size_t>(r)] = g;
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(g)].push_back(i);
    }
    return groups;
}

// Cluster dimension: relative cutoff plus an absolute extent floor. Without
// the floor a single polished root reads as a full-dimensional cloud of
// Newton noise.
Index pca_rank(const std::vector<RealVector>& pts, double rel_cutoff, double extent_floor) {
    const Index n = static_cast<Index>(pts.size());
    if (n < 2) return 0;
    const Index d = pts.front().size();
    RealVector mean = RealVector::Zero(d);
    for (const auto& p : pts) mean += p;
    mean /= static_cast<double>(n);
    RealMatrix centered(n, d);
    for (Index i = 0; i < n; ++i) centered.row(i) = (pts[static_cast<std::size_t>(i)] - mean);
    const RealVector sv = singular_values(centered);
    if (sv.size() == 0 || sv(0) <= extent_floor) return 0;
    Index r = 0;
    while (r < sv.size() && sv(r) > std::max(rel_cutoff * sv(0), extent_floor)) ++r;
    return r;
}

}  // namespace

SingularLocusScan singular_locus_scan(const Quadric& q, const ParamBox& box, Index grid,
                                      const Tolerance& tol) {
    const Index dim = 2 * q.m + q.h;
    if (box.lo.size() != dim || box.hi.size() != dim) {
        throw InputError("singular_locus_scan: box must have dimension 2m+h");
    }
    if (grid < 2) throw InputError("singular_locus_scan: need grid >= 2 per axis");

    const ResidualSystem sys{q};
    double spacing = 0.0;
    for (Index a = 0; a < dim; ++a) {
        spacing = std::max(spacing, (box.hi(a) - box.lo(a)) / static_cast<double>(grid - 1));
    }
    const double scale = std::max(1.0, (box.hi - box.lo).norm());
    const double keep_tol = 1e-10 * scale;

    std::vector<RealVector> hits;
    Index total = 1;
    for (Index a = 0; a < dim; ++a) total *= grid;
    for (Index flat = 0; flat < total; ++flat) {
        Index rem = flat;
        RealVector x(dim);
        for (Index a = 0; a < dim; ++a) {
            const Index g = rem % grid;
            rem /= grid;
            x(a) = box.lo(a) + (box.hi(a) - box.lo(a)) * static_cast<double>(g) /
                                   static_cast<double>(grid - 1);
        }
        // Newton polishing with pseudo-inverse steps. Iterate well below the
        // acceptance threshold so the transverse spread of the polished cloud
        // stays under the PCA cutoff.
        RealVector y = x;
        for (int it = 0; it < 20; ++it) {
            const RealVector f = sys.value(y);
            if (f.norm() < 1e-13 * scale) break;
            const RealVector step = pseudo_inverse(sys.jacobian(y), tol) * f;
            if (!step.allFinite()) break;
            y -= step;
            if (step.norm() < 1e-15 * scale) break;
        }
        if (sys.value(y).norm() >= keep_tol) continue;
        // Stay near the box: polished roots that ran away belong to other
        // sheets of the zero set.
        bool inside = true;
        for (Index a = 0; a < dim; ++a) {
            const double pad = 0.5 * (box.hi(a) - box.lo(a)) + spacing;
            const double mid = 0.5 * (box.hi(a) + box.lo(a));
            if (std::abs(y(a) - mid) > pad) inside = false;
        }
        if (inside) hits.push_back(y);
    }

    SingularLocusScan scan;
    scan.total_points = static_cast<Index>(hits.size());
    for (const auto& group : single_linkage(hits, 2.0 * spacing)) {
        SingularCluster cluster;
        for (Index i : group) cluster.points.push_back(hits[static_cast<std::size_t>(i)]);
        cluster.dim = pca_rank(cluster.points, tol.rank_tol, 1e-3 * spacing);
        scan.clusters.push_back(std::move(cluster));
    }
    std::sort(scan.clusters.begin(), scan.clusters.end(),
              [](const SingularCluster& a, const SingularCluster& b) {
                  return a.points.size() > b.points.size();
              });
    return scan;
}

HermitianPencil augmented_pencil(const Quadric& q) {
    std::vector<ComplexMatrix> mats = q.H;
    for (Index i = 0; i < q.p; ++i) {
        const auto& Bi = q.B[static_cast<std::size_t>(i)];
        mats.push_back(0.5 * (Bi + Bi.adjoint()));
        mats.push_back(Complex(0.0, 0.5) * (Bi.adjoint() - Bi));
    }
    if (mats.empty()) throw InputError("augmented_pencil: quadric has no equations");
    return HermitianPencil(q.m, std::move(mats));
}

GarrityResult garrity_matrix_Mk(Index n, double k, const Tolerance& tol) {
    if (n < 1) throw InputError("garrity_matrix_Mk: n must be positive");
    if (!(k > 0.0)) throw InputError("garrity_matrix_Mk: k must be positive");
    const Index s = 2 * n;
    ComplexMatrix r = ComplexMatrix::Zero(2 * s, 2 * s);
    r.topLeftCorner(s, s) = ComplexMatrix::Identity(s, s);
    r.bottomRightCorner(s, s) = -ComplexMatrix::Identity(s, s);
    r.topRightCorner(s, s) = Complex(0.0, k) * ComplexMatrix::Identity(s, s);
    r.bottomLeftCorner(s, s) = Complex(0.0, k) * ComplexMatrix::Identity(s, s);
    GarrityResult out;
    out.R = r;
    out.det = r.determinant();
    // Scale-aware zero test: the determinant of the k = 1 matrix vanishes
    // exactly; anything above tol * max(1, |k|^2)^{2n} counts as nonzero.
    const double scale = std::pow(std::max(1.0, k * k + 1.0), static_cast<double>(s));
    out.transversal = std::abs(out.det) > tol.rank_tol * scale;
    return out;
}

}  // namespace crscope
