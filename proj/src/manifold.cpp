#include "crscope/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crscope/sampling.hpp"

namespace crscope {

ZPolynomial::ZPolynomial(ZZbarPoly p, int max_degree) : poly_(std::move(p)) {
    const double scale = std::max(1.0, poly_.max_coeff_magnitude());
    if (poly_.reality_defect() > 1e-10 * scale) {
        throw InputError("ZPolynomial: not real-valued (conjugate-closure violated)");
    }
    if (poly_.total_degree() > max_degree) {
        throw InputError("ZPolynomial: total degree " + std::to_string(poly_.total_degree()) +
                         " exceeds the configured maximum " + std::to_string(max_degree));
    }
}

double poly_eval(const ZPolynomial& f, const ComplexVector& z) {
    const Complex v = f.raw().eval(z);
    double magnitude_sum = 0.0;
    for (const auto& [key, c] : f.raw().terms()) magnitude_sum += std::abs(c);
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, magnitude_sum)) {
        throw InternalError("poly_eval: real-valued polynomial produced imaginary part " +
                            std::to_string(v.imag()));
    }
    return v.real();
}

WirtingerGradients wirtinger_gradients(const ZPolynomial& f, const ComplexVector& z) {
    return {eval_dz(f.raw(), z), eval_dzbar(f.raw(), z)};
}

ComplexMatrix complex_hessian(const ZPolynomial& f, const ComplexVector& z) {
    ComplexMatrix h = eval_mixed_hessian(f.raw(), z);
    return 0.5 * (h + h.adjoint());
}

CoordinateBox CoordinateBox::cube(Index n, double half_width) {
    CoordinateBox b;
    b.lo = RealVector::Constant(2 * n, -half_width);
    b.hi = RealVector::Constant(2 * n, half_width);
    return b;
}

ComplexVector CoordinateBox::center() const {
    const Index n = lo.size() / 2;
    ComplexVector c(n);
    for (Index i = 0; i < n; ++i) {
        c(i) = Complex(0.5 * (lo(i) + hi(i)), 0.5 * (lo(n + i) + hi(n + i)));
    }
    return c;
}

PatchDefinition::PatchDefinition(Index n, std::vector<ZPolynomial> rho, CoordinateBox box)
    : n_(n), rho_(std::move(rho)), box_(std::move(box)) {
    if (n_ <= 0) throw InputError("PatchDefinition: need at least one variable");
    if (rho_.empty()) throw InputError("PatchDefinition: need at least one defining function");
    for (const auto& r : rho_) {
        if (r.vars() != n_) throw InputError("PatchDefinition: variable count mismatch");
    }
    if (box_.lo.size() != 2 * n_ || box_.hi.size() != 2 * n_) {
        throw InputError("PatchDefinition: box must bound all 2n real coordinates");
    }
    if (((box_.hi - box_.lo).array() <= 0.0).any()) {
        throw InputError("PatchDefinition: box must have positive extent");
    }
}

RealVector PatchDefinition::residual(const ComplexVector& z) const {
    RealVector out(codim());
    for (Index j = 0; j < codim(); ++j) out(j) = poly_eval(rho_[static_cast<std::size_t>(j)], z);
    return out;
}

ComplexMatrix PatchDefinition::dbar_matrix(const ComplexVector& z) const {
    ComplexMatrix out(codim(), n_);
    for (Index j = 0; j < codim(); ++j) {
        out.row(j) = eval_dz(rho_[static_cast<std::size_t>(j)].raw(), z).transpose();
    }
    return out;
}

Index PatchDefinition::generic_dbar_rank(const Tolerance& tol) const {
    std::call_once(generic_cache_->flag, [&] {
        const auto pts = sample_points(*this, 32, /*seed=*/0x67e9a1b3u, tol);
        Index best = 0;
        for (const auto& z : pts) best = std::max(best, numeric_rank(dbar_matrix(z), tol));
        generic_cache_->value = best;
    });
    return generic_cache_->value;
}

PointReport classify_point(const PatchDefinition& p, const ComplexVector& z,
                           const Tolerance& tol, double on_manifold_tol) {
    if (z.size() != p.vars()) throw InputError("classify_point: point dimension mismatch");
    PointReport rep;
    rep.point = z;
    rep.on_manifold = p.residual(z).norm();
    if (rep.on_manifold >= on_manifold_tol) {
        throw InputError("classify_point: point is off the manifold (residual " +
                         std::to_string(rep.on_manifold) + ")");
    }
    rep.dbar_rank = numeric_rank(p.dbar_matrix(z), tol);
    const Index k = p.codim();
    if (2 * rep.dbar_rank < k) {
        throw DegeneracyError("classify_point: dbar rank below k/2; defining functions are "
                              "dependent at the point");
    }
    // m = n - dbar_rank; h then follows from 2m + h = 2n - k.
    rep.cr_type = CRType{p.vars() - rep.dbar_rank, 2 * rep.dbar_rank - k};
    rep.regular = rep.dbar_rank == p.generic_dbar_rank(tol);
    return rep;
}

HermitianPencil levi_pencil_at(const PatchDefinition& p, const ComplexVector& z,
                               const Tolerance& tol) {
    const PointReport rep = classify_point(p, z, tol);
    if (!rep.regular) {
        throw InputError("levi_pencil_at: Levi pencil undefined at a CR-singular point");
    }
    const ComplexMatrix w = kernel_basis(p.dbar_matrix(z), tol);
    std::vector<ComplexMatrix> mats;
    mats.reserve(static_cast<std::size_t>(p.codim()));
    for (Index j = 0; j < p.codim(); ++j) {
        const ComplexMatrix hess = complex_hessian(p.rho()[static_cast<std::size_t>(j)], z);
        ComplexMatrix restricted = w.adjoint() * hess * w;
        mats.push_back(0.5 * (restricted + restricted.adjoint()));
    }
    return HermitianPencil(w.cols(), std::move(mats));
}

Index pseudoconcavity_order_at(const PatchDefinition& p, const ComplexVector& z,
                               const SearchOpts& opts) {
    const HermitianPencil pencil = levi_pencil_at(p, z, opts.tol);
    return weak_pseudoconcavity_order(pencil, opts).q;
}

PatchDefinition slice_patch(const PatchDefinition& p, const AffineEmbedding& a,
                            const Tolerance& tol) {
    if (a.linear.rows() != p.vars() || a.base.size() != p.vars()) {
        throw InputError("slice_patch: embedding must land in the patch's ambient space");
    }
    const Index nn = a.linear.cols();
    if (nn <= 0 || nn > p.vars()) throw InputError("slice_patch: bad slice dimension");
    if (numeric_rank(a.linear, tol) != nn) {
        throw InputError("slice_patch: linear part must have full column rank");
    }
    std::vector<ZPolynomial> sliced;
    sliced.reserve(p.rho().size());
    int max_degree = 0;
    for (const auto& r : p.rho()) max_degree = std::max(max_degree, r.raw().total_degree());
    for (const auto& r : p.rho()) {
        sliced.emplace_back(r.raw().compose_affine(a.linear, a.base), std::max(8, max_degree));
    }
    // Keep the ambient sampling scale for the sliced coordinates.
    double half = 0.0;
    for (Index i = 0; i < p.box().hi.size(); ++i) {
        half = std::max({half, std::abs(p.box().hi(i)), std::abs(p.box().lo(i))});
    }
    return PatchDefinition(nn, std::move(sliced), CoordinateBox::cube(nn, half));
}

std::optional<ComplexVector> project_to_patch(const PatchDefinition& p, const ComplexVector& z0,
                                              const Tolerance& tol) {
    const Index n = p.vars();
    RealVector x(2 * n);
    x << z0.real(), z0.imag();
    auto to_complex = [n](const RealVector& v) {
        ComplexVector z(n);
        for (Index i = 0; i < n; ++i) z(i) = Complex(v(i), v(n + i));
        return z;
    };
    for (int it = 0; it < 60; ++it) {
        const ComplexVector z = to_complex(x);
        const RealVector f = p.residual(z);
        if (f.norm() < 1e-10) return z;
        // Real Jacobian of rho from the holomorphic gradients:
        // d rho/dx = 2 Re(del rho), d rho/dy = -2 Im(del rho).
        const ComplexMatrix g = p.dbar_matrix(z);
        RealMatrix jac(p.codim(), 2 * n);
        jac.leftCols(n) = 2.0 * g.real();
        jac.rightCols(n) = -2.0 * g.imag();
        const RealVector step = pseudo_inverse(jac, tol) * f;
        if (!step.allFinite() || step.norm() > 1e6) return std::nullopt;
        x -= step;
    }
    return std::nullopt;
}

std::vector<ComplexVector> sample_points(const PatchDefinition& p, Index count,
                                         std::uint64_t seed, const Tolerance& tol) {
    if (count <= 0) throw InputError("sample_points: count must be positive");
    SplitMix64 rng(seed);
    const Index n = p.vars();
    std::vector<ComplexVector> out;
    out.reserve(static_cast<std::size_t>(count));
    Index attempts = 0;
    const Index max_attempts = count * 10;
    while (static_cast<Index>(out.size()) < count && attempts < max_attempts) {
        ++attempts;
        ComplexVector z0(n);
        for (Index i = 0; i < n; ++i) {
            z0(i) = Complex(rng.uniform(p.box().lo(i), p.box().hi(i)),
                            rng.uniform(p.box().lo(n + i), p.box().hi(n + i)));
        }
        if (auto z = project_to_patch(p, z0, tol)) out.push_back(*z);
    }
    if (static_cast<Index>(out.size()) * 10 < attempts || out.empty()) {
        throw DegeneracyError("sample_points: projection success rate below 10% (" +
                              std::to_string(out.size()) + "/" + std::to_string(attempts) + ")");
    }
    if (static_cast<Index>(out.size()) < count) {
        throw DegeneracyError("sample_points: could not reach the requested count");
    }
    return out;
}

}  // namespace crscope
