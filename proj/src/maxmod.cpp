#include "crscope/maxmod.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crscope/sampling.hpp"

namespace crscope {

HoloPolynomial::HoloPolynomial(Index n, std::vector<Term> terms)
    : n_(n), terms_(std::move(terms)) {
    if (n_ <= 0) throw InputError("HoloPolynomial: need at least one variable");
    for (const auto& t : terms_) {
        if (static_cast<Index>(t.alpha.size()) != n_) {
            throw InputError("HoloPolynomial: exponent length mismatch");
        }
        for (int e : t.alpha) {
            if (e < 0) throw InputError("HoloPolynomial: negative exponent");
        }
    }
}

Complex HoloPolynomial::eval(const ComplexVector& z) const {
    if (z.size() != n_) throw InputError("HoloPolynomial::eval: point dimension mismatch");
    Complex sum(0.0, 0.0);
    for (const auto& t : terms_) {
        Complex v = t.coeff;
        for (Index i = 0; i < n_; ++i) {
            for (int e = 0; e < t.alpha[static_cast<std::size_t>(i)]; ++e) v *= z(i);
        }
        sum += v;
    }
    return sum;
}

std::string HoloPolynomial::describe() const {
    std::ostringstream os;
    os << "holo_poly(n=" << n_ << ", terms=" << terms_.size() << ")";
    return os.str();
}

namespace {

void enumerate_exponents(Index n, int degree, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<Index>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur.push_back(e);
        enumerate_exponents(n, degree - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

HoloPolynomial HoloPolynomial::random(Index n, int degree, std::uint64_t seed) {
    std::vector<std::vector<int>> exps;
    std::vector<int> cur;
    enumerate_exponents(n, degree, cur, exps);
    SplitMix64 rng(seed);
    std::vector<Term> terms;
    terms.reserve(exps.size());
    for (auto& a : exps) terms.push_back({std::move(a), Complex(rng.normal(), rng.normal())});
    return HoloPolynomial(n, std::move(terms));
}

HoloPolynomial HoloPolynomial::exp_minus_z2_taylor(int order) {
    if (order < 0) throw InputError("exp_minus_z2_taylor: order must be nonnegative");
    std::vector<Term> terms;
    double factorial = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) factorial *= j;
        const double c = (j % 2 == 0 ? 1.0 : -1.0) / factorial;
        terms.push_back({{2 * j}, Complex(c, 0.0)});
    }
    return HoloPolynomial(1, std::move(terms));
}

SampledDomain partition_domain(const std::vector<ComplexVector>& points,
                               const std::function<double(const ComplexVector&)>& predicate,
                               double band, std::string rule_description) {
    if (!(band >= 0.0)) throw InputError("partition_domain: band must be nonnegative");
    SampledDomain d;
    d.boundary_rule = rule_description.empty()
                          ? "boundary: |predicate| <= " + std::to_string(band)
                          : std::move(rule_description);
    for (const auto& z : points) {
        const double v = predicate(z);
        if (std::abs(v) <= band) d.boundary.push_back(z);
        else if (v < 0.0) d.interior.push_back(z);
        // v > band: outside the domain, discarded
    }
    if (d.interior.empty() || d.boundary.empty()) {
        throw InputError("partition_domain: the band produced an empty interior or boundary");
    }
    return d;
}

SampledDomain partition_domain(const PatchDefinition& patch,
                               const std::vector<ComplexVector>& points,
                               const std::function<double(const ComplexVector&)>& predicate,
                               double band, std::string rule_description) {
    for (const auto& z : points) {
        if (patch.residual(z).norm() >= 1e-10) {
            throw InputError("partition_domain: point is off the manifold");
        }
    }
    SampledDomain d = partition_domain(points, predicate, band, std::move(rule_description));
    d.patch = std::make_shared<PatchDefinition>(patch);
    return d;
}

namespace {

struct MaxResult {
    double value = 0.0;
    ComplexVector arg;
};

MaxResult max_abs_over(const HoloPolynomial& f, const std::vector<ComplexVector>& pts) {
    MaxResult r;
    if (pts.empty()) return r;
    std::vector<double> vals(pts.size());
    parallel_for(static_cast<Index>(pts.size()), [&](Index i) {
        vals[static_cast<std::size_t>(i)] = std::abs(f.eval(pts[static_cast<std::size_t>(i)]));
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (vals[i] > vals[best]) best = i;
    }
    r.value = vals[best];
    r.arg = pts[best];
    return r;
}

}  // namespace

VerificationReport verify_max_modulus(const SampledDomain& d, const HoloPolynomial& f,
                                      double tol) {
    VerificationReport rep;
    rep.function = f.describe();
    rep.tol = tol;
    rep.interior_samples = static_cast<Index>(d.interior.size());
    rep.boundary_samples = static_cast<Index>(d.boundary.size());
    const MaxResult in = max_abs_over(f, d.interior);
    const MaxResult bd = max_abs_over(f, d.boundary);
    rep.max_interior = in.value;
    rep.max_boundary = bd.value;
    rep.argmax_interior = in.arg;
    rep.argmax_boundary = bd.arg;
    rep.satisfied = rep.max_interior <= rep.max_boundary * (1.0 + tol);
    return rep;
}

PsiRegion psi_region(const PatchDefinition& patch, const std::vector<ComplexVector>& points,
                     Index p, const SearchOpts& opts) {
    if (p < 1) throw InputError("psi_region: order p must be at least 1");
    PsiRegion region;
    for (const auto& z : points) {
        const PointReport rep = classify_point(patch, z, opts.tol);
        if (!rep.regular) {
            region.unclassified.push_back(z);
            continue;
        }
        const HermitianPencil pencil = levi_pencil_at(patch, z, opts.tol);
        const Index order = weak_pseudoconcavity_order(pencil, opts).q;
        if (order < p) region.psi_points.push_back(z);
        else region.complement_points.push_back(z);
    }
    return region;
}

VerificationReport verify_psi_bound(const PatchDefinition& patch,
                                    const std::vector<ComplexVector>& points,
                                    const HoloPolynomial& f, Index p, double tol,
                                    const SearchOpts& opts) {
    const PsiRegion region = psi_region(patch, points, p, opts);
    VerificationReport rep;
    rep.function = f.describe();
    rep.tol = tol;
    rep.interior_samples = static_cast<Index>(points.size());
    rep.boundary_samples = static_cast<Index>(region.psi_points.size());
    const MaxResult all = max_abs_over(f, points);
    const MaxResult psi = max_abs_over(f, region.psi_points);
    rep.max_interior = all.value;
    rep.max_boundary = psi.value;
    rep.argmax_interior = all.arg;
    rep.argmax_boundary = psi.arg;
    if (region.psi_points.empty()) {
        rep.satisfied = false;
        rep.warning = "empty psi estimate: a compact set must meet Psi_1, so the sample is "
                      "too sparse or the input is not compact";
        return rep;
    }
    rep.satisfied = rep.max_interior <= rep.max_boundary * (1.0 + tol);
    return rep;
}

}  // namespace crscope
