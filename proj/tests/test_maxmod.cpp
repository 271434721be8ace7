#include <doctest.h>

#include <cmath>

#include "crscope/catalog.hpp"
#include "crscope/maxmod.hpp"
#include "crscope/sampling.hpp"
#include "oracles.hpp"

using namespace crscope;

namespace {

std::vector<ComplexVector> line_grid(Index count, double lo = -1.0, double hi = 1.0) {
    std::vector<ComplexVector> pts;
    for (Index i = 0; i < count; ++i) {
        ComplexVector z(1);
        z(0) = Complex(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1),
                       0.0);
        pts.push_back(z);
    }
    return pts;
}

double ball_predicate(const ComplexVector& z, double r2) { return z.squaredNorm() - r2; }

}  // namespace

TEST_CASE("partition_domain splits a sphere sample by a radial predicate") {
    const PatchDefinition sphere = make_sphere_patch(2);
    const auto pts = sample_points(sphere, 300, 7);
    // Split by the first coordinate's modulus: an intrinsic cap.
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return std::abs(z(0)) - 0.7; }, 0.05);
    CHECK(d.interior.size() + d.boundary.size() <= pts.size());
    CHECK(!d.interior.empty());
    CHECK(!d.boundary.empty());
    for (const auto& z : d.interior) CHECK(std::abs(z(0)) < 0.65);
    for (const auto& z : d.boundary) CHECK(std::abs(std::abs(z(0)) - 0.7) <= 0.05);
}

TEST_CASE("partition_domain rejects empty parts") {
    const auto pts = line_grid(11);
    CHECK_THROWS_AS((void)partition_domain(
                        pts, [](const ComplexVector& z) { return ball_predicate(z, 1e6); }, 1e-3),
                    InputError);
    // A band wider than the data spread swallows everything.
    CHECK_THROWS_AS((void)partition_domain(
                        pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 10.0),
                    InputError);
}

TEST_CASE("constant functions satisfy the principle with equality") {
    const auto pts = line_grid(101);
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9);
    const HoloPolynomial f(1, {{{0}, Complex(2.5, -1.0)}});
    const VerificationReport rep = verify_max_modulus(d, f);
    CHECK(rep.satisfied);
    CHECK(rep.max_interior == doctest::Approx(rep.max_boundary));
}

TEST_CASE("reports are invariant under scaling f") {
    const auto pts = line_grid(101);
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9);
    const HoloPolynomial f = HoloPolynomial::random(1, 3, 1234);
    std::vector<HoloPolynomial::Term> scaled_terms = f.terms();
    for (auto& t : scaled_terms) t.coeff *= Complex(0, -17.0);
    const HoloPolynomial g(1, std::move(scaled_terms));
    const VerificationReport a = verify_max_modulus(d, f);
    const VerificationReport b = verify_max_modulus(d, g);
    CHECK(a.satisfied == b.satisfied);
    CHECK(b.max_interior == doctest::Approx(17.0 * a.max_interior));
    CHECK(b.max_boundary == doctest::Approx(17.0 * a.max_boundary));
}

TEST_CASE("adding interior points never flips a violated report to satisfied") {
    const auto pts = line_grid(501);
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9);
    const HoloPolynomial f = HoloPolynomial::exp_minus_z2_taylor(12);
    VerificationReport rep = verify_max_modulus(d, f);
    REQUIRE_FALSE(rep.satisfied);
    SampledDomain denser = d;
    for (const auto& z : line_grid(1001, -0.5, 0.5)) denser.interior.push_back(z);
    const VerificationReport rep2 = verify_max_modulus(denser, f);
    CHECK_FALSE(rep2.satisfied);
    CHECK(rep2.max_interior >= rep.max_interior);
}

TEST_CASE("the Taylor surrogate of exp(-z^2) violates the principle on the real line") {
    const auto pts = line_grid(4001);
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9);
    const HoloPolynomial f = HoloPolynomial::exp_minus_z2_taylor(12);
    const VerificationReport rep = verify_max_modulus(d, f, 1e-6);
    CHECK_FALSE(rep.satisfied);
    CHECK(std::abs(rep.max_interior - 1.0) < 1e-6);
    CHECK(std::abs(rep.max_boundary - 0.36788) < 1e-4);
    CHECK(std::abs(rep.argmax_interior(0)) < 1e-3);
}

TEST_CASE("the truncation error of the Taylor surrogate is below 1e-8 on [-1, 1]") {
    const HoloPolynomial f = HoloPolynomial::exp_minus_z2_taylor(12);
    for (double x = -1.0; x <= 1.0; x += 1.0 / 64.0) {
        ComplexVector z(1);
        z(0) = Complex(x, 0);
        CHECK(std::abs(f.eval(z) - std::exp(-x * x)) < 1e-8);
    }
}

TEST_CASE("psi region of the sphere is everything") {
    const PatchDefinition sphere = make_sphere_patch(2);
    const auto pts = sample_points(sphere, 60, 8);
    SearchOpts opts;
    opts.samples = 256;
    const PsiRegion region = psi_region(sphere, pts, 1, opts);
    CHECK(region.psi_points.size() == pts.size());
    CHECK(region.complement_points.empty());
    CHECK(region.unclassified.empty());
}

TEST_CASE("psi region of the Ex 1.9 patch is empty on regular points") {
    const PatchDefinition patch = make_ex19_patch(2);
    const auto pts = sample_points(patch, 40, 9);
    SearchOpts opts;
    opts.samples = 256;
    const PsiRegion region = psi_region(patch, pts, 1, opts);
    CHECK(region.psi_points.empty());
    CHECK(region.complement_points.size() + region.unclassified.size() == pts.size());
}

TEST_CASE("totally real points are 1-pseudoconvex") {
    const PatchDefinition line = make_real_line_patch();
    const auto pts = line_grid(101);
    SearchOpts opts;
    const PsiRegion region = psi_region(line, pts, 1, opts);
    CHECK(region.psi_points.size() == pts.size());
}

TEST_CASE("psi bound on the closed disc in a totally real plane") {
    // Totally real R^2 = {y_1 = 0, y_2 = 0} in C^2 sampled on a disc: every
    // point is 1-pseudoconvex, so the psi estimate is the full cloud and the
    // bound holds with equality.
    ZZbarPoly y1 = ZZbarPoly::im_coord(2, 0);
    ZZbarPoly y2 = ZZbarPoly::im_coord(2, 1);
    const PatchDefinition plane(2, {ZPolynomial(y1), ZPolynomial(y2)},
                                CoordinateBox::cube(2, 1.2));
    std::vector<ComplexVector> pts;
    for (Index i = 0; i < 40; ++i) {
        for (Index j = 0; j < 40; ++j) {
            ComplexVector z(2);
            z << Complex(-1.0 + 2.0 * i / 39.0, 0), Complex(-1.0 + 2.0 * j / 39.0, 0);
            if (z.squaredNorm() <= 1.0) pts.push_back(z);
        }
    }
    SearchOpts opts;
    const HoloPolynomial f = HoloPolynomial::random(2, 3, 555);
    const VerificationReport rep = verify_psi_bound(plane, pts, f, 1, 1e-6, opts);
    CHECK(rep.satisfied);  // psi contains all points, so max_all == max_psi
    CHECK(rep.boundary_samples == static_cast<Index>(pts.size()));
}

TEST_CASE("empty psi estimate produces a warning report") {
    const PatchDefinition patch = make_ex19_patch(2);
    const auto pts = sample_points(patch, 30, 10);
    SearchOpts opts;
    opts.samples = 128;
    const HoloPolynomial f = HoloPolynomial::random(6, 2, 777);
    const VerificationReport rep = verify_psi_bound(patch, pts, f, 1, 1e-6, opts);
    CHECK_FALSE(rep.satisfied);
    CHECK(!rep.warning.empty());
}

TEST_CASE("pseudoconcave side: sampled maximum modulus on the M_k patch") {
    const PatchDefinition patch = make_mk_patch(2, 2.0, 1.0);
    const auto pts = sample_points(patch, 500, 20250501);
    const SampledDomain d = partition_domain(
        pts, [](const ComplexVector& z) { return ball_predicate(z, 2.5); }, 0.75);
    CHECK(d.interior.size() >= 50);
    SplitMix64 seeds(91);
    for (int trial = 0; trial < 20; ++trial) {
        const HoloPolynomial f = HoloPolynomial::random(5, 3, seeds.next());
        const VerificationReport rep = verify_max_modulus(d, f, 1e-6);
        REQUIRE(rep.satisfied);
    }
}

TEST_CASE("patch-anchored partition validates the on-manifold condition") {
    const PatchDefinition line = make_real_line_patch();
    auto pts = line_grid(51);
    const SampledDomain d = partition_domain(
        line, pts, [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9);
    CHECK(d.patch != nullptr);
    ComplexVector off(1);
    off(0) = Complex(0.1, 0.2);  // not on the real line
    pts.push_back(off);
    CHECK_THROWS_AS((void)partition_domain(
                        line, pts,
                        [](const ComplexVector& z) { return ball_predicate(z, 1.0); }, 1e-9),
                    InputError);
}
