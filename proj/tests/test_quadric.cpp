#include <doctest.h>

#include "crscope/catalog.hpp"
#include "crscope/quadric.hpp"
#include "crscope/sampling.hpp"
#include "oracles.hpp"

using namespace crscope;

namespace {

ComplexMatrix scalar(Complex v) {
    ComplexMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

}  // namespace

TEST_CASE("lambda_real_matrix of the zero map is zero") {
    const LambdaMap l(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2),
                      ComplexMatrix::Zero(2, 3));
    CHECK(lambda_real_matrix(l).norm() == 0.0);
    CHECK(lambda_real_matrix(l).rows() == 4);
    CHECK(lambda_real_matrix(l).cols() == 7);
}

TEST_CASE("lambda_real_matrix of B = I with h = 0 is the identity") {
    const Index m = 3;
    const LambdaMap l(ComplexMatrix::Identity(m, m), ComplexMatrix::Zero(m, m),
                      ComplexMatrix(m, 0));
    const RealMatrix r = lambda_real_matrix(l);
    CHECK((r - RealMatrix::Identity(2 * m, 2 * m)).norm() == doctest::Approx(0.0));
    CHECK(numeric_rank(r) == 2 * m);
}

TEST_CASE("lambda_real_matrix of the M_lambda data") {
    for (Complex lambda : {Complex(1, 0), Complex(0, 1), Complex(1, 1), Complex(-2, 0)}) {
        const LambdaMap l(scalar(1), scalar(1), scalar(Complex(0, 1) * lambda));
        const RealMatrix r = lambda_real_matrix(l);
        RealMatrix expected(2, 3);
        expected << 2, 0, -lambda.imag(), 0, 0, lambda.real();
        CHECK((r - expected).norm() == doctest::Approx(0.0));
        CHECK((numeric_rank(r) == 2) == (lambda.real() != 0.0));
    }
}

TEST_CASE("M_lambda transversality follows Re(lambda)") {
    for (Complex lambda : {Complex(1, 0), Complex(-2, 0), Complex(1, 1)}) {
        CHECK(is_transversal_origin(make_mlambda(lambda)).transversal);
    }
    for (Complex lambda : {Complex(0, 1), Complex(0, 2)}) {
        CHECK_FALSE(is_transversal_origin(make_mlambda(lambda)).transversal);
    }
}

TEST_CASE("M_prime is not transversal and has rank 1") {
    const TransversalityReport rep = is_transversal_origin(make_mprime());
    CHECK_FALSE(rep.transversal);
    REQUIRE(rep.per_equation.size() == 1);
    CHECK(rep.per_equation[0].rank == 1);
}

TEST_CASE("transversality needs a t-equation") {
    // h-only quadric: p = 0.
    const Quadric q(2, 1, 0, {ComplexMatrix::Identity(2, 2)}, {}, {}, {});
    CHECK_THROWS_AS((void)is_transversal_origin(q), InputError);
}

TEST_CASE("D = 0 transversality is equivalent to Lambda_{B,C} nonsingular") {
    SplitMix64 rng(51);
    int singular_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = 1 + static_cast<Index>(rng.next() % 3);
        ComplexMatrix b = oracles::random_complex_matrix(m, m, rng);
        ComplexMatrix c = oracles::random_complex_symmetric(m, rng);
        if (trial % 4 == 0) {
            // Force a singular real map: Lambda(z) = B z + B conj(z)
            // kills the imaginary parts' image.
            c = 0.5 * (b + b.transpose());
            b = c;
            ++singular_seen;
        }
        const Quadric q(m, 0, 1, {}, {b}, {c}, {ComplexMatrix(m, 0)});
        const LambdaMap l(b, c, ComplexMatrix(m, 0));
        const bool nonsingular = numeric_rank(lambda_real_matrix(l)) == 2 * m;
        REQUIRE(is_transversal_origin(q).transversal == nonsingular);
    }
    CHECK(singular_seen > 0);
}

TEST_CASE("real Lambda matrix rank is half the realified doubled matrix rank") {
    // The kernel of [[B, C], [conj(C), conj(B)]] is invariant under the
    // antilinear swap involution, so its complex dimension equals the real
    // kernel dimension of the 2m x 2m Lambda matrix. Equivalently the real
    // matrix has half the rank of the realified complex one.
    SplitMix64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const Index m = 1 + static_cast<Index>(rng.next() % 4);
        ComplexMatrix b = oracles::random_complex_matrix(m, m, rng);
        ComplexMatrix c = oracles::random_complex_symmetric(m, rng);
        if (trial % 3 == 0) b.col(0).setZero();
        if (trial % 4 == 0) {
            c = 0.5 * (b + b.transpose());
            b = c;  // forces a nontrivial kernel
        }
        const LambdaMap l(b, c, ComplexMatrix(m, 0));
        ComplexMatrix doubled(2 * m, 2 * m);
        doubled.topLeftCorner(m, m) = b;
        doubled.topRightCorner(m, m) = c;
        doubled.bottomLeftCorner(m, m) = c.conjugate();
        doubled.bottomRightCorner(m, m) = b.conjugate();
        const Index real_rank = numeric_rank(lambda_real_matrix(l));
        REQUIRE(real_rank == numeric_rank(doubled));
        REQUIRE(2 * real_rank == numeric_rank(realify(doubled)));
    }
}

TEST_CASE("kernel_cr_type basics") {
    const Index m = 2;
    const ComplexMatrix id = ComplexMatrix::Identity(m, m);
    const ComplexMatrix zero = ComplexMatrix::Zero(m, m);
    SUBCASE("B = I, C = 0") {
        const KernelCRType t = kernel_cr_type(id, zero);
        CHECK(t.r == 0);
        CHECK(t.s == 0);
    }
    SUBCASE("B = 0, C = I: conjugation is invertible over R") {
        const KernelCRType t = kernel_cr_type(zero, id);
        CHECK(t.r == 0);
        CHECK(t.s == 0);
    }
    SUBCASE("B = diag(1, 0), C = 0: kernel is the complex line z_1 = 0") {
        ComplexMatrix b = zero;
        b(0, 0) = 1.0;
        const KernelCRType t = kernel_cr_type(b, zero);
        CHECK(t.r == 1);
        CHECK(t.s == 0);
    }
}

TEST_CASE("kernel_cr_type satisfies 2r + s = real kernel dimension") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const Index m = 1 + static_cast<Index>(rng.next() % 4);
        ComplexMatrix b = oracles::random_complex_matrix(m, m, rng);
        ComplexMatrix c = oracles::random_complex_symmetric(m, rng);
        if (trial % 2 == 0) b.rightCols(1).setZero();
        if (trial % 5 == 0) c.setZero();
        const KernelCRType t = kernel_cr_type(b, c);
        const LambdaMap l(b, c, ComplexMatrix(m, 0));
        const Index real_kernel = 2 * m - numeric_rank(lambda_real_matrix(l));
        REQUIRE(2 * t.r + t.s == real_kernel);
        REQUIRE(t.s >= 0);
    }
}

TEST_CASE("singular residual vanishes at the origin") {
    SplitMix64 rng(54);
    const ComplexMatrix h = oracles::random_hermitian(2, rng);
    const Quadric q(2, 1, 1, {h}, {oracles::random_complex_matrix(2, 2, rng)},
                    {oracles::random_complex_symmetric(2, rng)},
                    {oracles::random_complex_matrix(2, 1, rng)});
    const auto res = singular_residual(q, ComplexVector::Zero(2), RealVector::Zero(1));
    REQUIRE(res.size() == 1);
    CHECK(res[0].norm() == 0.0);
}

TEST_CASE("M_lambda residual zero set matches {2x = Im(lambda) v, Re(lambda) v = 0}") {
    for (Complex lambda : {Complex(1, 0), Complex(0, 1), Complex(1, 1)}) {
        const Quadric q = make_mlambda(lambda);
        for (double x : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
            for (double y : {-1.0, 0.0, 0.7}) {
                for (double v : {-1.0, -0.2, 0.0, 0.5, 1.0}) {
                    ComplexVector z(1);
                    z(0) = Complex(x, y);
                    RealVector vv(1);
                    vv(0) = v;
                    const double res = singular_residual(q, z, vv)[0].norm();
                    const bool on_locus = std::abs(2 * x - lambda.imag() * v) < 1e-12 &&
                                          std::abs(lambda.real() * v) < 1e-12;
                    REQUIRE((res < 1e-12) == on_locus);
                }
            }
        }
    }
}

TEST_CASE("M_prime residual zero set is {v = 0}") {
    const Quadric q = make_mprime();
    for (double x : {-0.5, 0.0, 1.0}) {
        for (double v : {-1.0, 0.0, 0.3}) {
            ComplexVector z(1);
            z(0) = Complex(x, 0.2);
            RealVector vv(1);
            vv(0) = v;
            const double res = singular_residual(q, z, vv)[0].norm();
            REQUIRE((res < 1e-12) == (v == 0.0));
        }
    }
}

TEST_CASE("singular locus scan dimensions for the worked examples") {
    ParamBox box;
    box.lo = RealVector::Constant(3, -1.0);
    box.hi = RealVector::Constant(3, 1.0);

    SUBCASE("M_lambda with Re(lambda) != 0: a curve") {
        const auto scan = singular_locus_scan(make_mlambda(Complex(1, 0)), box, 12);
        REQUIRE(!scan.clusters.empty());
        CHECK(scan.clusters[0].dim == 1);
    }
    SUBCASE("M_lambda with Re(lambda) = 0: a surface") {
        const auto scan = singular_locus_scan(make_mlambda(Complex(0, 1)), box, 12);
        REQUIRE(!scan.clusters.empty());
        CHECK(scan.clusters[0].dim == 2);
    }
    SUBCASE("M_prime: the plane v = 0") {
        const auto scan = singular_locus_scan(make_mprime(), box, 12);
        REQUIRE(!scan.clusters.empty());
        CHECK(scan.clusters[0].dim == 2);
    }
}

TEST_CASE("augmented pencil with p = 0 is the H list") {
    SplitMix64 rng(55);
    const ComplexMatrix h1 = oracles::random_hermitian(3, rng);
    const ComplexMatrix h2 = oracles::random_hermitian(3, rng);
    const Quadric q(3, 2, 0, {h1, h2}, {}, {}, {});
    const HermitianPencil p = augmented_pencil(q);
    REQUIRE(p.size() == 2);
    CHECK((p.mats[0] - h1).norm() == doctest::Approx(0.0));
    CHECK((p.mats[1] - h2).norm() == doctest::Approx(0.0));
}

TEST_CASE("augmented pencil of a Hermitian B gives B and 0") {
    SplitMix64 rng(56);
    const ComplexMatrix b = oracles::random_hermitian(3, rng);
    const Quadric q(3, 0, 1, {}, {b}, {ComplexMatrix::Zero(3, 3)}, {ComplexMatrix(3, 0)});
    const HermitianPencil p = augmented_pencil(q);
    REQUIRE(p.size() == 2);
    CHECK((p.mats[0] - b).norm() == doctest::Approx(0.0));
    CHECK(p.mats[1].norm() == doctest::Approx(0.0));
}

TEST_CASE("rigid pseudoconcave quadric generators have signature (n, 0, n)") {
    for (Index n : {1, 2, 3}) {
        ComplexMatrix h1 = ComplexMatrix::Zero(2 * n, 2 * n);
        h1.topLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
        h1.bottomRightCorner(n, n) = -ComplexMatrix::Identity(n, n);
        ComplexMatrix h2 = ComplexMatrix::Zero(2 * n, 2 * n);
        h2.topRightCorner(n, n) = ComplexMatrix::Identity(n, n);
        h2.bottomLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
        const Quadric q(2 * n, 2, 0, {h1, h2}, {}, {}, {});
        for (const auto& mat : augmented_pencil(q).mats) {
            CHECK(signature(mat) == Signature{n, 0, n});
        }
    }
}

TEST_CASE("Garrity matrix for M_k") {
    SUBCASE("k = 1 is degenerate") {
        const GarrityResult g = garrity_matrix_Mk(1, 1.0);
        CHECK(std::abs(g.det) < 1e-12);
        CHECK_FALSE(g.transversal);
    }
    SUBCASE("k = 2, n = 1 has determinant 9") {
        const GarrityResult g = garrity_matrix_Mk(1, 2.0);
        CHECK(g.det.real() == doctest::Approx(9.0));
        CHECK(std::abs(g.det.imag()) < 1e-12);
        CHECK(g.transversal);
    }
    SUBCASE("k = 0.5, n = 2 is transversal") {
        CHECK(garrity_matrix_Mk(2, 0.5).transversal);
    }
    SUBCASE("determinant matches the block formula (k^2-1)^{2n}") {
        for (Index n : {1, 2}) {
            for (double k : {0.3, 0.5, 1.0, 1.7, 2.0}) {
                const GarrityResult g = garrity_matrix_Mk(n, k);
                const double expected = std::pow(k * k - 1.0, 2.0 * static_cast<double>(n));
                CHECK(g.det.real() == doctest::Approx(expected).epsilon(1e-10));
                CHECK(std::abs(g.det.imag()) < 1e-9);
            }
        }
    }
}

TEST_CASE("catalog entries have the displayed shapes") {
    SUBCASE("clifford8: five Hermitian 8x8 matrices") {
        const auto entry = example_catalog("clifford8");
        REQUIRE(std::holds_alternative<HermitianPencil>(entry));
        const auto& p = std::get<HermitianPencil>(entry);
        CHECK(p.dim == 8);
        CHECK(p.size() == 5);
        for (const auto& m : p.mats) CHECK(hermitian_deviation(m) == 0.0);
    }
    SUBCASE("r1r2_7: three Hermitian 7x7 matrices") {
        const auto entry = example_catalog("r1r2_7");
        const auto& p = std::get<HermitianPencil>(entry);
        CHECK(p.dim == 7);
        CHECK(p.size() == 3);
    }
    SUBCASE("mlambda(1+i) carries D = i(1+i)") {
        const auto entry = example_catalog("mlambda(1+i)");
        const auto& q = std::get<Quadric>(entry);
        CHECK(q.m == 1);
        CHECK(q.h == 1);
        CHECK(q.p == 1);
        CHECK(q.H[0].norm() == 0.0);
        CHECK(q.B[0](0, 0) == Complex(1, 0));
        CHECK(q.C[0](0, 0) == Complex(1, 0));
        CHECK(q.D[0](0, 0) == Complex(0, 1) * Complex(1, 1));
    }
    SUBCASE("mk(1, 2) matches the sliced equations") {
        const auto entry = example_catalog("mk(1,2)");
        const auto& q = std::get<Quadric>(entry);
        CHECK(q.m == 2);
        CHECK(q.p == 1);
        // 2 Re(u) = |z|^2 - |w|^2 and 2 k Im(u) = w* z + z* w together force
        // B = [[1/2, i/(2k)], [i/(2k), -1/2]].
        CHECK(q.B[0](0, 0) == Complex(0.5, 0));
        CHECK(q.B[0](1, 1) == Complex(-0.5, 0));
        CHECK(q.B[0](0, 1) == Complex(0, 0.25));
        CHECK(q.B[0](1, 0) == Complex(0, 0.25));
    }
    SUBCASE("unknown names are input errors") {
        CHECK_THROWS_AS((void)example_catalog("nonsense"), InputError);
        CHECK_THROWS_AS((void)example_catalog("mk(2)"), InputError);
    }
}

TEST_CASE("complex literal parser") {
    CHECK(parse_complex("1") == Complex(1, 0));
    CHECK(parse_complex("-2") == Complex(-2, 0));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("1+i") == Complex(1, 1));
    CHECK(parse_complex("0.5-1.5i") == Complex(0.5, -1.5));
    CHECK(parse_complex("2i") == Complex(0, 2));
    CHECK_THROWS_AS((void)parse_complex("foo"), InputError);
}

TEST_CASE("quadric validation") {
    CHECK_THROWS_AS(Quadric(1, 1, 0, {ComplexMatrix::Identity(2, 2)}, {}, {}, {}), InputError);
    ComplexMatrix not_sym(2, 2);
    not_sym << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
    CHECK_THROWS_AS(Quadric(2, 0, 1, {}, {ComplexMatrix::Zero(2, 2)}, {not_sym},
                            {ComplexMatrix(2, 0)}),
                    InputError);
}

TEST_CASE("p = 2 transversality reports per equation plus the stacked extension") {
    const Quadric q = make_adams_m8();
    const TransversalityReport rep = is_transversal_origin(q);
    REQUIRE(rep.per_equation.size() == 2);
    CHECK(rep.combined_is_extension);
    // Lambda_{B_1, C_1} is nonsingular over R; Lambda_{B_2, 0} has rank 6.
    CHECK(rep.per_equation[0].rank == 16);
    CHECK(rep.per_equation[0].transversal);
    CHECK(rep.per_equation[1].rank == 6);
    CHECK_FALSE(rep.per_equation[1].transversal);
    CHECK(rep.combined_rank == 16);
}

TEST_CASE("Garrity criterion agrees with the Lambda rank on the sliced quadric") {
    for (Index n : {Index{1}, Index{2}}) {
        for (double k : {0.5, 1.0, 2.0}) {
            const bool via_det = garrity_matrix_Mk(n, k).transversal;
            const bool via_rank = is_transversal_origin(make_mk_sliced(n, k)).transversal;
            REQUIRE(via_det == via_rank);
        }
    }
}

TEST_CASE("sliced M_k singular locus: isolated for k != 1, a complex line for k = 1") {
    ParamBox box;
    box.lo = RealVector::Constant(4, -1.0);
    box.hi = RealVector::Constant(4, 1.0);
    SUBCASE("k = 2: a single 0-dimensional cluster at the origin") {
        const auto scan = singular_locus_scan(std::get<Quadric>(example_catalog("mk(1,2)")),
                                              box, 6);
        REQUIRE(scan.clusters.size() == 1);
        CHECK(scan.clusters[0].dim == 0);
        CHECK(scan.clusters[0].points.front().norm() < 1e-8);
    }
    SUBCASE("k = 1: the kernel line z_1 + i z_2 = 0, real dimension 2") {
        const auto scan = singular_locus_scan(std::get<Quadric>(example_catalog("mk(1,1)")),
                                              box, 6);
        REQUIRE(!scan.clusters.empty());
        CHECK(scan.clusters[0].dim == 2);
    }
}

TEST_CASE("a scan window away from the locus returns no clusters") {
    const Quadric q = std::get<Quadric>(example_catalog("mk(1,2)"));  // locus = {0}
    ParamBox box;
    box.lo = RealVector::Constant(4, 2.0);
    box.hi = RealVector::Constant(4, 3.0);
    const auto scan = singular_locus_scan(q, box, 4);
    CHECK(scan.total_points == 0);
    CHECK(scan.clusters.empty());
}

TEST_CASE("residual tensor term contracts conj(D) against z* H z") {
    // m = h = p = 1 with H = 2, B = C = 0, D = i:
    // residual = i v + (i/2) conj(i) (z* 2 z) = i v + |z|^2.
    ComplexMatrix eta(1, 1), d(1, 1);
    eta(0, 0) = 2.0;
    d(0, 0) = Complex(0, 1);
    const Quadric q(1, 1, 1, {eta}, {ComplexMatrix::Zero(1, 1)}, {ComplexMatrix::Zero(1, 1)},
                    {d});
    ComplexVector z(1);
    z(0) = Complex(1.0, 0.0);
    RealVector v(1);
    v(0) = 3.0;
    const auto res = singular_residual(q, z, v);
    CHECK(std::abs(res[0](0) - Complex(1.0, 3.0)) < 1e-14);

    z(0) = Complex(0.5, -1.5);  // |z|^2 = 2.5
    const auto res2 = singular_residual(q, z, v);
    CHECK(std::abs(res2[0](0) - Complex(2.5, 3.0)) < 1e-14);
}
