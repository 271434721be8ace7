#include <doctest.h>

#include "crscope/numerics.hpp"
#include "crscope/sampling.hpp"
#include "oracles.hpp"

using namespace crscope;

TEST_CASE("realify of the 1x1 matrix [i]") {
    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(0, 1);
    RealMatrix expected(2, 2);
    expected << 0, -1, 1, 0;
    CHECK((realify(m) - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("realify of the identity is the doubled identity") {
    for (Index n : {1, 3, 5}) {
        const RealMatrix r = realify(ComplexMatrix::Identity(n, n));
        CHECK((r - RealMatrix::Identity(2 * n, 2 * n)).norm() == doctest::Approx(0.0));
    }
}

TEST_CASE("realify doubles the rank") {
    SplitMix64 rng(31);
    const ComplexMatrix m = oracles::random_complex_matrix(3, 2, rng);
    CHECK(numeric_rank(realify(m)) == 2 * numeric_rank(m));
}

TEST_CASE("realify doubles the rank on 500 random matrices up to 8x8") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        const Index r = 1 + static_cast<Index>(rng.next() % 8);
        const Index c = 1 + static_cast<Index>(rng.next() % 8);
        ComplexMatrix m = oracles::random_complex_matrix(r, c, rng);
        // Mix in rank-deficient cases.
        if (trial % 3 == 0 && r > 1 && c > 1) {
            const ComplexMatrix a = oracles::random_complex_matrix(r, std::min(r, c) - 1, rng);
            const ComplexMatrix b = oracles::random_complex_matrix(std::min(r, c) - 1, c, rng);
            m = a * b;
        }
        REQUIRE(numeric_rank(realify(m)) == 2 * numeric_rank(m));
    }
}

TEST_CASE("realify intertwines multiplication by i with J") {
    SplitMix64 rng(33);
    const ComplexMatrix m = oracles::random_complex_matrix(4, 3, rng);
    const RealMatrix lhs = global_complex_structure(4) * realify(m);
    const RealMatrix rhs = realify((Complex(0, 1) * m).eval());
    CHECK((lhs - rhs).norm() == doctest::Approx(0.0));
}

TEST_CASE("numeric_rank of the zero matrix is 0") {
    const RealMatrix zero = RealMatrix::Zero(3, 3);
    CHECK(numeric_rank(zero) == 0);
}

TEST_CASE("numeric_rank respects the relative cutoff") {
    RealMatrix d = RealMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 1e-14;
    CHECK(numeric_rank(d, Tolerance(1e-9, 1e-8)) == 1);
}

TEST_CASE("numeric_rank of proportional rows") {
    RealMatrix m(3, 2);
    m << 1, 2, 2, 4, 3, 6;
    CHECK(numeric_rank(m) == 1);
}

TEST_CASE("numeric_rank rejects non-finite input") {
    RealMatrix m = RealMatrix::Zero(2, 2);
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)numeric_rank(m), InputError);
}

TEST_CASE("Tolerance validates its range") {
    CHECK_THROWS_AS(Tolerance(0.0, 1e-8), InputError);
    CHECK_THROWS_AS(Tolerance(1e-9, 1.5), InputError);
}

TEST_CASE("hermitian_eigenvalues on diagonal and swap matrices") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = -1.0;
    const RealVector e = hermitian_eigenvalues(d);
    CHECK(e(0) == doctest::Approx(-1.0));
    CHECK(e(1) == doctest::Approx(2.0));

    ComplexMatrix swap = ComplexMatrix::Zero(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    const RealVector s = hermitian_eigenvalues(swap);
    CHECK(s(0) == doctest::Approx(-1.0));
    CHECK(s(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigenvalues matches the companion-matrix oracle") {
    SplitMix64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = oracles::random_hermitian(5, rng);
        const RealVector fast = hermitian_eigenvalues(h);
        const RealVector slow = oracles::companion_eigenvalues(h);
        const double scale = std::max(1.0, h.norm());
        for (Index i = 0; i < 5; ++i) {
            REQUIRE(std::abs(fast(i) - slow(i)) < 1e-7 * scale);
        }
    }
}

TEST_CASE("eigenvalue sum equals the trace") {
    SplitMix64 rng(35);
    const ComplexMatrix h = oracles::random_hermitian(7, rng);
    CHECK(hermitian_eigenvalues(h).sum() ==
          doctest::Approx(h.trace().real()).epsilon(1e-8));
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;  // strictly upper triangular
    CHECK_THROWS_AS((void)hermitian_eigenvalues(m), InputError);
}

TEST_CASE("eigenvalues of -H are the negated reversal") {
    SplitMix64 rng(36);
    const ComplexMatrix h = oracles::random_hermitian(6, rng);
    const RealVector e = hermitian_eigenvalues(h);
    const RealVector f = hermitian_eigenvalues((-h).eval());
    for (Index i = 0; i < 6; ++i) {
        CHECK(f(i) == doctest::Approx(-e(5 - i)).epsilon(1e-10));
    }
}

TEST_CASE("signature of simple diagonals") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = -1.0;
    CHECK(signature(d) == Signature{1, 1, 1});
    CHECK(signature(ComplexMatrix::Identity(4, 4)) == Signature{4, 0, 0});
}

TEST_CASE("signature of diag(I4, -I4)") {
    ComplexMatrix h = ComplexMatrix::Zero(8, 8);
    h.topLeftCorner(4, 4) = ComplexMatrix::Identity(4, 4);
    h.bottomRightCorner(4, 4) = -ComplexMatrix::Identity(4, 4);
    CHECK(signature(h) == Signature{4, 0, 4});
}

TEST_CASE("signature is invariant under unitary conjugation") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = 2 + static_cast<Index>(rng.next() % 5);
        ComplexMatrix h = oracles::random_hermitian(n, rng);
        if (trial % 2 == 0) h(0, 0) = 0.0;  // exercise the zero band too
        h = 0.5 * (h + h.adjoint());
        const ComplexMatrix u = oracles::random_unitary(n, rng);
        const ComplexMatrix conj = u.adjoint() * h * u;
        REQUIRE(signature(h) == signature(conj));
    }
}

TEST_CASE("standard complex structure in the smallest case") {
    RealMatrix expected(2, 2);
    expected << 0, -1, 1, 0;
    CHECK((standard_complex_structure(1, 0, 0) - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("J squares to -I") {
    for (auto [m, h, p] : {std::tuple<Index, Index, Index>{2, 1, 1},
                           {3, 0, 0},
                           {1, 2, 3},
                           {0, 2, 1}}) {
        const RealMatrix j = standard_complex_structure(m, h, p);
        const Index n = m + h + p;
        CHECK((j * j + RealMatrix::Identity(2 * n, 2 * n)).norm() == doctest::Approx(0.0));
    }
}

TEST_CASE("J for (m, h, 1) has the displayed six-block form") {
    const Index m = 3, h = 2;
    const RealMatrix j = standard_complex_structure(m, h, 1);
    const Index n = m + h + 1;
    RealMatrix expected = RealMatrix::Zero(2 * n, 2 * n);
    expected.block(0, m, m, m) = -RealMatrix::Identity(m, m);
    expected.block(m, 0, m, m) = RealMatrix::Identity(m, m);
    expected.block(2 * m, 2 * m + h, h, h) = -RealMatrix::Identity(h, h);
    expected.block(2 * m + h, 2 * m, h, h) = RealMatrix::Identity(h, h);
    expected(2 * m + 2 * h, 2 * m + 2 * h + 1) = -1.0;
    expected(2 * m + 2 * h + 1, 2 * m + 2 * h) = 1.0;
    CHECK((j - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("grouped-to-global permutation conjugates the two J conventions") {
    for (auto [m, h, p] : {std::tuple<Index, Index, Index>{2, 1, 1}, {1, 3, 0}, {4, 0, 2}}) {
        const RealMatrix perm = grouped_to_global_permutation(m, h, p);
        const Index n = m + h + p;
        CHECK((perm * perm.transpose() - RealMatrix::Identity(2 * n, 2 * n)).norm() ==
              doctest::Approx(0.0));
        const RealMatrix lhs = perm * standard_complex_structure(m, h, p) * perm.transpose();
        CHECK((lhs - global_complex_structure(n)).norm() == doctest::Approx(0.0));
    }
}

TEST_CASE("kernel_basis spans the null space") {
    SplitMix64 rng(38);
    const ComplexMatrix a = oracles::random_complex_matrix(2, 5, rng);
    const ComplexMatrix w = kernel_basis(a);
    CHECK(w.cols() == 3);
    CHECK((a * w).norm() < 1e-12);
    CHECK((w.adjoint() * w - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("low-discrepancy sphere points are unit and deterministic") {
    const auto a = low_discrepancy_sphere(5, 64, 99);
    const auto b = low_discrepancy_sphere(5, 64, 99);
    REQUIRE(a.size() == 64);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].norm() == doctest::Approx(1.0));
        CHECK((a[i] - b[i]).norm() == 0.0);
    }
}
