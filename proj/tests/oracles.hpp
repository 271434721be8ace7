#pragma once

// Independent oracles used by the test suites: brute-force routes that avoid
// the implementation paths they check.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "crscope/numerics.hpp"
#include "crscope/sampling.hpp"

namespace oracles {

using namespace crscope;

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(x) = x^n + c[1] x^{n-1} + ... + c[n].
inline std::vector<Complex> char_poly(const ComplexMatrix& a) {
    const Index n = a.rows();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1.0;
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = a * m + c[static_cast<std::size_t>(k - 1)] * ComplexMatrix::Identity(n, n);
        c[static_cast<std::size_t>(k)] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

// Eigenvalues as roots of the characteristic polynomial, found with a
// general (non-selfadjoint) solver on the companion matrix.
inline RealVector companion_eigenvalues(const ComplexMatrix& h) {
    const Index n = h.rows();
    const auto c = char_poly(h);
    ComplexMatrix comp = ComplexMatrix::Zero(n, n);
    for (Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(n - i)];
    Eigen::ComplexEigenSolver<ComplexMatrix> es(comp);
    RealVector out(n);
    for (Index i = 0; i < n; ++i) out(i) = es.eigenvalues()(i).real();
    std::sort(out.data(), out.data() + n);
    return out;
}

inline ComplexMatrix random_complex_matrix(Index r, Index c, SplitMix64& rng) {
    ComplexMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    }
    return m;
}

inline ComplexMatrix random_hermitian(Index n, SplitMix64& rng) {
    const ComplexMatrix a = random_complex_matrix(n, n, rng);
    return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix random_complex_symmetric(Index n, SplitMix64& rng) {
    const ComplexMatrix a = random_complex_matrix(n, n, rng);
    return 0.5 * (a + a.transpose());
}

inline ComplexMatrix random_unitary(Index n, SplitMix64& rng) {
    const ComplexMatrix a = random_complex_matrix(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
}

inline RealMatrix random_real_matrix(Index r, Index c, SplitMix64& rng) {
    RealMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) m(i, j) = rng.normal();
    }
    return m;
}

}  // namespace oracles
