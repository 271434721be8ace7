#include "crscope/crlinear.hpp"

#include <string>

namespace crscope {

RealSubspace::RealSubspace(Index n, RealMatrix b, const Tolerance& tol)
    : ambient_n(n), basis(std::move(b)) {
    if (ambient_n <= 0) throw InputError("RealSubspace: ambient dimension must be positive");
    if (basis.rows() != 2 * ambient_n) {
        throw InputError("RealSubspace: basis must have 2n rows");
    }
    const Index d = basis.cols();
    if (d <= 0 || d > 2 * ambient_n) {
        throw InputError("RealSubspace: need 0 < d <= 2n spanning columns");
    }
    if (!all_finite(basis)) throw InputError("RealSubspace: non-finite entries");
    if (numeric_rank(basis, tol) != d) {
        throw InputError("RealSubspace: spanning columns are not independent at tolerance");
    }
}

CRType cr_type_of_subspace(const RealSubspace& s, const Tolerance& tol) {
    const Index d = s.dim();
    const RealMatrix j = global_complex_structure(s.ambient_n);
    RealMatrix tjt(2 * s.ambient_n, 2 * d);
    tjt.leftCols(d) = s.basis;
    tjt.rightCols(d) = j * s.basis;
    const Index r = numeric_rank(tjt, tol);
    if (r % 2 != 0) {
        throw DegeneracyError("cr_type_of_subspace: rank(T|JT) = " + std::to_string(r) +
                              " is odd; tolerance failure");
    }
    const Index m = d - r / 2;
    const Index h = r - d;
    if (m < 0 || h < 0) {
        throw DegeneracyError("cr_type_of_subspace: inconsistent rank produced negative type");
    }
    return {m, h};
}

Index stratum_dim(Index n, Index m, Index h) {
    if (n <= 0 || m < 0 || h < 0 || 2 * m + h > 2 * n || m + h > n) {
        throw InputError("stratum_dim: stratum (m,h) is empty in C^n");
    }
    return 2 * m * (n - m) + h * (2 * n - 2 * m - h);
}

Index stratum_codim(Index n, Index k, Index h) {
    if (n <= 0 || k < 0 || k > n || 2 * h < k || h > k) {
        throw InputError("stratum_codim: need ceil(k/2) <= h <= k <= n");
    }
    return 2 * (n - h) * (k - h);
}

Index type_at_transversal_stratum(Index n, Index k) {
    if (k < 2 || k > n) throw InputError("type_at_transversal_stratum: need 2 <= k <= n");
    return k - 2;
}

Index transversal_complex_dim_cr(Index m, Index k) {
    if (m < 0 || k < 0) throw InputError("transversal_complex_dim_cr: negative arguments");
    return m + (k + 1) / 2;
}

RealSubspace complex_subspace(Index n, const ComplexMatrix& columns, const Tolerance& tol) {
    if (columns.rows() != n) throw InputError("complex_subspace: column length mismatch");
    const Index q = columns.cols();
    // Real span of {v, iv} for each complex column v, in global coordinates.
    RealMatrix basis(2 * n, 2 * q);
    for (Index c = 0; c < q; ++c) {
        basis.col(2 * c) << columns.col(c).real(), columns.col(c).imag();
        basis.col(2 * c + 1) << -columns.col(c).imag(), columns.col(c).real();
    }
    return RealSubspace(n, basis, tol);
}

RealSubspace model_flat_subspace(Index m, Index h, Index p) {
    const Index n = m + h + p;
    if (n <= 0 || m < 0 || h < 0 || p < 0 || 2 * m + h == 0) {
        throw InputError("model_flat_subspace: invalid (m, h, p)");
    }
    // Free directions: x_z, y_z and the imaginary axes of the w block.
    RealMatrix basis = RealMatrix::Zero(2 * n, 2 * m + h);
    for (Index i = 0; i < m; ++i) {
        basis(i, i) = 1.0;          // x_{z_i}
        basis(n + i, m + i) = 1.0;  // y_{z_i}
    }
    for (Index a = 0; a < h; ++a) {
        basis(n + m + a, 2 * m + a) = 1.0;  // y_{w_a} = v_a
    }
    return RealSubspace(n, basis);
}

}  // namespace crscope
