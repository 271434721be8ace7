#pragma once

#include "crscope/numerics.hpp"

namespace crscope {

// CR type (m, h) of a real subspace or tangent plane: m complex directions,
// h totally real ones, 2m + h = real dimension.
struct CRType {
    Index m = 0;
    Index h = 0;

    bool operator==(const CRType&) const = default;
    Index real_dim() const { return 2 * m + h; }
};

// A d-dimensional real linear subspace of C^n, given by a spanning 2n x d
// real matrix in the global (x_1..x_n, y_1..y_n) coordinates.
struct RealSubspace {
    Index ambient_n = 0;
    RealMatrix basis;

    RealSubspace(Index n, RealMatrix b, const Tolerance& tol = {});
    Index dim() const { return basis.cols(); }
};

// crdim(E_T) = d - rank(T | JT)/2, crcodim = rank(T | JT) - d.
CRType cr_type_of_subspace(const RealSubspace& s, const Tolerance& tol = {});

// Real dimension of the stratum of d-planes of CR type (m, h) inside the
// Grassmannian of real d-planes of C^n: 2m(n-m) + h(2n-2m-h).
Index stratum_dim(Index n, Index m, Index h);

// Codimension 2(n-h)(k-h) of the stratum of (2n-k)-planes of type
// (n-h, 2h-k) inside Gr^R_{2n-k}(C^n); admissible for ceil(k/2) <= h <= k <= n.
Index stratum_codim(Index n, Index k, Index h);

// Expected dimension k-2 of the singular stratum of type (n-k+1, k-2) for a
// (2n-k)-dimensional submanifold whose Gauss map is transversal.
Index type_at_transversal_stratum(Index n, Index k);

// Transversal complex dimension m + floor((k+1)/2) of a CR manifold of CR
// dimension m and CR codimension k.
Index transversal_complex_dim_cr(Index m, Index k);

// Builders used by tests and the CLI.
RealSubspace complex_subspace(Index n, const ComplexMatrix& columns, const Tolerance& tol = {});
RealSubspace model_flat_subspace(Index m, Index h, Index p);  // {Re w = 0, t = 0} in C^{m+h+p}

}  // namespace crscope
