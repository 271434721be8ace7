#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crscope/numerics.hpp"

namespace crscope {

// A real-linear family H_c = sum_j c_j H_j of Hermitian n x n matrices.
struct HermitianPencil {
    Index dim = 0;
    std::vector<ComplexMatrix> mats;

    HermitianPencil(Index dim_, std::vector<ComplexMatrix> mats_);
    Index size() const { return static_cast<Index>(mats.size()); }
};

ComplexMatrix combine(const HermitianPencil& p, const RealVector& c);

// Options for the sphere searches. Determinism: identical seed and opts give
// identical certificates.
struct SearchOpts {
    Index samples = 4096;
    int restarts = 8;
    int refine_iters = 50;
    std::uint64_t seed = 20250801;
    Tolerance tol{};
};

// Witness coefficient vector with the eigenvalue counts it achieves. The
// sampled bound is one-sided: q_min is an upper bound on the true sphere
// minimum.
struct SignatureCertificate {
    RealVector c;           // unit vector
    Signature sig;
    double objective = 0.0; // the minimized surrogate value
    Index samples_used = 0;
    std::uint64_t seed = 0;
    double eig_tol = 0.0;
    bool near_band = false; // some eigenvalue within 10x of the zero band
};

// min over unit c of min(pos(H_c), neg(H_c)); every nonzero combination has
// at least q_min eigenvalues of each sign as far as the search saw.
struct TwoSidedResult {
    Index q_min = 0;
    SignatureCertificate cert;
};
TwoSidedResult min_two_sided_signature(const HermitianPencil& p, const SearchOpts& opts = {});

// min over unit c of (zero + neg)(H_c): the largest q for which the weak
// q-pseudoconcavity test passes.
struct WeakOrderResult {
    Index q = 0;
    SignatureCertificate cert;
};
WeakOrderResult weak_pseudoconcavity_order(const HermitianPencil& p, const SearchOpts& opts = {});

// Multistart maximization of the smallest eigenvalue; a returned witness
// makes H_c positive definite. Absence is "not found", never a proof.
struct PseudoconvexWitness {
    RealVector c;
    double min_eigenvalue = 0.0;
};
std::optional<PseudoconvexWitness> pseudoconvex_witness(const HermitianPencil& p,
                                                        const SearchOpts& opts = {});

// Complex Hurwitz-Radon style bound rho_C(n) = 2 v_2(n) + 2, where v_2 is
// the 2-adic valuation.
Index rho_complex(Index n);

// For an even-dimensional pencil (dim = 2q) certified two-sided at level q,
// the span of the matrices can have dimension at most rho_C(q) + 1. A
// violation means the certificate overstated q.
struct SpanBoundReport {
    Index q = 0;
    Index span_dim = 0;
    Index bound = 0;
    bool within_bound = false;
};
SpanBoundReport span_dim_bound_check(const HermitianPencil& p, const Tolerance& tol = {});

}  // namespace crscope
