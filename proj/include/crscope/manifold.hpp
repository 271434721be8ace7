#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "crscope/crlinear.hpp"
#include "crscope/pencil.hpp"
#include "crscope/zpoly.hpp"

namespace crscope {

// Real-valued polynomial in z, conj(z): every term (alpha, beta, c) is
// matched by (beta, alpha, conj(c)).
class ZPolynomial {
  public:
    ZPolynomial() = default;
    explicit ZPolynomial(ZZbarPoly p, int max_degree = 8);

    Index vars() const { return poly_.vars(); }
    const ZZbarPoly& raw() const { return poly_; }

  private:
    ZZbarPoly poly_;
};

double poly_eval(const ZPolynomial& f, const ComplexVector& z);

struct WirtingerGradients {
    ComplexVector dz;     // holomorphic part
    ComplexVector dzbar;  // equals conj(dz) for real-valued f
};
WirtingerGradients wirtinger_gradients(const ZPolynomial& f, const ComplexVector& z);

// Hermitian matrix of mixed second derivatives; the quadratic form z* H z
// has complex Hessian H.
ComplexMatrix complex_hessian(const ZPolynomial& f, const ComplexVector& z);

// Axis box in the real coordinates (x_1..x_n, y_1..y_n) used for sampling.
struct CoordinateBox {
    RealVector lo, hi;

    static CoordinateBox cube(Index n, double half_width);
    ComplexVector center() const;
};

// Codimension-k patch {rho_1 = 0, ..., rho_k = 0} of C^n.
class PatchDefinition {
  public:
    PatchDefinition(Index n, std::vector<ZPolynomial> rho, CoordinateBox box);

    Index vars() const { return n_; }
    Index codim() const { return static_cast<Index>(rho_.size()); }
    const std::vector<ZPolynomial>& rho() const { return rho_; }
    const CoordinateBox& box() const { return box_; }

    RealVector residual(const ComplexVector& z) const;     // rho values
    ComplexMatrix dbar_matrix(const ComplexVector& z) const;  // k x n rows of del rho_j

    // Generic rank of the dbar matrix, estimated once from 32 random
    // on-manifold samples and cached.
    Index generic_dbar_rank(const Tolerance& tol = {}) const;

  private:
    struct GenericRankCache {
        std::once_flag flag;
        Index value = -1;
    };

    Index n_;
    std::vector<ZPolynomial> rho_;
    CoordinateBox box_;
    std::shared_ptr<GenericRankCache> generic_cache_ = std::make_shared<GenericRankCache>();
};

struct PointReport {
    ComplexVector point;
    double on_manifold = 0.0;  // residual norm
    Index dbar_rank = 0;
    CRType cr_type;
    bool regular = false;
    std::optional<Index> weak_order;
    std::optional<RealVector> pseudoconvex_witness;
};

PointReport classify_point(const PatchDefinition& p, const ComplexVector& z,
                           const Tolerance& tol = {}, double on_manifold_tol = 1e-8);

// Levi pencil at a CR-regular point: restrictions W* Hess(rho_j) W to an
// orthonormal basis W of T^{1,0}.
HermitianPencil levi_pencil_at(const PatchDefinition& p, const ComplexVector& z,
                               const Tolerance& tol = {});

// Largest q such that every combination of the Levi pencil has at least q
// nonpositive eigenvalues (0 means a pseudoconvex witness direction exists).
Index pseudoconcavity_order_at(const PatchDefinition& p, const ComplexVector& z,
                               const SearchOpts& opts = {});

// Affine complex embedding zeta -> base + L zeta with injective L.
struct AffineEmbedding {
    ComplexVector base;
    ComplexMatrix linear;
};

PatchDefinition slice_patch(const PatchDefinition& p, const AffineEmbedding& a,
                            const Tolerance& tol = {});

// Newton projection of uniform box samples onto the patch; deterministic per
// seed, throws when fewer than 10% of attempts converge.
std::vector<ComplexVector> sample_points(const PatchDefinition& p, Index count,
                                         std::uint64_t seed, const Tolerance& tol = {});

// A single Newton projection attempt from the given start point.
std::optional<ComplexVector> project_to_patch(const PatchDefinition& p, const ComplexVector& z0,
                                              const Tolerance& tol = {});

}  // namespace crscope
