#pragma once

#include <map>
#include <vector>

#include "crscope/numerics.hpp"

namespace crscope {

// Exponent pair of one monomial z^alpha conj(z)^beta.
struct MonomialKey {
    std::vector<int> alpha;
    std::vector<int> beta;

    auto operator<=>(const MonomialKey&) const = default;
};

// Complex-valued polynomial in z and conj(z). The real-valued wrapper used
// for defining functions lives in manifold.hpp; this is the arithmetic core.
class ZZbarPoly {
  public:
    explicit ZZbarPoly(Index n = 0) : n_(n) {}

    static ZZbarPoly constant(Index n, Complex c);
    static ZZbarPoly monomial(Index n, std::vector<int> alpha, std::vector<int> beta, Complex c);
    // Convenience builders for coordinates of C^n.
    static ZZbarPoly coord(Index n, Index i);        // z_i
    static ZZbarPoly coord_bar(Index n, Index i);    // conj(z_i)
    static ZZbarPoly re_coord(Index n, Index i);     // x_i
    static ZZbarPoly im_coord(Index n, Index i);     // y_i
    static ZZbarPoly abs2(Index n, Index i);         // |z_i|^2
    // z* A z embedded on the index range [off, off + A.rows()).
    static ZZbarPoly sesquilinear_form(Index n, const ComplexMatrix& a, Index off = 0);

    Index vars() const { return n_; }
    Index term_count() const { return static_cast<Index>(terms_.size()); }
    const std::map<MonomialKey, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    Complex eval(const ComplexVector& z) const;
    ZZbarPoly conjugated() const;
    ZZbarPoly dz(Index i) const;
    ZZbarPoly dzbar(Index i) const;

    // Substitution z = b + L zeta (and conj accordingly); the result is a
    // polynomial in zeta with L.cols() variables.
    ZZbarPoly compose_affine(const ComplexMatrix& l, const ComplexVector& b) const;

    double max_coeff_magnitude() const;
    // Frobenius-style distance to the conjugate-flipped polynomial, used to
    // test real-valuedness.
    double reality_defect() const;

    ZZbarPoly& operator+=(const ZZbarPoly& rhs);
    ZZbarPoly& operator-=(const ZZbarPoly& rhs);
    ZZbarPoly& operator*=(Complex c);
    friend ZZbarPoly operator+(ZZbarPoly a, const ZZbarPoly& b) { return a += b; }
    friend ZZbarPoly operator-(ZZbarPoly a, const ZZbarPoly& b) { return a -= b; }
    friend ZZbarPoly operator*(Complex c, ZZbarPoly a) { return a *= c; }
    friend ZZbarPoly operator*(const ZZbarPoly& a, const ZZbarPoly& b);

  private:
    void add_term(const MonomialKey& key, Complex c);

    Index n_;
    std::map<MonomialKey, Complex> terms_;
};

// Wirtinger derivative values at a point, one pass over the terms.
ComplexVector eval_dz(const ZZbarPoly& f, const ComplexVector& z);
ComplexVector eval_dzbar(const ZZbarPoly& f, const ComplexVector& z);
// Mixed second derivatives: entry (i, j) is d^2 f / (d zbar_i d z_j), so the
// form z* H z has matrix H.
ComplexMatrix eval_mixed_hessian(const ZZbarPoly& f, const ComplexVector& z);

}  // namespace crscope
