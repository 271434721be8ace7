#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crscope/manifold.hpp"

namespace crscope {

// Holomorphic polynomial: z-monomials only.
class HoloPolynomial {
  public:
    struct Term {
        std::vector<int> alpha;
        Complex coeff;
    };

    HoloPolynomial(Index n, std::vector<Term> terms);

    Index vars() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    Complex eval(const ComplexVector& z) const;
    std::string describe() const;

    // Random coefficients (complex standard normal) over all monomials of
    // total degree <= degree.
    static HoloPolynomial random(Index n, int degree, std::uint64_t seed);
    // Taylor polynomial of exp(-z^2) in one variable through order `order`
    // in z^2 (degree 2*order in z).
    static HoloPolynomial exp_minus_z2_taylor(int order = 12);

  private:
    Index n_;
    std::vector<Term> terms_;
};

// Point cloud on a patch split into interior and boundary by a predicate
// band.
struct SampledDomain {
    std::shared_ptr<const PatchDefinition> patch;  // null for bare point clouds
    std::vector<ComplexVector> interior;
    std::vector<ComplexVector> boundary;
    std::string boundary_rule;
};

SampledDomain partition_domain(const std::vector<ComplexVector>& points,
                               const std::function<double(const ComplexVector&)>& predicate,
                               double band, std::string rule_description = {});

// Same split, but anchored to a patch: every kept point must lie on the
// manifold within 1e-10.
SampledDomain partition_domain(const PatchDefinition& patch,
                               const std::vector<ComplexVector>& points,
                               const std::function<double(const ComplexVector&)>& predicate,
                               double band, std::string rule_description = {});

struct VerificationReport {
    std::string function;
    double max_interior = 0.0;
    double max_boundary = 0.0;
    ComplexVector argmax_interior;
    ComplexVector argmax_boundary;
    bool satisfied = false;
    double tol = 0.0;
    Index interior_samples = 0;
    Index boundary_samples = 0;
    std::string warning;
};

// Sampled check of max_{interior} |f| <= max_{boundary} |f| (1 + tol).
// Evidence, not proof.
VerificationReport verify_max_modulus(const SampledDomain& d, const HoloPolynomial& f,
                                      double tol = 1e-6);

struct PsiRegion {
    std::vector<ComplexVector> psi_points;         // set-theoretically p-pseudoconvex
    std::vector<ComplexVector> complement_points;  // weakly p-pseudoconcave
    std::vector<ComplexVector> unclassified;       // CR-singular, no finite test
};

// Points where the patch is p-pseudoconvex: the weak pseudoconcavity order
// of the Levi pencil is below p.
PsiRegion psi_region(const PatchDefinition& patch, const std::vector<ComplexVector>& points,
                     Index p, const SearchOpts& opts = {});

// Sampled check of max over all points <= max over the psi estimate.
VerificationReport verify_psi_bound(const PatchDefinition& patch,
                                    const std::vector<ComplexVector>& points,
                                    const HoloPolynomial& f, Index p, double tol = 1e-6,
                                    const SearchOpts& opts = {});

}  // namespace crscope
