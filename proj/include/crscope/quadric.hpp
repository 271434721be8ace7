#pragma once

#include <optional>
#include <vector>

#include "crscope/numerics.hpp"
#include "crscope/pencil.hpp"

namespace crscope {

// Normal-form quadric
//   u^j   = 1/2 z* H_j z,                                 1 <= j <= h,
//   t^i   = z* B_i z + 1/2 z* C_i conj(z) + z* D_i v,      1 <= i <= p,
// in C^{m+h+p} with z in C^m, w = u + iv in C^h, t in C^p.
struct Quadric {
    Index m = 0, h = 0, p = 0;
    std::vector<ComplexMatrix> H;  // h Hermitian m x m
    std::vector<ComplexMatrix> B;  // p general m x m
    std::vector<ComplexMatrix> C;  // p symmetric m x m
    std::vector<ComplexMatrix> D;  // p rectangular m x h

    Quadric(Index m_, Index h_, Index p_, std::vector<ComplexMatrix> H_,
            std::vector<ComplexMatrix> B_, std::vector<ComplexMatrix> C_,
            std::vector<ComplexMatrix> D_);

    Index ambient_n() const { return m + h + p; }
    Index codim() const { return h + 2 * p; }
    Index real_dim() const { return 2 * ambient_n() - codim(); }
};

// One t-equation's linear part (z, v) -> B z + C conj(z) + D v.
struct LambdaMap {
    ComplexMatrix B, C, D;

    LambdaMap(ComplexMatrix B_, ComplexMatrix C_, ComplexMatrix D_);
    Index m() const { return B.rows(); }
    Index h() const { return D.cols(); }
};

// The 2m x (2m+h) real matrix [[F+P, Q-G, R], [G+Q, F-P, S]] with
// B = F+iG, C = P+iQ, D = R+iS.
RealMatrix lambda_real_matrix(const LambdaMap& l);

struct EquationTransversality {
    Index rank = 0;
    bool transversal = false;
};

struct TransversalityReport {
    std::vector<EquationTransversality> per_equation;
    Index combined_rank = 0;
    bool combined_transversal = false;
    // The combined stacked-rank criterion extends the single-equation test;
    // it is reported but flagged.
    bool combined_is_extension = false;
    bool transversal = false;  // every equation passes
};

// Gauss-map transversality of the CR singularity at 0: for each t-equation,
// the rank of lambda_real_matrix must be the full 2m.
TransversalityReport is_transversal_origin(const Quadric& q, const Tolerance& tol = {});

// CR type (r, s) of ker Lambda_{B,C}: r = dim_C(ker B intersect ker conj(C)),
// 2r + s = real kernel dimension.
struct KernelCRType {
    Index r = 0;
    Index s = 0;
};
KernelCRType kernel_cr_type(const ComplexMatrix& B, const ComplexMatrix& C,
                            const Tolerance& tol = {});

// Per-equation residual whose common zeros on the quadric are its CR-singular
// points: B z + C conj(z) + D v + (i/2) w, with
// w_i = sum_a conj(D_{i,a}) (z* H_a z).
std::vector<ComplexVector> singular_residual(const Quadric& q, const ComplexVector& z,
                                             const RealVector& v);

// Axis-aligned box in the (Re z, Im z, v) parameter space.
struct ParamBox {
    RealVector lo, hi;
};

struct SingularCluster {
    std::vector<RealVector> points;  // (x, y, v) coordinates
    Index dim = 0;                   // PCA rank of the centered cloud
};

struct SingularLocusScan {
    std::vector<SingularCluster> clusters;
    Index total_points = 0;
};

// Grid scan of the residual zero set with Newton polishing; clusters are
// split by single linkage at twice the grid spacing and each one gets a PCA
// dimension estimate.
SingularLocusScan singular_locus_scan(const Quadric& q, const ParamBox& box, Index grid,
                                      const Tolerance& tol = {});

// Pencil of k = h + 2p Hermitian matrices: H_1..H_h followed by
// (B_i + B_i*)/2 and i(B_i* - B_i)/2 for each t-equation.
HermitianPencil augmented_pencil(const Quadric& q);

struct GarrityResult {
    ComplexMatrix R;  // 4n x 4n block matrix [[I, ikI], [ikI, -I]]
    Complex det;
    bool transversal = false;
};

// Garrity's criterion for the M_k family: transversal iff det R != 0;
// det R = (k^2 - 1)^{2n}.
GarrityResult garrity_matrix_Mk(Index n, double k, const Tolerance& tol = {});

}  // namespace crscope
