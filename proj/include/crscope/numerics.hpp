#pragma once

#include <Eigen/Dense>
#include <complex>

#include "crscope/errors.hpp"

namespace crscope {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

// Relative tolerances shared across the library: rank_tol is the singular
// value cutoff, eig_tol the half-width of the eigenvalue zero band.
struct Tolerance {
    double rank_tol = 1e-9;
    double eig_tol = 1e-8;

    Tolerance() = default;
    Tolerance(double rank, double eig);
};

// Counts of eigenvalues above, inside and below the zero band.
struct Signature {
    Index pos = 0;
    Index zero = 0;
    Index neg = 0;

    bool operator==(const Signature&) const = default;
    Signature flipped() const { return {neg, zero, pos}; }
};

bool all_finite(const RealMatrix& m);
bool all_finite(const ComplexMatrix& m);

// [[X, -Y], [Y, X]] for M = X + iY. Multiplication by i on C^q corresponds to
// the block structure J = [[0,-I],[I,0]] on R^{2q}.
RealMatrix realify(const ComplexMatrix& m);

// Number of singular values above rank_tol * sigma_max; 0 for a zero matrix.
Index numeric_rank(const RealMatrix& m, const Tolerance& tol = {});
Index numeric_rank(const ComplexMatrix& m, const Tolerance& tol = {});

RealVector singular_values(const RealMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

// Ratio between the smallest kept and the cutoff (and the cutoff and the
// largest dropped) singular value. Tests use it to reject near-degenerate
// random draws.
double rank_margin(const RealMatrix& m, const Tolerance& tol = {});

// Ascending eigenvalues of a Hermitian matrix. The input must agree with its
// conjugate transpose within 1e-10 relative; it is symmetrized before the
// solve.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

Signature signature(const ComplexMatrix& h, const Tolerance& tol = {});
Signature signature_of_eigenvalues(const RealVector& eigs, double eig_tol);

// The grouped complex structure of the (x, y, u, v, r, s) coordinates:
// block-diagonal [[0,-I],[I,0]] pieces of sizes n_z, n_w, n_t.
RealMatrix standard_complex_structure(Index n_z, Index n_w, Index n_t);

// Complex structure in the global (x_1..x_N, y_1..y_N) ordering:
// [[0,-I_N],[I_N,0]].
RealMatrix global_complex_structure(Index n);

// Permutation P with P * grouped = global, where grouped stacks
// (x_z, y_z, x_w, y_w, x_t, y_t) and global stacks all real parts before all
// imaginary parts. Satisfies P * J_grouped * P^T = J_global.
RealMatrix grouped_to_global_permutation(Index n_z, Index n_w, Index n_t);

// Frobenius-relative Hermitian deviation ||H - H*|| / max(1, ||H||).
double hermitian_deviation(const ComplexMatrix& h);

// Moore-Penrose pseudo-inverse with the same relative cutoff as numeric_rank.
RealMatrix pseudo_inverse(const RealMatrix& m, const Tolerance& tol = {});

// Orthonormal basis of the (right) null space of m, one column per kernel
// direction at the rank_tol cutoff.
ComplexMatrix kernel_basis(const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace crscope
