#pragma once

#include <string>
#include <variant>
#include <vector>

#include "crscope/manifold.hpp"
#include "crscope/pencil.hpp"
#include "crscope/quadric.hpp"

namespace crscope {

using CatalogEntry = std::variant<Quadric, HermitianPencil>;

// Named fixtures. Accepted names: mk(n,k), mlambda(<complex>), mprime,
// clifford8, r1r2_7, adams_m8. Unknown names raise InputError.
CatalogEntry example_catalog(const std::string& name);
std::vector<std::string> catalog_names();

// w + conj(w) = 0, t = z conj(z) + conj(z)^2/2 + lambda w conj(z) in C^3.
Quadric make_mlambda(Complex lambda);
// w + conj(w) = 0, t = w conj(z) in C^3.
Quadric make_mprime();
// Slice M_k of the rigid pseudoconcave quadric by {k u^1 = i u^2}, written
// as a single t-equation on (z, w) in C^{2n}.
Quadric make_mk_sliced(Index n, double k);
// Two-equation quadric on C^8 whose derived pencil meets the Hurwitz-Radon
// span bound with room to spare.
Quadric make_adams_m8();

// Five anticommuting Hermitian 8x8 matrices; every nonzero combination has
// signature (4, 0, 4).
HermitianPencil make_clifford8();
// Three Hermitian 7x7 matrices; every nonzero combination has at least 3
// eigenvalues of each sign.
HermitianPencil make_r1r2_7();

// Polynomial patches for the manifold/maxmod suites.
PatchDefinition make_ex19_patch(Index n, double half_width = 1.0);
PatchDefinition make_mk_patch(Index n, double k, double half_width = 1.0);
PatchDefinition make_ak_patch(int k, double half_width = 1.0);
PatchDefinition make_sphere_patch(Index n, double radius = 1.0);
PatchDefinition make_real_line_patch(double half_width = 1.25);
// The quadric as a polynomial patch on C^{m+h+p}.
PatchDefinition quadric_to_patch(const Quadric& q, double half_width = 1.0);

Complex parse_complex(const std::string& text);

}  // namespace crscope
