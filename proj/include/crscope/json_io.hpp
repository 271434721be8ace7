#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "crscope/catalog.hpp"
#include "crscope/crlinear.hpp"
#include "crscope/manifold.hpp"
#include "crscope/maxmod.hpp"
#include "crscope/pencil.hpp"
#include "crscope/quadric.hpp"

namespace crscope {

// Stable key order so byte-identical inputs give byte-identical reports.
using Json = nlohmann::ordered_json;

// Scalars are encoded as [re, im]; matrices as row-major nested lists.
Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

Json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j, Index rows = -1, Index cols = -1);

Json complex_vector_to_json(const ComplexVector& v);
ComplexVector complex_vector_from_json(const Json& j);

Json real_vector_to_json(const RealVector& v);
RealVector real_vector_from_json(const Json& j);

Json quadric_to_json(const Quadric& q);
Quadric quadric_from_json(const Json& j);

Json pencil_to_json(const HermitianPencil& p);
HermitianPencil pencil_from_json(const Json& j);

Json subspace_to_json(const RealSubspace& s);
RealSubspace subspace_from_json(const Json& j);

// Polynomial terms: {alpha: [...], beta: [...], coeff: [re, im]}. The loader
// symmetrizes against the conjugate-flipped polynomial and rejects inputs
// whose closure changes them beyond roundoff.
Json zpolynomial_to_json(const ZPolynomial& f);
ZPolynomial zpolynomial_from_json(const Json& j, Index n);

Json patch_to_json(const PatchDefinition& p);
PatchDefinition patch_from_json(const Json& j);

Json holo_polynomial_to_json(const HoloPolynomial& f);
HoloPolynomial holo_polynomial_from_json(const Json& j, Index n);

Json catalog_entry_to_json(const CatalogEntry& e);

Json certificate_to_json(const SignatureCertificate& c);
Json signature_to_json(const Signature& s);
Json verification_report_to_json(const VerificationReport& r);

// Wraps a payload as a problem file {kind, payload, options}.
Json problem_file(const std::string& kind, Json payload, Json options = Json::object());

}  // namespace crscope
