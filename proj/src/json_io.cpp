#include "crscope/json_io.hpp"

#include <cmath>

namespace crscope {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InputError("json: " + what);
}

double number_from_json(const Json& j, const char* what) {
    require(j.is_number(), std::string(what) + " must be a number");
    return j.get<double>();
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    require(j.is_array() && j.size() == 2, "complex scalar must be [re, im]");
    return {number_from_json(j[0], "re"), number_from_json(j[1], "im")};
}

Json real_matrix_to_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix real_matrix_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "real matrix must be a nonempty nested list");
    const Index rows = static_cast<Index>(j.size());
    require(j[0].is_array(), "real matrix rows must be lists");
    const Index cols = static_cast<Index>(j[0].size());
    RealMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        require(j[static_cast<std::size_t>(r)].is_array() &&
                    static_cast<Index>(j[static_cast<std::size_t>(r)].size()) == cols,
                "ragged real matrix");
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = number_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                       "matrix entry");
        }
    }
    return m;
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix complex_matrix_from_json(const Json& j, Index rows, Index cols) {
    require(j.is_array(), "complex matrix must be a nested list");
    const Index jr = static_cast<Index>(j.size());
    if (jr == 0) {
        require(rows >= 0 && cols >= 0, "cannot infer empty matrix shape");
        return ComplexMatrix::Zero(rows, cols);
    }
    require(j[0].is_array(), "complex matrix rows must be lists");
    const Index jc = static_cast<Index>(j[0].size());
    if (rows >= 0) require(jr == rows, "complex matrix row count mismatch");
    if (cols >= 0) require(jc == cols, "complex matrix column count mismatch");
    ComplexMatrix m(jr, jc);
    for (Index r = 0; r < jr; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        require(row.is_array() && static_cast<Index>(row.size()) == jc, "ragged complex matrix");
        for (Index c = 0; c < jc; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json complex_vector_to_json(const ComplexVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
    require(j.is_array(), "complex vector must be a list");
    ComplexVector v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j[static_cast<std::size_t>(i)]);
    return v;
}

Json real_vector_to_json(const RealVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

RealVector real_vector_from_json(const Json& j) {
    require(j.is_array(), "real vector must be a list");
    RealVector v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v(i) = number_from_json(j[static_cast<std::size_t>(i)], "vector entry");
    }
    return v;
}

Json quadric_to_json(const Quadric& q) {
    Json j;
    j["m"] = q.m;
    j["h"] = q.h;
    j["p"] = q.p;
    Json hs = Json::array(), bs = Json::array(), cs = Json::array(), ds = Json::array();
    for (const auto& m : q.H) hs.push_back(complex_matrix_to_json(m));
    for (const auto& m : q.B) bs.push_back(complex_matrix_to_json(m));
    for (const auto& m : q.C) cs.push_back(complex_matrix_to_json(m));
    for (const auto& m : q.D) ds.push_back(complex_matrix_to_json(m));
    j["H"] = std::move(hs);
    j["B"] = std::move(bs);
    j["C"] = std::move(cs);
    j["D"] = std::move(ds);
    return j;
}

Quadric quadric_from_json(const Json& j) {
    require(j.is_object(), "quadric payload must be an object");
    const Index m = j.value("m", Index{0});
    const Index h = j.value("h", Index{0});
    const Index p = j.value("p", Index{0});
    auto mats = [&](const char* key, Index count, Index rows, Index cols) {
        std::vector<ComplexMatrix> out;
        if (!j.contains(key)) {
            require(count == 0, std::string("missing matrix list ") + key);
            return out;
        }
        const auto& arr = j.at(key);
        require(arr.is_array() && static_cast<Index>(arr.size()) == count,
                std::string("expected ") + std::to_string(count) + " matrices under " + key);
        for (const auto& mj : arr) out.push_back(complex_matrix_from_json(mj, rows, cols));
        return out;
    };
    return Quadric(m, h, p, mats("H", h, m, m), mats("B", p, m, m), mats("C", p, m, m),
                   mats("D", p, m, h));
}

Json pencil_to_json(const HermitianPencil& p) {
    Json j;
    j["dim"] = p.dim;
    Json mats = Json::array();
    for (const auto& m : p.mats) mats.push_back(complex_matrix_to_json(m));
    j["mats"] = std::move(mats);
    return j;
}

HermitianPencil pencil_from_json(const Json& j) {
    require(j.is_object() && j.contains("dim") && j.contains("mats"),
            "pencil payload needs dim and mats");
    const Index dim = j.at("dim").get<Index>();
    std::vector<ComplexMatrix> mats;
    for (const auto& mj : j.at("mats")) mats.push_back(complex_matrix_from_json(mj, dim, dim));
    return HermitianPencil(dim, std::move(mats));
}

Json subspace_to_json(const RealSubspace& s) {
    Json j;
    j["ambient_n"] = s.ambient_n;
    j["basis"] = real_matrix_to_json(s.basis);
    return j;
}

RealSubspace subspace_from_json(const Json& j) {
    require(j.is_object() && j.contains("ambient_n") && j.contains("basis"),
            "subspace payload needs ambient_n and basis");
    return RealSubspace(j.at("ambient_n").get<Index>(), real_matrix_from_json(j.at("basis")));
}

Json zpolynomial_to_json(const ZPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.raw().terms()) {
        Json t;
        t["alpha"] = key.alpha;
        t["beta"] = key.beta;
        t["coeff"] = complex_to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

ZPolynomial zpolynomial_from_json(const Json& j, Index n) {
    require(j.is_array(), "polynomial must be a list of terms");
    ZZbarPoly f(n);
    for (const auto& tj : j) {
        require(tj.is_object() && tj.contains("alpha") && tj.contains("beta") &&
                    tj.contains("coeff"),
                "polynomial term needs alpha, beta, coeff");
        const auto alpha = tj.at("alpha").get<std::vector<int>>();
        const auto beta = tj.at("beta").get<std::vector<int>>();
        f += ZZbarPoly::monomial(n, alpha, beta, complex_from_json(tj.at("coeff")));
    }
    // Reality closure: average with the conjugate-flip, then require the
    // adjustment to be roundoff-sized.
    const ZZbarPoly closed = Complex(0.5, 0) * (f + f.conjugated());
    const ZZbarPoly defect = f - closed;
    double worst = 0.0;
    for (const auto& [key, c] : defect.terms()) worst = std::max(worst, std::abs(c));
    require(worst <= 1e-9 * std::max(1.0, f.max_coeff_magnitude()),
            "polynomial is not real-valued (conjugate closure failed)");
    return ZPolynomial(closed);
}

Json patch_to_json(const PatchDefinition& p) {
    Json j;
    j["n"] = p.vars();
    Json rho = Json::array();
    for (const auto& r : p.rho()) rho.push_back(zpolynomial_to_json(r));
    j["rho"] = std::move(rho);
    j["box"] = Json{{"lo", real_vector_to_json(p.box().lo)},
                    {"hi", real_vector_to_json(p.box().hi)}};
    return j;
}

PatchDefinition patch_from_json(const Json& j) {
    require(j.is_object() && j.contains("n") && j.contains("rho"), "patch payload needs n, rho");
    const Index n = j.at("n").get<Index>();
    std::vector<ZPolynomial> rho;
    for (const auto& rj : j.at("rho")) rho.push_back(zpolynomial_from_json(rj, n));
    CoordinateBox box = CoordinateBox::cube(n, 1.0);
    if (j.contains("box")) {
        box.lo = real_vector_from_json(j.at("box").at("lo"));
        box.hi = real_vector_from_json(j.at("box").at("hi"));
    }
    return PatchDefinition(n, std::move(rho), std::move(box));
}

Json holo_polynomial_to_json(const HoloPolynomial& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        Json tj;
        tj["alpha"] = t.alpha;
        tj["coeff"] = complex_to_json(t.coeff);
        terms.push_back(std::move(tj));
    }
    return terms;
}

HoloPolynomial holo_polynomial_from_json(const Json& j, Index n) {
    require(j.is_array(), "holomorphic polynomial must be a list of terms");
    std::vector<HoloPolynomial::Term> terms;
    for (const auto& tj : j) {
        require(tj.is_object() && tj.contains("alpha") && tj.contains("coeff"),
                "holomorphic term needs alpha and coeff");
        terms.push_back({tj.at("alpha").get<std::vector<int>>(),
                         complex_from_json(tj.at("coeff"))});
    }
    return HoloPolynomial(n, std::move(terms));
}

Json catalog_entry_to_json(const CatalogEntry& e) {
    if (std::holds_alternative<Quadric>(e)) {
        return problem_file("quadric", quadric_to_json(std::get<Quadric>(e)));
    }
    return problem_file("pencil", pencil_to_json(std::get<HermitianPencil>(e)));
}

Json signature_to_json(const Signature& s) {
    return Json{{"pos", s.pos}, {"zero", s.zero}, {"neg", s.neg}};
}

Json certificate_to_json(const SignatureCertificate& c) {
    Json j;
    j["c"] = real_vector_to_json(c.c);
    j["signature"] = signature_to_json(c.sig);
    j["objective"] = c.objective;
    j["samples_used"] = c.samples_used;
    j["seed"] = c.seed;
    j["eig_tol"] = c.eig_tol;
    j["near_band"] = c.near_band;
    return j;
}

Json verification_report_to_json(const VerificationReport& r) {
    Json j;
    j["function"] = r.function;
    j["max_interior"] = r.max_interior;
    j["max_boundary"] = r.max_boundary;
    j["argmax_interior"] = complex_vector_to_json(r.argmax_interior);
    j["argmax_boundary"] = complex_vector_to_json(r.argmax_boundary);
    j["satisfied"] = r.satisfied;
    j["tol"] = r.tol;
    j["samples"] = Json{{"interior", r.interior_samples}, {"boundary", r.boundary_samples}};
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

Json problem_file(const std::string& kind, Json payload, Json options) {
    Json j;
    j["kind"] = kind;
    j["payload"] = std::move(payload);
    j["options"] = std::move(options);
    return j;
}

}  // namespace crscope
