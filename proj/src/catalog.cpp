#include "crscope/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace crscope {

namespace {

ComplexMatrix cm(std::initializer_list<std::initializer_list<Complex>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = static_cast<Index>(rows.begin()->size());
    ComplexMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix zero_m(Index r, Index c) { return ComplexMatrix::Zero(r, c); }

// z* C conj(z) restricted to the z block.
ZZbarPoly antiholomorphic_form(Index n, const ComplexMatrix& c, Index off) {
    ZZbarPoly f(n);
    for (Index r = 0; r < c.rows(); ++r) {
        for (Index s = 0; s < c.cols(); ++s) {
            if (c(r, s) == Complex(0, 0)) continue;
            std::vector<int> al(static_cast<std::size_t>(n), 0),
                be(static_cast<std::size_t>(n), 0);
            be[static_cast<std::size_t>(off + r)] += 1;
            be[static_cast<std::size_t>(off + s)] += 1;
            f += ZZbarPoly::monomial(n, al, be, c(r, s));
        }
    }
    return f;
}

ZZbarPoly real_part(const ZZbarPoly& g) {
    return Complex(0.5, 0) * (g + g.conjugated());
}

ZZbarPoly imag_part(const ZZbarPoly& g) {
    return Complex(0, -0.5) * (g - g.conjugated());
}

}  // namespace

Quadric make_mlambda(Complex lambda) {
    std::vector<ComplexMatrix> H{zero_m(1, 1)};
    std::vector<ComplexMatrix> B{cm({{Complex(1, 0)}})};
    std::vector<ComplexMatrix> C{cm({{Complex(1, 0)}})};
    std::vector<ComplexMatrix> D{cm({{Complex(0, 1) * lambda}})};
    return Quadric(1, 1, 1, std::move(H), std::move(B), std::move(C), std::move(D));
}

Quadric make_mprime() {
    std::vector<ComplexMatrix> H{zero_m(1, 1)};
    std::vector<ComplexMatrix> B{zero_m(1, 1)};
    std::vector<ComplexMatrix> C{zero_m(1, 1)};
    std::vector<ComplexMatrix> D{cm({{Complex(0, 1)}})};
    return Quadric(1, 1, 1, std::move(H), std::move(B), std::move(C), std::move(D));
}

Quadric make_mk_sliced(Index n, double k) {
    if (n < 1) throw InputError("make_mk_sliced: n must be positive");
    if (!(k > 0.0)) throw InputError("make_mk_sliced: k must be positive");
    const Index m = 2 * n;
    ComplexMatrix b = ComplexMatrix::Zero(m, m);
    b.topLeftCorner(n, n) = 0.5 * ComplexMatrix::Identity(n, n);
    b.bottomRightCorner(n, n) = -0.5 * ComplexMatrix::Identity(n, n);
    b.topRightCorner(n, n) = Complex(0, 0.5 / k) * ComplexMatrix::Identity(n, n);
    b.bottomLeftCorner(n, n) = Complex(0, 0.5 / k) * ComplexMatrix::Identity(n, n);
    return Quadric(m, 0, 1, {}, {b}, {zero_m(m, m)}, {zero_m(m, 0)});
}

Quadric make_adams_m8() {
    ComplexMatrix b1 = ComplexMatrix::Zero(8, 8);
    b1.topRightCorner(4, 4) = ComplexMatrix::Identity(4, 4);
    // The form z* C conj(z) only sees the symmetric part of C, so the
    // lower-left identity block enters symmetrized.
    ComplexMatrix c1 = ComplexMatrix::Zero(8, 8);
    c1.bottomLeftCorner(4, 4) = 0.5 * ComplexMatrix::Identity(4, 4);
    c1.topRightCorner(4, 4) = 0.5 * ComplexMatrix::Identity(4, 4);
    ComplexMatrix b2 = ComplexMatrix::Zero(8, 8);
    b2(1, 7) = 1.0;
    b2(2, 6) = 1.0;
    b2(3, 5) = 1.0;
    return Quadric(8, 0, 2, {}, {b1, b2}, {c1, zero_m(8, 8)}, {zero_m(8, 0), zero_m(8, 0)});
}

HermitianPencil make_clifford8() {
    const Complex i(0, 1);
    const ComplexMatrix q1 = cm({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    const ComplexMatrix q2 = cm({{0, 0, i, 0}, {0, 0, 0, -i}, {i, 0, 0, 0}, {0, -i, 0, 0}});
    const ComplexMatrix q3 = cm({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
    const ComplexMatrix q4 = cm({{0, 0, 0, i}, {0, 0, i, 0}, {0, i, 0, 0}, {i, 0, 0, 0}});
    auto embed = [](const ComplexMatrix& q) {
        ComplexMatrix h = ComplexMatrix::Zero(8, 8);
        h.topRightCorner(4, 4) = q;
        h.bottomLeftCorner(4, 4) = q.adjoint();
        return h;
    };
    ComplexMatrix h5 = ComplexMatrix::Zero(8, 8);
    h5.topLeftCorner(4, 4) = ComplexMatrix::Identity(4, 4);
    h5.bottomRightCorner(4, 4) = -ComplexMatrix::Identity(4, 4);
    return HermitianPencil(8, {embed(q1), embed(q2), embed(q3), embed(q4), h5});
}

HermitianPencil make_r1r2_7() {
    ComplexMatrix r1 = ComplexMatrix::Zero(3, 4);
    r1(0, 0) = r1(1, 1) = r1(2, 2) = 1.0;
    ComplexMatrix r2 = ComplexMatrix::Zero(3, 4);
    r2(0, 1) = r2(1, 2) = r2(2, 3) = 1.0;
    auto embed = [](const ComplexMatrix& r) {
        ComplexMatrix h = ComplexMatrix::Zero(7, 7);
        h.topRightCorner(3, 4) = r;
        h.bottomLeftCorner(4, 3) = r.adjoint();
        return h;
    };
    ComplexMatrix h3 = ComplexMatrix::Zero(7, 7);
    h3.topLeftCorner(3, 3) = ComplexMatrix::Identity(3, 3);
    h3.bottomRightCorner(4, 4) = -ComplexMatrix::Identity(4, 4);
    return HermitianPencil(7, {embed(r1), embed(r2), h3});
}

PatchDefinition make_ex19_patch(Index n, double half_width) {
    if (n < 1) throw InputError("make_ex19_patch: n must be positive");
    const Index nv = 2 * n + 2;  // (u1, u2, z_1..z_n, w_1..w_n)
    ZZbarPoly rho1 = Complex(2, 0) * ZZbarPoly::re_coord(nv, 0);
    ZZbarPoly rho2 = Complex(2, 0) * ZZbarPoly::re_coord(nv, 1);
    for (Index i = 0; i < n; ++i) {
        const Index zi = 2 + i, wi = 2 + n + i;
        rho1 -= ZZbarPoly::abs2(nv, zi);
        rho1 += ZZbarPoly::abs2(nv, wi);
        // z_i conj(w_i) + conj(z_i) w_i
        rho2 -= ZZbarPoly::coord(nv, zi) * ZZbarPoly::coord_bar(nv, wi);
        rho2 -= ZZbarPoly::coord_bar(nv, zi) * ZZbarPoly::coord(nv, wi);
    }
    return PatchDefinition(nv, {ZPolynomial(rho1), ZPolynomial(rho2)},
                           CoordinateBox::cube(nv, half_width));
}

PatchDefinition make_mk_patch(Index n, double k, double half_width) {
    if (n < 1) throw InputError("make_mk_patch: n must be positive");
    if (!(k > 0.0)) throw InputError("make_mk_patch: k must be positive");
    const Index nv = 2 * n + 1;  // (u1, z_1..z_n, w_1..w_n)
    ZZbarPoly rho1 = Complex(2, 0) * ZZbarPoly::re_coord(nv, 0);
    ZZbarPoly rho2 = Complex(2 * k, 0) * ZZbarPoly::im_coord(nv, 0);
    for (Index i = 0; i < n; ++i) {
        const Index zi = 1 + i, wi = 1 + n + i;
        rho1 -= ZZbarPoly::abs2(nv, zi);
        rho1 += ZZbarPoly::abs2(nv, wi);
        // w* z + z* w
        rho2 -= ZZbarPoly::coord_bar(nv, wi) * ZZbarPoly::coord(nv, zi);
        rho2 -= ZZbarPoly::coord_bar(nv, zi) * ZZbarPoly::coord(nv, wi);
    }
    return PatchDefinition(nv, {ZPolynomial(rho1), ZPolynomial(rho2)},
                           CoordinateBox::cube(nv, half_width));
}

PatchDefinition make_ak_patch(int k, double half_width) {
    if (k < 1) throw InputError("make_ak_patch: k must be a positive integer");
    ZZbarPoly s = ZZbarPoly::abs2(3, 0) + ZZbarPoly::abs2(3, 1);
    ZZbarPoly sk = ZZbarPoly::constant(3, Complex(1, 0));
    for (int e = 0; e < k; ++e) sk = sk * s;
    const ZZbarPoly rho1 = ZZbarPoly::re_coord(3, 2) - sk;
    const ZZbarPoly rho2 = ZZbarPoly::im_coord(3, 2);
    return PatchDefinition(3, {ZPolynomial(rho1), ZPolynomial(rho2)},
                           CoordinateBox::cube(3, half_width));
}

PatchDefinition make_sphere_patch(Index n, double radius) {
    if (n < 1) throw InputError("make_sphere_patch: n must be positive");
    ZZbarPoly rho(n);
    for (Index i = 0; i < n; ++i) rho += ZZbarPoly::abs2(n, i);
    rho -= ZZbarPoly::constant(n, Complex(radius * radius, 0));
    return PatchDefinition(n, {ZPolynomial(rho)}, CoordinateBox::cube(n, 1.5 * radius));
}

PatchDefinition make_real_line_patch(double half_width) {
    const ZZbarPoly rho = ZZbarPoly::im_coord(1, 0);
    return PatchDefinition(1, {ZPolynomial(rho)}, CoordinateBox::cube(1, half_width));
}

PatchDefinition quadric_to_patch(const Quadric& q, double half_width) {
    const Index nv = q.ambient_n();  // (z_1..z_m, w_1..w_h, t_1..t_p)
    std::vector<ZPolynomial> rho;
    for (Index j = 0; j < q.h; ++j) {
        ZZbarPoly r = Complex(2, 0) * ZZbarPoly::re_coord(nv, q.m + j) -
                      ZZbarPoly::sesquilinear_form(nv, q.H[static_cast<std::size_t>(j)], 0);
        rho.emplace_back(std::move(r));
    }
    for (Index i = 0; i < q.p; ++i) {
        ZZbarPoly g = ZZbarPoly::sesquilinear_form(nv, q.B[static_cast<std::size_t>(i)], 0);
        g += Complex(0.5, 0) * antiholomorphic_form(nv, q.C[static_cast<std::size_t>(i)], 0);
        const auto& d = q.D[static_cast<std::size_t>(i)];
        for (Index r = 0; r < q.m; ++r) {
            for (Index a = 0; a < q.h; ++a) {
                if (d(r, a) == Complex(0, 0)) continue;
                g += d(r, a) * (ZZbarPoly::coord_bar(nv, r) * ZZbarPoly::im_coord(nv, q.m + a));
            }
        }
        const Index ti = q.m + q.h + i;
        rho.emplace_back(ZZbarPoly::re_coord(nv, ti) - real_part(g));
        rho.emplace_back(ZZbarPoly::im_coord(nv, ti) - imag_part(g));
    }
    return PatchDefinition(nv, std::move(rho), CoordinateBox::cube(nv, half_width));
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw InputError("parse_complex: empty literal");
    // Split into up to two signed parts; the imaginary one ends with 'i'.
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos = 1; pos <= s.size(); ++pos) {
        if (pos == s.size() ||
            ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E')) {
            parts.push_back(s.substr(start, pos - start));
            start = pos;
        }
    }
    if (parts.empty() || parts.size() > 2) throw InputError("parse_complex: bad literal " + text);
    double re = 0.0, im = 0.0;
    for (const auto& part : parts) {
        const bool imag = part.back() == 'i' || part.back() == 'I';
        std::string num = imag ? part.substr(0, part.size() - 1) : part;
        if (imag && (num.empty() || num == "+" || num == "-")) num += "1";
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(num, &used);
        } catch (const std::exception&) {
            throw InputError("parse_complex: bad literal " + text);
        }
        if (used != num.size()) throw InputError("parse_complex: bad literal " + text);
        (imag ? im : re) += v;
    }
    return {re, im};
}

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// name(arg1, arg2) -> {name, args}
std::pair<std::string, std::vector<std::string>> split_call(const std::string& name) {
    const auto open = name.find('(');
    if (open == std::string::npos) return {lowercase(name), {}};
    if (name.back() != ')') throw InputError("example_catalog: unbalanced parentheses in name");
    std::vector<std::string> args;
    std::string body = name.substr(open + 1, name.size() - open - 2);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
        const auto comma = body.find(',', start);
        if (comma == std::string::npos) {
            args.push_back(body.substr(start));
            break;
        }
        args.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    return {lowercase(name.substr(0, open)), args};
}

}  // namespace

CatalogEntry example_catalog(const std::string& name) {
    const auto [head, args] = split_call(name);
    if (head == "clifford8") return make_clifford8();
    if (head == "r1r2_7") return make_r1r2_7();
    if (head == "adams_m8") return make_adams_m8();
    if (head == "mprime") return make_mprime();
    if (head == "mlambda") {
        if (args.size() != 1) throw InputError("example_catalog: mlambda takes one argument");
        return make_mlambda(parse_complex(args[0]));
    }
    if (head == "mk") {
        if (args.size() != 2) throw InputError("example_catalog: mk takes (n, k)");
        try {
            const long n = std::stol(args[0]);
            const double k = std::stod(args[1]);
            return make_mk_sliced(static_cast<Index>(n), k);
        } catch (const std::logic_error&) {
            throw InputError("example_catalog: could not parse mk arguments '" + name + "'");
        }
    }
    throw InputError("example_catalog: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"mk(2,2)", "mlambda(1)", "mlambda(i)", "mlambda(1+i)", "mprime",
            "clifford8", "r1r2_7", "adams_m8"};
}

}  // namespace crscope
