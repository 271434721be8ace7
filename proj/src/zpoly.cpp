#include "crscope/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crscope {

namespace {

Complex pow_int(Complex base, int e) {
    Complex out(1.0, 0.0);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

void check_index(Index n, Index i, const char* what) {
    if (i < 0 || i >= n) throw InputError(std::string(what) + ": variable index out of range");
}

}  // namespace

void ZZbarPoly::add_term(const MonomialKey& key, Complex c) {
    if (c == Complex(0.0, 0.0)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
    }
}

ZZbarPoly ZZbarPoly::constant(Index n, Complex c) {
    ZZbarPoly f(n);
    f.add_term({std::vector<int>(static_cast<std::size_t>(n), 0),
                std::vector<int>(static_cast<std::size_t>(n), 0)},
               c);
    return f;
}

ZZbarPoly ZZbarPoly::monomial(Index n, std::vector<int> alpha, std::vector<int> beta, Complex c) {
    if (static_cast<Index>(alpha.size()) != n || static_cast<Index>(beta.size()) != n) {
        throw InputError("ZZbarPoly::monomial: multi-index length != variable count");
    }
    for (int e : alpha) if (e < 0) throw InputError("ZZbarPoly::monomial: negative exponent");
    for (int e : beta) if (e < 0) throw InputError("ZZbarPoly::monomial: negative exponent");
    ZZbarPoly f(n);
    f.add_term({std::move(alpha), std::move(beta)}, c);
    return f;
}

ZZbarPoly ZZbarPoly::coord(Index n, Index i) {
    check_index(n, i, "ZZbarPoly::coord");
    std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    return monomial(n, std::move(a), std::move(b), Complex(1.0, 0.0));
}

ZZbarPoly ZZbarPoly::coord_bar(Index n, Index i) {
    check_index(n, i, "ZZbarPoly::coord_bar");
    std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    b[static_cast<std::size_t>(i)] = 1;
    return monomial(n, std::move(a), std::move(b), Complex(1.0, 0.0));
}

ZZbarPoly ZZbarPoly::re_coord(Index n, Index i) {
    return Complex(0.5, 0.0) * coord(n, i) + Complex(0.5, 0.0) * coord_bar(n, i);
}

ZZbarPoly ZZbarPoly::im_coord(Index n, Index i) {
    return Complex(0.0, -0.5) * coord(n, i) + Complex(0.0, 0.5) * coord_bar(n, i);
}

ZZbarPoly ZZbarPoly::abs2(Index n, Index i) {
    check_index(n, i, "ZZbarPoly::abs2");
    std::vector<int> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    b[static_cast<std::size_t>(i)] = 1;
    return monomial(n, std::move(a), std::move(b), Complex(1.0, 0.0));
}

ZZbarPoly ZZbarPoly::sesquilinear_form(Index n, const ComplexMatrix& a, Index off) {
    const Index m = a.rows();
    if (a.cols() != m) throw InputError("sesquilinear_form: matrix not square");
    if (off < 0 || off + m > n) throw InputError("sesquilinear_form: block out of range");
    ZZbarPoly f(n);
    for (Index r = 0; r < m; ++r) {
        for (Index c = 0; c < m; ++c) {
            if (a(r, c) == Complex(0.0, 0.0)) continue;
            std::vector<int> al(static_cast<std::size_t>(n), 0),
                be(static_cast<std::size_t>(n), 0);
            be[static_cast<std::size_t>(off + r)] += 1;  // conj(z_r)
            al[static_cast<std::size_t>(off + c)] += 1;  // z_c
            f.add_term({std::move(al), std::move(be)}, a(r, c));
        }
    }
    return f;
}

int ZZbarPoly::total_degree() const {
    int deg = 0;
    for (const auto& [key, c] : terms_) {
        int d = 0;
        for (int e : key.alpha) d += e;
        for (int e : key.beta) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Complex ZZbarPoly::eval(const ComplexVector& z) const {
    if (z.size() != n_) throw InputError("ZZbarPoly::eval: point dimension mismatch");
    Complex sum(0.0, 0.0);
    for (const auto& [key, c] : terms_) {
        Complex t = c;
        for (Index i = 0; i < n_; ++i) {
            const int a = key.alpha[static_cast<std::size_t>(i)];
            const int b = key.beta[static_cast<std::size_t>(i)];
            if (a > 0) t *= pow_int(z(i), a);
            if (b > 0) t *= pow_int(std::conj(z(i)), b);
        }
        sum += t;
    }
    return sum;
}

ZZbarPoly ZZbarPoly::conjugated() const {
    ZZbarPoly out(n_);
    for (const auto& [key, c] : terms_) out.add_term({key.beta, key.alpha}, std::conj(c));
    return out;
}

ZZbarPoly ZZbarPoly::dz(Index i) const {
    check_index(n_, i, "ZZbarPoly::dz");
    ZZbarPoly out(n_);
    for (const auto& [key, c] : terms_) {
        const int a = key.alpha[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        MonomialKey k = key;
        k.alpha[static_cast<std::size_t>(i)] -= 1;
        out.add_term(k, c * static_cast<double>(a));
    }
    return out;
}

ZZbarPoly ZZbarPoly::dzbar(Index i) const {
    check_index(n_, i, "ZZbarPoly::dzbar");
    ZZbarPoly out(n_);
    for (const auto& [key, c] : terms_) {
        const int b = key.beta[static_cast<std::size_t>(i)];
        if (b == 0) continue;
        MonomialKey k = key;
        k.beta[static_cast<std::size_t>(i)] -= 1;
        out.add_term(k, c * static_cast<double>(b));
    }
    return out;
}

ZZbarPoly& ZZbarPoly::operator+=(const ZZbarPoly& rhs) {
    if (rhs.n_ != n_) throw InputError("ZZbarPoly: variable count mismatch in +");
    for (const auto& [key, c] : rhs.terms_) add_term(key, c);
    return *this;
}

ZZbarPoly& ZZbarPoly::operator-=(const ZZbarPoly& rhs) {
    if (rhs.n_ != n_) throw InputError("ZZbarPoly: variable count mismatch in -");
    for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
    return *this;
}

ZZbarPoly& ZZbarPoly::operator*=(Complex c) {
    if (c == Complex(0.0, 0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

ZZbarPoly operator*(const ZZbarPoly& a, const ZZbarPoly& b) {
    if (a.n_ != b.n_) throw InputError("ZZbarPoly: variable count mismatch in *");
    ZZbarPoly out(a.n_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MonomialKey k = ka;
            for (std::size_t i = 0; i < k.alpha.size(); ++i) {
                k.alpha[i] += kb.alpha[i];
                k.beta[i] += kb.beta[i];
            }
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

ZZbarPoly ZZbarPoly::compose_affine(const ComplexMatrix& l, const ComplexVector& b) const {
    if (l.rows() != n_ || b.size() != n_) {
        throw InputError("compose_affine: map must target the polynomial's variables");
    }
    const Index nn = l.cols();
    // Degree-1 images of each variable and their conjugates.
    std::vector<ZZbarPoly> lin, lin_bar;
    lin.reserve(static_cast<std::size_t>(n_));
    for (Index i = 0; i < n_; ++i) {
        ZZbarPoly li = ZZbarPoly::constant(nn, b(i));
        for (Index t = 0; t < nn; ++t) {
            if (l(i, t) != Complex(0.0, 0.0)) li += l(i, t) * ZZbarPoly::coord(nn, t);
        }
        lin.push_back(li);
        lin_bar.push_back(li.conjugated());
    }
    ZZbarPoly out(nn);
    for (const auto& [key, c] : terms_) {
        ZZbarPoly term = ZZbarPoly::constant(nn, c);
        for (Index i = 0; i < n_; ++i) {
            for (int e = 0; e < key.alpha[static_cast<std::size_t>(i)]; ++e) {
                term = term * lin[static_cast<std::size_t>(i)];
            }
            for (int e = 0; e < key.beta[static_cast<std::size_t>(i)]; ++e) {
                term = term * lin_bar[static_cast<std::size_t>(i)];
            }
        }
        out += term;
    }
    return out;
}

double ZZbarPoly::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

double ZZbarPoly::reality_defect() const {
    const ZZbarPoly diff = *this - conjugated();
    double s = 0.0;
    for (const auto& [key, c] : diff.terms_) s += std::norm(c);
    return std::sqrt(s);
}

namespace {

Complex monomial_value(const MonomialKey& key, const ComplexVector& z) {
    Complex t(1.0, 0.0);
    for (Index i = 0; i < z.size(); ++i) {
        const int a = key.alpha[static_cast<std::size_t>(i)];
        const int b = key.beta[static_cast<std::size_t>(i)];
        if (a > 0) t *= pow_int(z(i), a);
        if (b > 0) t *= pow_int(std::conj(z(i)), b);
    }
    return t;
}

}  // namespace

ComplexVector eval_dz(const ZZbarPoly& f, const ComplexVector& z) {
    if (z.size() != f.vars()) throw InputError("eval_dz: point dimension mismatch");
    ComplexVector out = ComplexVector::Zero(f.vars());
    for (const auto& [key, c] : f.terms()) {
        for (Index i = 0; i < f.vars(); ++i) {
            const int a = key.alpha[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            MonomialKey k = key;
            k.alpha[static_cast<std::size_t>(i)] -= 1;
            out(i) += c * static_cast<double>(a) * monomial_value(k, z);
        }
    }
    return out;
}

ComplexVector eval_dzbar(const ZZbarPoly& f, const ComplexVector& z) {
    if (z.size() != f.vars()) throw InputError("eval_dzbar: point dimension mismatch");
    ComplexVector out = ComplexVector::Zero(f.vars());
    for (const auto& [key, c] : f.terms()) {
        for (Index i = 0; i < f.vars(); ++i) {
            const int b = key.beta[static_cast<std::size_t>(i)];
            if (b == 0) continue;
            MonomialKey k = key;
            k.beta[static_cast<std::size_t>(i)] -= 1;
            out(i) += c * static_cast<double>(b) * monomial_value(k, z);
        }
    }
    return out;
}

ComplexMatrix eval_mixed_hessian(const ZZbarPoly& f, const ComplexVector& z) {
    if (z.size() != f.vars()) throw InputError("eval_mixed_hessian: point dimension mismatch");
    const Index n = f.vars();
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto& [key, c] : f.terms()) {
        for (Index i = 0; i < n; ++i) {
            const int b = key.beta[static_cast<std::size_t>(i)];
            if (b == 0) continue;
            for (Index j = 0; j < n; ++j) {
                int a = key.alpha[static_cast<std::size_t>(j)];
                if (a == 0) continue;
                MonomialKey k = key;
                k.beta[static_cast<std::size_t>(i)] -= 1;
                k.alpha[static_cast<std::size_t>(j)] -= 1;
                out(i, j) += c * static_cast<double>(a) * static_cast<double>(b) *
                             monomial_value(k, z);
            }
        }
    }
    return out;
}

}  // namespace crscope
