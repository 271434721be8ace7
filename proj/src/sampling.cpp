#include "crscope/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <thread>

namespace crscope {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double SplitMix64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double k = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * k;
    have_spare_ = true;
    return u * k;
}

ComplexVector SplitMix64::complex_normal(Index n) {
    ComplexVector out(n);
    for (Index i = 0; i < n; ++i) out(i) = Complex(normal(), normal());
    return out;
}

RealVector SplitMix64::normal_vector(Index n) {
    RealVector out(n);
    for (Index i = 0; i < n; ++i) out(i) = normal();
    return out;
}

RealVector SplitMix64::unit_vector(Index n) {
    RealVector v = normal_vector(n);
    double nrm = v.norm();
    while (nrm < 1e-12) {
        v = normal_vector(n);
        nrm = v.norm();
    }
    return v / nrm;
}

// Acklam's rational approximation, refined with one Halley step.
double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InputError("inverse_normal_cdf: p outside (0,1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::vector<RealVector> low_discrepancy_sphere(Index dim, Index count, std::uint64_t seed) {
    if (dim <= 0) throw InputError("low_discrepancy_sphere: dim must be positive");
    // Generalized golden ratio alphas (R_d sequence): phi solves x^{d+1} = x + 1.
    double phi = 1.5;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    RealVector alpha(dim);
    double a = 1.0;
    for (Index j = 0; j < dim; ++j) {
        a /= phi;
        alpha(j) = a;
    }
    SplitMix64 rng(seed);
    RealVector offset(dim);
    for (Index j = 0; j < dim; ++j) offset(j) = rng.uniform01();

    std::vector<RealVector> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (Index n = 0; n < count; ++n) {
        RealVector v(dim);
        for (Index j = 0; j < dim; ++j) {
            double u = offset(j) + static_cast<double>(n + 1) * alpha(j);
            u -= std::floor(u);
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            v(j) = inverse_normal_cdf(u);
        }
        const double nrm = v.norm();
        pts.push_back(nrm > 1e-12 ? RealVector(v / nrm) : RealVector(RealVector::Unit(dim, 0)));
    }
    return pts;
}

RealVector nelder_mead(const std::function<double(const RealVector&)>& f,
                       const RealVector& x0, double step, int max_iter) {
    const Index n = x0.size();
    struct Vertex {
        RealVector x;
        double val;
    };
    std::vector<Vertex> s;
    s.reserve(static_cast<std::size_t>(n) + 1);
    s.push_back({x0, f(x0)});
    for (Index i = 0; i < n; ++i) {
        RealVector x = x0;
        x(i) += step;
        s.push_back({x, f(x)});
    }
    auto by_val = [](const Vertex& a, const Vertex& b) { return a.val < b.val; };
    for (int it = 0; it < max_iter; ++it) {
        std::sort(s.begin(), s.end(), by_val);
        RealVector centroid = RealVector::Zero(n);
        for (Index i = 0; i < n; ++i) centroid += s[static_cast<std::size_t>(i)].x;
        centroid /= static_cast<double>(n);
        Vertex& worst = s.back();
        const double best = s.front().val, second_worst = s[s.size() - 2].val;

        RealVector xr = centroid + (centroid - worst.x);
        const double fr = f(xr);
        if (fr < best) {
            RealVector xe = centroid + 2.0 * (centroid - worst.x);
            const double fe = f(xe);
            worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < second_worst) {
            worst = {xr, fr};
        } else {
            RealVector xc = centroid + 0.5 * (worst.x - centroid);
            const double fc = f(xc);
            if (fc < worst.val) {
                worst = {xc, fc};
            } else {
                for (std::size_t i = 1; i < s.size(); ++i) {
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].val = f(s[i].x);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), by_val);
    return s.front().x;
}

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int threads) { g_threads.store(std::max(1, threads)); }
int thread_count() { return g_threads.load(); }

void parallel_for(Index n, const std::function<void(Index)>& fn) {
    const int threads = std::min<int>(thread_count(), static_cast<int>(n));
    if (threads <= 1) {
        for (Index i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<Index> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                for (Index i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) fn(i);
            } catch (...) {
                const std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                cursor.store(n);  // stop the other workers
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace crscope
