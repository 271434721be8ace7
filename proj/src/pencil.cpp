#include "crscope/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crscope/sampling.hpp"

namespace crscope {

HermitianPencil::HermitianPencil(Index dim_, std::vector<ComplexMatrix> mats_)
    : dim(dim_), mats(std::move(mats_)) {
    if (dim < 0) throw InputError("HermitianPencil: negative dimension");
    if (mats.empty()) throw InputError("HermitianPencil: need at least one matrix");
    for (const auto& m : mats) {
        if (m.rows() != dim || m.cols() != dim) {
            throw InputError("HermitianPencil: all matrices must be dim x dim");
        }
        if (!all_finite(m)) throw InputError("HermitianPencil: non-finite entries");
        if (dim > 0 && hermitian_deviation(m) > 1e-10) {
            throw InputError("HermitianPencil: matrix is not Hermitian within 1e-10");
        }
    }
}

ComplexMatrix combine(const HermitianPencil& p, const RealVector& c) {
    if (c.size() != p.size()) {
        throw InputError("combine: coefficient length " + std::to_string(c.size()) +
                         " != pencil size " + std::to_string(p.size()));
    }
    ComplexMatrix out = ComplexMatrix::Zero(p.dim, p.dim);
    for (Index j = 0; j < p.size(); ++j) out += c(j) * p.mats[static_cast<std::size_t>(j)];
    return out;
}

namespace {

RealVector sorted_eigs_at(const HermitianPencil& p, const RealVector& c) {
    RealVector unit = c;
    const double nrm = unit.norm();
    if (nrm > 0) unit /= nrm;
    return hermitian_eigenvalues(combine(p, unit));  // ascending
}

double spectrum_scale(const RealVector& eigs) {
    double s = 0.0;
    for (Index i = 0; i < eigs.size(); ++i) s = std::max(s, std::abs(eigs(i)));
    return s;
}

bool near_band(const RealVector& eigs, double eig_tol) {
    const double band = eig_tol * spectrum_scale(eigs);
    for (Index i = 0; i < eigs.size(); ++i) {
        const double a = std::abs(eigs(i));
        if (a > band && a < 10.0 * band) return true;
    }
    return false;
}

SignatureCertificate make_cert(const HermitianPencil& p, const RealVector& c, double objective,
                               const SearchOpts& opts) {
    RealVector unit = c;
    const double nrm = unit.norm();
    if (nrm > 0) unit /= nrm;
    const RealVector eigs = p.dim > 0 ? sorted_eigs_at(p, unit) : RealVector(0);
    SignatureCertificate cert;
    cert.c = unit;
    cert.sig = signature_of_eigenvalues(eigs, opts.tol.eig_tol);
    cert.objective = objective;
    cert.samples_used = opts.samples;
    cert.seed = opts.seed;
    cert.eig_tol = opts.tol.eig_tol;
    cert.near_band = near_band(eigs, opts.tol.eig_tol);
    return cert;
}

// Shared sampling + simplex refinement scaffold. `surrogate` must be the
// smooth quantity whose sign at the minimizer decides the discrete count;
// smaller = closer to violating the current level.
struct SphereSearch {
    const HermitianPencil& pencil;
    const SearchOpts& opts;

    template <typename CountFn, typename SurrogateFn>
    std::pair<Index, RealVector> run(const CountFn& count_of, const SurrogateFn& surrogate_at) {
        const Index k = pencil.size();
        if (pencil.dim == 0) return {0, RealVector::Unit(k, 0)};
        const Index n_samples = std::max<Index>(opts.samples, 1);
        const auto dirs = low_discrepancy_sphere(k, n_samples, opts.seed);

        std::vector<RealVector> spectra(dirs.size());
        parallel_for(static_cast<Index>(dirs.size()), [&](Index i) {
            spectra[static_cast<std::size_t>(i)] =
                sorted_eigs_at(pencil, dirs[static_cast<std::size_t>(i)]);
        });

        Index best_count = std::numeric_limits<Index>::max();
        RealVector best_c = dirs[0];
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const Index cnt = count_of(spectra[i]);
            if (cnt < best_count) {
                best_count = cnt;
                best_c = dirs[i];
            }
        }

        // Refinement restarts from the samples with the smallest surrogate at
        // the current best level.
        for (int attempt = 0; attempt < 8; ++attempt) {
            const Index level = best_count;
            if (level == 0) break;
            auto surr = [&](const RealVector& eigs) { return surrogate_at(eigs, level); };
            std::vector<std::pair<double, std::size_t>> ranked(dirs.size());
            for (std::size_t i = 0; i < dirs.size(); ++i) ranked[i] = {surr(spectra[i]), i};
            std::sort(ranked.begin(), ranked.end());

            bool improved = false;
            const int restarts = std::max(1, opts.restarts);
            for (int r = 0; r < restarts && r < static_cast<int>(ranked.size()); ++r) {
                const RealVector start = dirs[ranked[static_cast<std::size_t>(r)].second];
                auto objective = [&](const RealVector& c) {
                    const double nrm = c.norm();
                    if (nrm < 1e-10) return 1e100;
                    return surr(sorted_eigs_at(pencil, c));
                };
                const RealVector refined =
                    nelder_mead(objective, start, 0.1, opts.refine_iters);
                const RealVector eigs = sorted_eigs_at(pencil, refined);
                const Index cnt = count_of(eigs);
                if (cnt < best_count) {
                    best_count = cnt;
                    best_c = refined / refined.norm();
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        return {best_count, best_c};
    }
};

}  // namespace

TwoSidedResult min_two_sided_signature(const HermitianPencil& p, const SearchOpts& opts) {
    if (opts.samples < 1) throw InputError("min_two_sided_signature: need at least one sample");
    SphereSearch search{p, opts};
    const Index n = p.dim;
    auto count_of = [&](const RealVector& eigs) {
        const Signature s = signature_of_eigenvalues(eigs, opts.tol.eig_tol);
        return std::min(s.pos, s.neg);
    };
    // min(pos, neg) < q iff the q-th largest eigenvalue fails to be positive
    // or the q-th smallest fails to be negative.
    auto surrogate = [&](const RealVector& eigs, Index q) {
        return std::min(eigs(n - q), -eigs(q - 1));
    };
    auto [q_min, c] = search.run(count_of, surrogate);
    TwoSidedResult out;
    out.q_min = q_min;
    out.cert = make_cert(p, c, p.dim > 0 && q_min > 0
                                   ? surrogate(sorted_eigs_at(p, c), q_min)
                                   : 0.0,
                         opts);
    return out;
}

WeakOrderResult weak_pseudoconcavity_order(const HermitianPencil& p, const SearchOpts& opts) {
    if (opts.samples < 1) throw InputError("weak_pseudoconcavity_order: need at least one sample");
    SphereSearch search{p, opts};
    auto count_of = [&](const RealVector& eigs) {
        const Signature s = signature_of_eigenvalues(eigs, opts.tol.eig_tol);
        return s.zero + s.neg;
    };
    // nonpos < q iff the q-th smallest eigenvalue is strictly positive.
    auto surrogate = [&](const RealVector& eigs, Index q) { return -eigs(q - 1); };
    auto [q, c] = search.run(count_of, surrogate);
    WeakOrderResult out;
    out.q = q;
    out.cert = make_cert(p, c, p.dim > 0 && q > 0 ? surrogate(sorted_eigs_at(p, c), q) : 0.0,
                         opts);
    return out;
}

std::optional<PseudoconvexWitness> pseudoconvex_witness(const HermitianPencil& p,
                                                        const SearchOpts& opts) {
    const Index k = p.size();
    if (p.dim == 0) {
        // Vacuously positive definite on the zero space.
        return PseudoconvexWitness{RealVector::Unit(k, 0),
                                   std::numeric_limits<double>::infinity()};
    }
    const auto dirs = low_discrepancy_sphere(k, std::max<Index>(opts.samples, 1), opts.seed);
    std::vector<double> lmin(dirs.size());
    parallel_for(static_cast<Index>(dirs.size()), [&](Index i) {
        lmin[static_cast<std::size_t>(i)] =
            sorted_eigs_at(p, dirs[static_cast<std::size_t>(i)])(0);
    });
    std::vector<std::pair<double, std::size_t>> ranked(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) ranked[i] = {-lmin[i], i};
    std::sort(ranked.begin(), ranked.end());

    double best = -std::numeric_limits<double>::infinity();
    RealVector best_c = dirs[0];
    auto consider = [&](const RealVector& c) {
        const RealVector unit = c / c.norm();
        const double v = sorted_eigs_at(p, unit)(0);
        if (v > best) {
            best = v;
            best_c = unit;
        }
    };
    const int restarts = std::max(1, opts.restarts);
    for (int r = 0; r < restarts && r < static_cast<int>(ranked.size()); ++r) {
        const RealVector start = dirs[ranked[static_cast<std::size_t>(r)].second];
        consider(start);
        auto objective = [&](const RealVector& c) {
            const double nrm = c.norm();
            if (nrm < 1e-10) return 1e100;
            return -sorted_eigs_at(p, c)(0);
        };
        consider(nelder_mead(objective, start, 0.1, opts.refine_iters));
    }
    const RealVector eigs = sorted_eigs_at(p, best_c);
    const double band = opts.tol.eig_tol * spectrum_scale(eigs);
    if (best > band) return PseudoconvexWitness{best_c, best};
    return std::nullopt;
}

Index rho_complex(Index n) {
    if (n < 1) throw InputError("rho_complex: n must be positive");
    Index v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    return 2 * v2 + 2;
}

SpanBoundReport span_dim_bound_check(const HermitianPencil& p, const Tolerance& tol) {
    if (p.dim % 2 != 0 || p.dim == 0) {
        throw InputError("span_dim_bound_check: pencil dimension must be even and positive");
    }
    const Index q = p.dim / 2;
    // Rank of the vectorized matrices over R.
    RealMatrix vecs(p.size(), 2 * p.dim * p.dim);
    for (Index j = 0; j < p.size(); ++j) {
        const ComplexMatrix& m = p.mats[static_cast<std::size_t>(j)];
        for (Index r = 0; r < p.dim; ++r) {
            for (Index c = 0; c < p.dim; ++c) {
                vecs(j, r * p.dim + c) = m(r, c).real();
                vecs(j, p.dim * p.dim + r * p.dim + c) = m(r, c).imag();
            }
        }
    }
    SpanBoundReport out;
    out.q = q;
    out.span_dim = numeric_rank(vecs, tol);
    out.bound = rho_complex(q) + 1;
    out.within_bound = out.span_dim <= out.bound;
    return out;
}

}  // namespace crscope
