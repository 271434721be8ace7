#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crscope/numerics.hpp"

namespace crscope {

// Deterministic 64-bit generator (splitmix64). All randomized routines in the
// library draw from this so that fixed seeds give identical runs everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform01();                       // in [0, 1)
    double uniform(double lo, double hi);
    double normal();                          // standard normal
    ComplexVector complex_normal(Index n);
    RealVector normal_vector(Index n);
    RealVector unit_vector(Index n);

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

double inverse_normal_cdf(double p);

// Kronecker (additive recurrence) low-discrepancy points on the unit sphere
// S^{dim-1}; uniforms are pushed through the inverse normal CDF and
// normalized. Deterministic for a fixed seed, which only offsets the lattice.
std::vector<RealVector> low_discrepancy_sphere(Index dim, Index count, std::uint64_t seed);

// Nelder-Mead minimization of f over R^dim, started from x0 with the given
// initial step. Returns the best point found.
RealVector nelder_mead(const std::function<double(const RealVector&)>& f,
                       const RealVector& x0, double step, int max_iter);

// Global thread budget for the data-parallel loops; 1 = serial. Reductions
// are performed in index order so results do not depend on the setting.
void set_thread_count(int threads);
int thread_count();

// Evaluates fn(i) for i in [0, n) using the configured thread budget.
void parallel_for(Index n, const std::function<void(Index)>& fn);

}  // namespace crscope
