#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace llab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Deterministic RNG built on splitmix64. All randomized searches in the
// library draw through this class so that results depend only on the seed,
// not on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (deterministic across platforms)
  double normal();

  cplx complex_normal() { return {normal(), normal()}; }

  // derived independent stream, for per-restart / per-grid-point seeding
  Rng fork(std::uint64_t stream) const {
    Rng r(state_ ^ (0xA0761D6478BD642Full * (stream + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Online log-sum-exp accumulator: feeds log-domain terms, reads back
// log(sum of exp(terms)). Keeps weight moment sums finite for exponents
// up to |gamma * p| ~ 40 on long intervals.
class LogSumAccumulator {
 public:
  void add_log(double log_term);
  double log_sum() const;
  bool empty() const { return count_ == 0; }
  std::size_t count() const { return count_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;  // sum of exp(term - max_)
  std::size_t count_ = 0;
};

// log(exp(a) + exp(b))
double log_add_exp(double a, double b);

// Adaptive Simpson quadrature on [a, b]. min_panels seeds the initial
// uniform split; callers integrating oscillatory functions should scale it
// with the oscillation count so panels resolve the fastest mode.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 40,
                          int min_panels = 8);

// Maximum of a unimodal-ish f on [a, b] by golden-section refinement.
double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12, int max_iter = 200);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  int points = 0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

double l2_norm(std::span<const cplx> v);
double lp_norm(std::span<const cplx> v, double p);

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to disjoint slots; the call returns after all tasks finish.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace llab
