#pragma once

#include <optional>
#include <span>
#include <vector>

#include "llab/estimate.hpp"
#include "llab/sequence.hpp"
#include "llab/spaces.hpp"
#include "llab/symbols.hpp"

namespace llab {

// (a * phi)_j = sum_k a_hat(j-k) phi_k with coefficients taken from
// |j-k| <= coeff_radius. Exact for trig polynomials (the radius must cover
// the degree; an undersized radius is an error, never a silent truncation).
FiniteSequence convolve(const Symbol& a, const FiniteSequence& phi,
                        long long coeff_radius);

// Recorded bound on the neglected coefficient mass sum_{|k|>radius}|a_hat(k)|
// for piecewise symbols: V(a) / (pi * radius). Zero for trig polynomials once
// the radius covers the degree.
double coefficient_tail_bound(const Symbol& a, long long radius);

// Compression of w L(a) w^{-1} to [-N, N]: entry(j, k) = w_j a_hat(j-k) / w_k.
// Stored by diagonals; only |j-k| <= band() is nonzero, so products cost
// O(N * band) instead of O(N^2).
class FiniteSection {
 public:
  FiniteSection(const Symbol& a, long long N, const Weight& w);
  FiniteSection(const Symbol& a, long long N);

  long long halfwidth() const { return N_; }
  long long band() const { return band_; }
  double truncation_tail_bound() const { return tail_bound_; }

  cplx diagonal_coefficient(long long d) const;  // a_hat(d), |d| <= band
  cplx entry(long long j, long long k) const;    // j, k in [-N, N]
  double weight_at(long long j) const;

  // y = S x and y = S^H x; vectors are indexed [-N..N] as x[j + N].
  std::vector<cplx> apply(std::span<const cplx> x) const;
  std::vector<cplx> apply_adjoint(std::span<const cplx> x) const;

 private:
  long long N_ = 0;
  long long band_ = 0;
  double tail_bound_ = 0.0;
  std::vector<cplx> diag_;     // a_hat(-band..band)
  std::vector<double> w_;      // w_j, j in [-N, N]
  std::vector<double> winv_;   // 1 / w_j
};

struct LowerBoundOptions {
  long long N = 256;
  int restarts = 8;
  int iterations = 60;
  std::uint64_t seed = 1;
  // witness from a previous (typically smaller-N) run, in phi coordinates;
  // guarantees the sweep is nondecreasing in N
  std::optional<FiniteSequence> warm_start;
};

// Certified lower bound for ||a||_{M_{X(Z,w)}}: maximizes the truncated ratio
// ||P_N (w L(a) w^{-1}) phi|| / ||phi|| over phi supported in [-N, N].
// LebesgueP(2) uses power iteration on the Gram form; other LebesgueP specs
// use the nonlinear power iteration for p-norms with basis-vector, l2-witness
// and random warm starts; Lorentz/Orlicz use randomized ascent. The returned
// value never exceeds the true multiplier norm and is nondecreasing in N when
// runs are warm-started.
BoundEstimate multiplier_norm_lower(const Symbol& a, const SpaceSpec& spec,
                                    const LowerBoundOptions& options);
BoundEstimate multiplier_norm_lower(const Symbol& a, const SpaceSpec& spec,
                                    long long N, int restarts, int iterations,
                                    std::uint64_t seed);

// Warm-started N-sweep; exactly nondecreasing values.
std::vector<BoundEstimate> multiplier_norm_lower_sweep(
    const Symbol& a, const SpaceSpec& spec, std::span<const long long> Ns,
    int restarts, int iterations, std::uint64_t seed);

struct UpperBoundResult {
  BoundEstimate estimate;                  // upper + method tag, lower = 0
  std::optional<double> l2_consistency;    // sqrt(upper_X * upper_X'), advisory
};

// Upper bounds for the multiplier norm of a BV symbol: the calibrated
// Stechkin route c * (sup + V), the exact sup-norm route on unweighted l^2,
// and (for LebesgueP) the advisory geometric-mean l^2 consistency value.
UpperBoundResult multiplier_norm_upper(const Symbol& a, const SpaceSpec& spec,
                                       double stechkin_constant);

// Holder dual witness: given y = S psi with ||S psi||_p / ||psi||_p = r,
// the map J_p(y)_i = |y_i|^{p-2} y_i yields a vector whose ratio under S^H
// in the conjugate exponent is at least r. Used to transfer witnesses
// between a run on l^p and the conjugate-symbol run on l^q.
std::vector<cplx> holder_dual_witness(std::span<const cplx> y, double p);

}  // namespace llab
