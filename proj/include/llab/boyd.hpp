#pragma once

#include <optional>
#include <vector>

#include "llab/spaces.hpp"

namespace llab {

// Finite nonincreasing nonnegative sequence, indexed from 1 like the
// Luxemburg representation on N. The natural carrier for dilation operators.
class DecreasingSequence {
 public:
  DecreasingSequence() = default;
  explicit DecreasingSequence(std::vector<double> values);

  static DecreasingSequence flat_block(std::size_t n);       // 1,...,1
  static DecreasingSequence geometric(double ratio, std::size_t n);

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// (E_j g)_k = g_{jk} (1-indexed); keeps every j-th entry.
DecreasingSequence dilate_down(int j, const DecreasingSequence& g);

// (F_j g)_k = g_{floor((k-1)/j)+1}; repeats every entry j times.
DecreasingSequence dilate_up(int j, const DecreasingSequence& g);

// rho-bar of the Luxemburg representation: the spec's norm applied to the
// decreasing sequence itself (the spec must be unweighted).
double representation_norm(const SpaceSpec& spec, const DecreasingSequence& g);

// Lower bound for H(j, X) = sup{rho(E_j f*) : rho(f) <= 1}, maximized over
// flat blocks (dyadic lengths and multiples of j), geometric tails, and
// seeded random decreasing candidates with support up to `budget`.
double estimate_H(const SpaceSpec& spec, int j, long long budget,
                  std::uint64_t seed);

// Same search for K(j, X) built on F_j.
double estimate_K(const SpaceSpec& spec, int j, long long budget,
                  std::uint64_t seed);

struct BoydEstimate {
  double alpha_hat = 0.0;  // slope of -log H(j) against log j
  double beta_hat = 0.0;   // slope of  log K(j) against log j
  struct Row {
    int j;
    double H;
    double K;
  };
  std::vector<Row> per_j;
  LinearFit alpha_fit;
  LinearFit beta_fit;
  // For LebesgueP specs the associate indices are estimated as well and the
  // residual |alpha_hat(X') - (1 - beta_hat(X))| is reported.
  std::optional<double> dual_alpha_hat;
  std::optional<double> duality_residual;
};

BoydEstimate boyd_indices(const SpaceSpec& spec, int j_max, long long budget,
                          std::uint64_t seed);

}  // namespace llab
