#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "llab/sequence.hpp"

namespace llab {

enum class UpperBoundMethod {
  LinfExact,      // Laurent operator norm on l^2 equals the sup norm
  Stechkin,       // calibrated c * (sup norm + total variation)
  GeometricMean,  // sqrt(upper_X * upper_X'), advisory l^2 consistency value
  BoydInterp,     // interpolation-calibrated transfer constant
  HolderDual,     // exact Lebesgue associate norm
};

std::string to_string(UpperBoundMethod m);

struct EstimateParams {
  long long section_halfwidth = 0;  // N
  int iterations = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double truncation_tail_bound = 0.0;  // sum_{|k|>R} |a_hat(k)| bound
};

// Certified-lower / heuristic-upper pair for a norm. The lower bound always
// comes with the witness that attains it.
struct BoundEstimate {
  double lower = 0.0;
  std::optional<double> upper;
  std::optional<UpperBoundMethod> upper_method;
  std::optional<FiniteSequence> witness;
  EstimateParams params;
};

}  // namespace llab
