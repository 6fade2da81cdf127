#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "llab/numerics.hpp"

namespace llab {

enum class WeightDomain { HalfLine, FullLine };

// Positive weight sequence on Z or Z_+. Values are evaluated lazily and in
// the log domain, so moment sums with exponents up to |gamma*p| ~ 40 stay
// finite on long intervals.
class Weight {
 public:
  static Weight constant(double c, WeightDomain d = WeightDomain::FullLine);
  // (1+|k|)^gamma on Z, (1+k)^gamma on Z_+
  static Weight power(double gamma, WeightDomain d = WeightDomain::FullLine);
  static Weight table(std::vector<double> values, long long first_index,
                      WeightDomain d);
  static Weight exponentiated(Weight base, double exponent);
  static Weight identity() { return constant(1.0); }

  double value(long long k) const;
  double log_value(long long k) const;
  WeightDomain domain() const;
  bool symmetric() const;
  bool is_identity() const;
  std::string describe() const;

  friend Weight symmetric_extend(const Weight& w);
  friend bool same_weight(const Weight& a, const Weight& b);

 private:
  struct Node;
  explicit Weight(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// v_n := w_{|n|}; requires a half-line weight, returns a symmetric full-line
// weight. Throws std::domain_error on full-line input.
Weight symmetric_extend(const Weight& w);

// log of the interval moment mean (1/m(J)) * sum_{k in J} w_k^e, J = [lo, hi]
double log_moment_mean(const Weight& w, long long lo, long long hi, double e);

struct ApCharacteristic {
  double value = 1.0;  // scanned lower bound for [w]_{A_p}
  double p = 2.0;
  long long budget = 0;  // max interval length scanned
  std::pair<long long, long long> attaining_interval{0, 0};
  // running maximum of the scan restricted to intervals of length <= 2^r
  std::vector<std::pair<long long, double>> growth_trace;
};

// Scanned lower bound for the Muckenhoupt characteristic
//   sup_J (1/m(J)) (sum_J w^p)^{1/p} (sum_J w^{-q})^{1/q},   1/p + 1/q = 1.
// The scan covers all intervals of length <= 64 anchored in
// [-anchor_range, anchor_range] (clipped to the domain), plus dyadic lengths
// 2^r <= budget anchored at 0 and +-budget/2 (left end, right end, centered).
ApCharacteristic ap_characteristic(const Weight& w, double p, long long budget,
                                   long long anchor_range = 512);

enum class ApVerdict { InApEvidence, NotInApEvidence, Inconclusive };

struct ApMembershipReport {
  ApVerdict verdict = ApVerdict::Inconclusive;
  ApCharacteristic characteristic;
  double final_doubling_growth = 0.0;
  double mean_doubling_growth = 0.0;
  double plateau_tolerance = 0.0;
  double divergence_threshold = 0.0;
};

// Evidence-only decision layer over the characteristic trace. The verdict is
// InApEvidence when the final doubling of the budget grows the scanned value
// by less than plateau_tolerance, NotInApEvidence when either the final or
// the geometric-mean per-doubling growth exceeds divergence_threshold.
ApMembershipReport ap_membership_verdict(
    const Weight& w, double p, const std::vector<long long>& budgets,
    double plateau_tolerance = 0.03, double divergence_threshold = 0.06,
    long long anchor_range = 512);

struct ReverseHolderResult {
  bool found = false;
  double best_delta = 0.0;
  double best_constant = 1.0;
  // (delta, sup over scanned dyadic R of the mean-power ratio)
  std::vector<std::pair<double, double>> table;
};

// For each delta in the grid, the sup over scanned dyadic intervals R within
// the budget of ((1/m)sum w^{p(1+delta)})^{1/(1+delta)} / ((1/m)sum w^p).
// Returns the largest delta whose sup stays below constant_cap.
ReverseHolderResult reverse_holder_probe(const Weight& w, double p,
                                         long long budget,
                                         const std::vector<double>& delta_grid,
                                         double constant_cap = 10.0);

struct ConvexityRegionReport {
  struct GridPoint {
    double p = 0.0, delta = 0.0;
    ApVerdict verdict = ApVerdict::Inconclusive;
    double characteristic = 1.0;
  };
  struct MidpointCheck {
    double p1, delta1, p2, delta2, theta;
    double lhs;    // scanned characteristic at the interpolated point
    double rhs;    // product of endpoint characteristics with the convexity powers
    double slack;  // rhs - lhs
  };
  std::vector<GridPoint> grid;
  std::vector<MidpointCheck> midpoint_checks;
  double min_slack = 0.0;
  bool all_nonnegative = true;
};

// Samples the region Gamma = {(p, delta) : w^{delta/p} in A_p} on the grid
// and checks the interpolation bound
//   [w^{d(t)/p(t)}]_{A_{p(t)}} <= [w^{d1/p1}]^{(1-t)p1/p(t)} [w^{d2/p2}]^{t p2/p(t)}
// for in-region pairs at t in {1/4, 1/2, 3/4}, on shared scanned intervals.
ConvexityRegionReport convexity_region_probe(const Weight& w,
                                             const std::vector<double>& p_grid,
                                             const std::vector<double>& delta_grid,
                                             long long budget);

struct StabilityReport {
  std::vector<double> eps_grid;
  std::vector<double> p_grid;
  std::vector<std::vector<bool>> in_ap;  // [eps index][p index]
  bool open_box_nonempty = false;        // all entries adjacent to (p0, 0) true
};

// Entry (eps, p) is true iff w^{1+eps} receives InApEvidence for A_p.
StabilityReport stability_probe(const Weight& w, double p0,
                                const std::vector<double>& eps_grid,
                                const std::vector<double>& p_grid,
                                long long budget);

}  // namespace llab
