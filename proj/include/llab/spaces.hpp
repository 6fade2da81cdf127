#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "llab/estimate.hpp"
#include "llab/sequence.hpp"
#include "llab/weights.hpp"

namespace llab {

// Young function: convex, Phi(0) = 0, strictly increasing, normalized so
// that Phi(1) = 1 (unit vectors then have Luxemburg norm 1). Convexity is
// verified on a sample grid at construction.
class YoungFunction {
 public:
  static YoungFunction power(double p);                         // t^p
  static YoungFunction piecewise_power(double a, double b);     // t^a for t<=1, t^b above
  static YoungFunction log_perturbed_power(double p, double c); // t^p (log(e+t)/log e... normalized)

  double operator()(double t) const { return eval_(t); }
  const std::string& describe() const { return name_; }
  bool operator==(const YoungFunction& o) const { return name_ == o.name_; }

 private:
  YoungFunction(std::function<double(double)> eval, std::string name);
  std::function<double(double)> eval_;
  std::string name_;
};

enum class SpaceKind { LebesgueP, Lorentz, Orlicz };

// Description of a rearrangement-invariant Banach sequence space norm,
// optionally composed with a weight: ||f||_{X(Z,w)} = ||fw||_{X(Z)}.
class SpaceSpec {
 public:
  static SpaceSpec lebesgue(double p);
  static SpaceSpec lorentz(double p, double q);
  static SpaceSpec orlicz(YoungFunction phi);

  SpaceSpec with_weight(Weight w) const;

  SpaceKind kind() const { return kind_; }
  double p() const { return p_; }
  double q() const { return q_; }  // Lorentz secondary exponent
  double holder_conjugate() const; // LebesgueP only
  const YoungFunction& phi() const;
  const std::optional<Weight>& weight() const { return weight_; }
  bool unweighted() const { return !weight_ || weight_->is_identity(); }

  // Exact associate space; available for LebesgueP: l^{p'}(Z, w^{-1}).
  std::optional<SpaceSpec> exact_associate() const;

  std::string describe() const;
  friend bool same_space(const SpaceSpec& a, const SpaceSpec& b);

 private:
  SpaceSpec(SpaceKind k, double p, double q);
  SpaceKind kind_;
  double p_ = 2.0;
  double q_ = 2.0;
  std::optional<YoungFunction> phi_;
  std::optional<Weight> weight_;
};

// ||f||_{X(Z,w)} = ||fw||_{X(Z)}. LebesgueP in closed form; Lorentz through
// the decreasing rearrangement; Orlicz through the Luxemburg functional.
double space_norm(const SpaceSpec& spec, const FiniteSequence& f);

// Luxemburg scale: inf{lambda > 0 : sum Phi(|f_k|/lambda) <= 1}, by bisection
// to relative tolerance 1e-12 (at most 200 iterations). Exposed so tests can
// check the residual invariant sum Phi(|f_k|/lambda*) in [1 - 1e-9, 1].
double luxemburg_scale(const YoungFunction& phi,
                       std::span<const double> magnitudes);

// Lower bound for ||f||_{X'} by searching the unit ball of X (basis vectors,
// sign patterns, dual-exponent extremals, random restarts). For LebesgueP the
// exact Holder dual ||f w^{-1}||_{l^{p'}} is returned as the upper field.
BoundEstimate associate_norm_estimate(const SpaceSpec& spec,
                                      const FiniteSequence& f,
                                      long long support_radius,
                                      int search_budget,
                                      std::uint64_t seed = 1);

struct ReflectionInvarianceReport {
  int samples = 0;
  double max_rel_discrepancy = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Verifies ||reflect f|| = ||f|| on random finitely supported sequences
// (plus the basis pair e_1, e_{-1}, which catches one-sided weights).
ReflectionInvarianceReport reflection_invariance_check(const SpaceSpec& spec,
                                                       int samples,
                                                       std::uint64_t seed,
                                                       double tolerance = 1e-9);

// Estimate of ||f|| in the Calderon product X0^{1-theta} X1^theta.
// Upper: minimum over canonical factorizations |x| = |y|^{1-theta}|z|^theta
// built from positive profiles (exponent family, the closed-form Lebesgue
// interpolation split when both specs are LebesgueP, random perturbations).
// Lower: exact value for identical specs or LebesgueP pairs, otherwise the
// per-coordinate duality bound max_k |x_k| w0_k^{1-theta} w1_k^theta.
BoundEstimate calderon_product_norm_estimate(const SpaceSpec& spec0,
                                             const SpaceSpec& spec1,
                                             double theta,
                                             const FiniteSequence& f,
                                             int budget,
                                             std::uint64_t seed = 1);

// Relative gap between the Calderon-product estimate of f in
// X^{1/2}(X')^{1/2} and ||f||_{l^2}. Requires a LebesgueP spec (closed-form
// associate); small gap certifies the Lozanovskii identity numerically.
double lozanovskii_check(const SpaceSpec& spec, const FiniteSequence& f,
                         int budget);

}  // namespace llab
