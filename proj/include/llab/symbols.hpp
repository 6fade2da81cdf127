#pragma once

#include <string>
#include <vector>

#include "llab/numerics.hpp"

namespace llab {

// 2*pi-periodic symbol in one of three representations:
//   TrigPoly        finite Fourier series, coefficients indexed -deg..deg
//   PiecewiseLinear continuous periodic interpolation through breakpoints
//   Step            left-closed piecewise constants
// Breakpoints live in [-pi, pi), strictly increasing; the last segment wraps.
class Symbol {
 public:
  enum class Kind { TrigPoly, PiecewiseLinear, Step };

  static Symbol trig_poly(std::vector<cplx> coeffs_minus_n_to_n);
  static Symbol constant(cplx c);
  static Symbol exponential(long long n, cplx c = cplx{1.0, 0.0});  // c e^{in theta}
  static Symbol piecewise_linear(std::vector<double> thetas,
                                 std::vector<cplx> values);
  static Symbol step(std::vector<double> thetas, std::vector<cplx> values);
  // peak at theta = 0 decaying linearly to 0 at +-width, zero outside
  static Symbol hat(double peak, double width);
  // h * indicator of [a, b) on the circle
  static Symbol indicator(double a, double b, cplx h);

  Kind kind() const { return kind_; }
  bool is_trig_poly() const { return kind_ == Kind::TrigPoly; }
  long long degree() const;           // TrigPoly only
  cplx coeff(long long k) const;      // TrigPoly only; 0 beyond the degree
  const std::vector<double>& breakpoints() const { return thetas_; }
  const std::vector<cplx>& breakpoint_values() const { return vals_; }

  cplx eval(double theta) const;
  cplx fourier_coefficient(long long n) const;

  std::string describe() const;

 private:
  Symbol() = default;
  Kind kind_ = Kind::TrigPoly;
  long long deg_ = 0;
  std::vector<cplx> coeffs_;  // size 2*deg_+1 when TrigPoly
  std::vector<double> thetas_;
  std::vector<cplx> vals_;
};

// Materialized coefficient window a_hat(-radius .. radius) with the decay
// metadata of the neglected tail. Finite sections and convolutions draw
// their coefficients through this.
struct FourierWindow {
  long long radius = 0;
  std::vector<cplx> coeffs;  // index k stored at k + radius
  double tail_bound = 0.0;   // bound on sum_{|k|>radius} |a_hat(k)|

  cplx at(long long k) const {
    if (k < -radius || k > radius) return {0.0, 0.0};
    return coeffs[static_cast<std::size_t>(k + radius)];
  }
};

FourierWindow fourier_window(const Symbol& a, long long radius);

// ess sup of |a|. Exact from breakpoints for the piecewise kinds; dense grid
// (default 2^14 points) plus golden-section refinement for trig polynomials.
double sup_norm(const Symbol& a, int grid = 1 << 14);

// Total variation over one period. Jump magnitudes for Step (the wrap jump
// counted once), chord lengths for PiecewiseLinear, and the exact integral
// of |a'| by adaptive quadrature for TrigPoly.
double total_variation(const Symbol& a);

// s_n(a) = sum_{|k|<=n} a_hat(k) e^{ik theta}, returned as a TrigPoly.
Symbol partial_sum(const Symbol& a, long long n);

// sigma_n(a): coefficients scaled by (n+1-|k|)/(n+1) for |k| <= n.
Symbol fejer_mean(const Symbol& a, long long n);

// K_n(theta) = sum_{|k|<=n} (1-|k|/(n+1)) e^{ik theta}; the closed sine-ratio
// form away from the zeros of sin(theta/2), the coefficient sum near them.
double fejer_kernel(long long n, double theta);

// Coefficients obey conj_coeff(n) = conj(a_hat(-n)).
Symbol conjugate_symbol(const Symbol& a);

enum class HalfLineSign { Plus, Minus };

// Zeroes the coefficients violating the half-line condition; TrigPoly only.
Symbol analytic_project(const Symbol& a, HalfLineSign sign);

// constant * (sup norm + total variation); the bounded-variation multiplier
// bound with a caller-supplied (usually calibrated) constant.
double stechkin_bound(const Symbol& a, double constant);

// Pointwise product; both factors must be trig polynomials (coefficient
// convolution is exact there).
Symbol pointwise_product(const Symbol& a, const Symbol& b);

// a_x(theta) = a(theta - x); coefficient twist e^{-ikx} for TrigPoly,
// breakpoint rotation for the piecewise kinds.
Symbol shifted(const Symbol& a, double x);

// ||f - g||_sup on a dense grid with golden-section refinement.
double sup_norm_difference(const Symbol& f, const Symbol& g, int grid = 1 << 14);

// V(f - g) for f a TrigPoly and g any representation: quadrature of
// |f' - g'| on the smooth pieces plus the jump magnitudes of g.
double total_variation_difference(const Symbol& f, const Symbol& g,
                                  double tol = 1e-9);

}  // namespace llab
