#include "llab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace llab {

namespace {

double reduce_angle(double theta) {
  // maps to [-pi, pi)
  double t = std::fmod(theta + kPi, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t - kPi;
}

cplx unit_phase(double t) { return {std::cos(t), std::sin(t)}; }

void validate_breakpoints(const std::vector<double>& thetas,
                          const std::vector<cplx>& values) {
  if (thetas.empty() || thetas.size() != values.size()) {
    throw std::domain_error("Symbol: breakpoints/values size mismatch");
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] >= -kPi) || !(thetas[i] < kPi)) {
      throw std::domain_error("Symbol: breakpoints must lie in [-pi, pi)");
    }
    if (i > 0 && !(thetas[i] > thetas[i - 1])) {
      throw std::domain_error("Symbol: breakpoints must strictly increase");
    }
  }
}

}  // namespace

Symbol Symbol::trig_poly(std::vector<cplx> coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 == 0) {
    throw std::domain_error(
        "Symbol::trig_poly: need an odd-length coefficient list c_{-n}..c_n");
  }
  // trim zero outer coefficients
  std::size_t lo = 0, hi = coeffs.size();
  while (hi - lo > 1 && coeffs[lo] == cplx{0.0, 0.0} &&
         coeffs[hi - 1] == cplx{0.0, 0.0}) {
    ++lo;
    --hi;
  }
  Symbol s;
  s.kind_ = Kind::TrigPoly;
  s.coeffs_.assign(coeffs.begin() + static_cast<long>(lo),
                   coeffs.begin() + static_cast<long>(hi));
  s.deg_ = static_cast<long long>(s.coeffs_.size() / 2);
  return s;
}

Symbol Symbol::constant(cplx c) { return trig_poly({c}); }

Symbol Symbol::exponential(long long n, cplx c) {
  const std::size_t m = static_cast<std::size_t>(std::llabs(n));
  std::vector<cplx> coeffs(2 * m + 1, cplx{0.0, 0.0});
  coeffs[static_cast<std::size_t>(n + static_cast<long long>(m))] = c;
  return trig_poly(std::move(coeffs));
}

Symbol Symbol::piecewise_linear(std::vector<double> thetas,
                                std::vector<cplx> values) {
  validate_breakpoints(thetas, values);
  Symbol s;
  s.kind_ = Kind::PiecewiseLinear;
  s.thetas_ = std::move(thetas);
  s.vals_ = std::move(values);
  return s;
}

Symbol Symbol::step(std::vector<double> thetas, std::vector<cplx> values) {
  validate_breakpoints(thetas, values);
  Symbol s;
  s.kind_ = Kind::Step;
  s.thetas_ = std::move(thetas);
  s.vals_ = std::move(values);
  return s;
}

Symbol Symbol::hat(double peak, double width) {
  if (!(width > 0.0) || width > kPi) {
    throw std::domain_error("Symbol::hat: width must lie in (0, pi]");
  }
  if (width == kPi) {
    return piecewise_linear({-kPi, 0.0}, {cplx{0.0, 0.0}, cplx{peak, 0.0}});
  }
  return piecewise_linear(
      {-kPi, -width, 0.0, width},
      {cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{peak, 0.0}, cplx{0.0, 0.0}});
}

Symbol Symbol::indicator(double a, double b, cplx h) {
  const double ra = reduce_angle(a);
  const double rb = reduce_angle(b);
  if (ra == rb) {
    throw std::domain_error("Symbol::indicator: degenerate arc");
  }
  if (ra < rb) {
    return step({ra, rb}, {h, cplx{0.0, 0.0}});
  }
  return step({rb, ra}, {cplx{0.0, 0.0}, h});
}

long long Symbol::degree() const {
  if (kind_ != Kind::TrigPoly) {
    throw std::logic_error("Symbol::degree: not a trig polynomial");
  }
  return deg_;
}

cplx Symbol::coeff(long long k) const {
  if (kind_ != Kind::TrigPoly) {
    throw std::logic_error("Symbol::coeff: not a trig polynomial");
  }
  if (k < -deg_ || k > deg_) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k + deg_)];
}

cplx Symbol::eval(double theta) const {
  const double t = reduce_angle(theta);
  switch (kind_) {
    case Kind::TrigPoly: {
      const cplx w = unit_phase(t);
      cplx z = unit_phase(-static_cast<double>(deg_) * t);
      cplx acc{0.0, 0.0};
      for (const cplx& c : coeffs_) {
        acc += c * z;
        z *= w;
      }
      return acc;
    }
    case Kind::Step:
    case Kind::PiecewiseLinear: {
      // last breakpoint <= t, or the wrap segment when t precedes them all
      const auto it = std::upper_bound(thetas_.begin(), thetas_.end(), t);
      const std::size_t m = thetas_.size();
      const std::size_t i =
          (it == thetas_.begin()) ? m - 1
                                  : static_cast<std::size_t>(it - thetas_.begin()) - 1;
      if (kind_ == Kind::Step) return vals_[i];
      const double a0 = thetas_[i];
      const double a1 = (i + 1 < m) ? thetas_[i + 1] : thetas_[0] + kTwoPi;
      const double tt = (it == thetas_.begin()) ? t + kTwoPi : t;
      const cplx v0 = vals_[i];
      const cplx v1 = vals_[(i + 1) % m];
      const double len = a1 - a0;
      const double s = (len > 0.0) ? (tt - a0) / len : 0.0;
      return v0 + (v1 - v0) * s;
    }
  }
  return {0.0, 0.0};
}

cplx Symbol::fourier_coefficient(long long n) const {
  switch (kind_) {
    case Kind::TrigPoly:
      return coeff(n);
    case Kind::Step: {
      const std::size_t m = thetas_.size();
      cplx acc{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) {
        const double a0 = thetas_[i];
        const double a1 = (i + 1 < m) ? thetas_[i + 1] : thetas_[0] + kTwoPi;
        if (n == 0) {
          acc += vals_[i] * (a1 - a0);
        } else {
          const double dn = static_cast<double>(n);
          acc += vals_[i] * (unit_phase(-dn * a0) - unit_phase(-dn * a1)) /
                 cplx{0.0, dn};
        }
      }
      return acc / kTwoPi;
    }
    case Kind::PiecewiseLinear: {
      const std::size_t m = thetas_.size();
      cplx acc{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) {
        const double a0 = thetas_[i];
        const double a1 = (i + 1 < m) ? thetas_[i + 1] : thetas_[0] + kTwoPi;
        const cplx v0 = vals_[i];
        const cplx v1 = vals_[(i + 1) % m];
        const double len = a1 - a0;
        if (len <= 0.0) continue;
        if (n == 0) {
          acc += 0.5 * (v0 + v1) * len;
          continue;
        }
        const double dn = static_cast<double>(n);
        const cplx slope = (v1 - v0) / len;
        const cplx e0 = unit_phase(-dn * a0);
        const cplx e1 = unit_phase(-dn * a1);
        // int_{a0}^{a1} e^{-in t} dt
        const cplx i0 = (e0 - e1) / cplx{0.0, dn};
        // int_0^L t e^{-int} dt, shifted by the phase at a0
        const cplx iL = unit_phase(-dn * len);
        const cplx i1 =
            e0 * (-len * iL / cplx{0.0, dn} - (cplx{1.0, 0.0} - iL) / (dn * dn));
        acc += v0 * i0 + slope * i1;
      }
      return acc / kTwoPi;
    }
  }
  return {0.0, 0.0};
}

std::string Symbol::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::TrigPoly:
      os << "trigpoly(deg " << deg_ << ")";
      break;
    case Kind::PiecewiseLinear:
      os << "piecewise-linear(" << thetas_.size() << " nodes)";
      break;
    case Kind::Step:
      os << "step(" << thetas_.size() << " pieces)";
      break;
  }
  return os.str();
}

FourierWindow fourier_window(const Symbol& a, long long radius) {
  if (radius < 0) {
    throw std::invalid_argument("fourier_window: radius must be >= 0");
  }
  FourierWindow w;
  w.radius = radius;
  w.coeffs.resize(static_cast<std::size_t>(2 * radius + 1));
  for (long long k = -radius; k <= radius; ++k) {
    w.coeffs[static_cast<std::size_t>(k + radius)] = a.fourier_coefficient(k);
  }
  if (a.is_trig_poly()) {
    w.tail_bound = (radius >= a.degree())
                       ? 0.0
                       : std::numeric_limits<double>::infinity();
  } else if (radius >= 1) {
    w.tail_bound = total_variation(a) / (kPi * static_cast<double>(radius));
  } else {
    w.tail_bound = std::numeric_limits<double>::infinity();
  }
  return w;
}

namespace {

double grid_sup(const std::function<double(double)>& f, int grid) {
  // dense scan, then golden-section refinement around the best bracket
  double best = 0.0;
  int best_i = 0;
  const double h = kTwoPi / grid;
  for (int i = 0; i < grid; ++i) {
    const double v = f(-kPi + i * h);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = -kPi + (best_i - 1) * h;
  const double hi = -kPi + (best_i + 1) * h;
  return std::max(best, golden_section_max(f, lo, hi, 1e-13));
}

}  // namespace

double sup_norm(const Symbol& a, int grid) {
  switch (a.kind()) {
    case Symbol::Kind::Step:
    case Symbol::Kind::PiecewiseLinear: {
      // |linear segment|^2 is convex, so segment maxima sit at breakpoints
      double best = 0.0;
      for (const cplx& v : a.breakpoint_values()) {
        best = std::max(best, std::abs(v));
      }
      return best;
    }
    case Symbol::Kind::TrigPoly:
      return grid_sup([&](double t) { return std::abs(a.eval(t)); }, grid);
  }
  return 0.0;
}

double total_variation(const Symbol& a) {
  switch (a.kind()) {
    case Symbol::Kind::Step:
    case Symbol::Kind::PiecewiseLinear: {
      const auto& vals = a.breakpoint_values();
      const std::size_t m = vals.size();
      double v = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        v += std::abs(vals[(i + 1) % m] - vals[i]);
      }
      return v;
    }
    case Symbol::Kind::TrigPoly: {
      const long long d = a.degree();
      std::vector<cplx> dc(static_cast<std::size_t>(2 * d + 1));
      for (long long k = -d; k <= d; ++k) {
        dc[static_cast<std::size_t>(k + d)] =
            a.coeff(k) * cplx{0.0, static_cast<double>(k)};
      }
      const Symbol da = Symbol::trig_poly(std::move(dc));
      const int panels = static_cast<int>(std::min<long long>(4 * d + 8, 8192));
      return integrate_adaptive(
          [&](double t) { return std::abs(da.eval(t)); }, -kPi, kPi, 1e-10,
          40, panels);
    }
  }
  return 0.0;
}

Symbol partial_sum(const Symbol& a, long long n) {
  if (n < 0) throw std::domain_error("partial_sum: n must be >= 0");
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * n + 1));
  for (long long k = -n; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k + n)] = a.fourier_coefficient(k);
  }
  return Symbol::trig_poly(std::move(coeffs));
}

Symbol fejer_mean(const Symbol& a, long long n) {
  if (n < 0) throw std::domain_error("fejer_mean: n must be >= 0");
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * n + 1));
  for (long long k = -n; k <= n; ++k) {
    const double factor = static_cast<double>(n + 1 - std::llabs(k)) /
                          static_cast<double>(n + 1);
    coeffs[static_cast<std::size_t>(k + n)] =
        a.fourier_coefficient(k) * factor;
  }
  return Symbol::trig_poly(std::move(coeffs));
}

double fejer_kernel(long long n, double theta) {
  if (n < 0) throw std::domain_error("fejer_kernel: n must be >= 0");
  const double t = reduce_angle(theta);
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-9) {
    // triangle-coefficient sum; exact n+1 at t = 0
    double acc = 1.0;
    for (long long k = 1; k <= n; ++k) {
      acc += 2.0 *
             (static_cast<double>(n + 1 - k) / static_cast<double>(n + 1)) *
             std::cos(static_cast<double>(k) * t);
    }
    return acc;
  }
  const double num = std::sin(0.5 * static_cast<double>(n + 1) * t);
  return (num * num) / (static_cast<double>(n + 1) * s * s);
}

Symbol conjugate_symbol(const Symbol& a) {
  switch (a.kind()) {
    case Symbol::Kind::TrigPoly: {
      const long long d = a.degree();
      std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1));
      for (long long k = -d; k <= d; ++k) {
        coeffs[static_cast<std::size_t>(k + d)] = std::conj(a.coeff(-k));
      }
      return Symbol::trig_poly(std::move(coeffs));
    }
    case Symbol::Kind::PiecewiseLinear: {
      std::vector<cplx> vals = a.breakpoint_values();
      for (cplx& v : vals) v = std::conj(v);
      return Symbol::piecewise_linear(a.breakpoints(), std::move(vals));
    }
    case Symbol::Kind::Step: {
      std::vector<cplx> vals = a.breakpoint_values();
      for (cplx& v : vals) v = std::conj(v);
      return Symbol::step(a.breakpoints(), std::move(vals));
    }
  }
  throw std::logic_error("conjugate_symbol: unreachable");
}

Symbol analytic_project(const Symbol& a, HalfLineSign sign) {
  if (!a.is_trig_poly()) {
    throw std::invalid_argument(
        "analytic_project: supported for trig polynomials only");
  }
  const long long d = a.degree();
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1), cplx{0.0, 0.0});
  for (long long k = -d; k <= d; ++k) {
    const bool keep = (sign == HalfLineSign::Plus) ? (k >= 0) : (k <= 0);
    if (keep) coeffs[static_cast<std::size_t>(k + d)] = a.coeff(k);
  }
  return Symbol::trig_poly(std::move(coeffs));
}

double stechkin_bound(const Symbol& a, double constant) {
  if (!(constant > 0.0)) {
    throw std::domain_error("stechkin_bound: constant must be positive");
  }
  return constant * (sup_norm(a) + total_variation(a));
}

Symbol pointwise_product(const Symbol& a, const Symbol& b) {
  if (!a.is_trig_poly() || !b.is_trig_poly()) {
    throw std::invalid_argument(
        "pointwise_product: both factors must be trig polynomials");
  }
  const long long da = a.degree();
  const long long db = b.degree();
  const long long d = da + db;
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1), cplx{0.0, 0.0});
  for (long long i = -da; i <= da; ++i) {
    const cplx ci = a.coeff(i);
    if (ci == cplx{0.0, 0.0}) continue;
    for (long long j = -db; j <= db; ++j) {
      coeffs[static_cast<std::size_t>(i + j + d)] += ci * b.coeff(j);
    }
  }
  return Symbol::trig_poly(std::move(coeffs));
}

Symbol shifted(const Symbol& a, double x) {
  switch (a.kind()) {
    case Symbol::Kind::TrigPoly: {
      const long long d = a.degree();
      std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1));
      for (long long k = -d; k <= d; ++k) {
        coeffs[static_cast<std::size_t>(k + d)] =
            a.coeff(k) * unit_phase(-static_cast<double>(k) * x);
      }
      return Symbol::trig_poly(std::move(coeffs));
    }
    case Symbol::Kind::PiecewiseLinear:
    case Symbol::Kind::Step: {
      const std::size_t m = a.breakpoints().size();
      std::vector<std::pair<double, cplx>> nodes(m);
      for (std::size_t i = 0; i < m; ++i) {
        nodes[i] = {reduce_angle(a.breakpoints()[i] + x),
                    a.breakpoint_values()[i]};
      }
      std::sort(nodes.begin(), nodes.end(),
                [](const auto& u, const auto& v) { return u.first < v.first; });
      std::vector<double> thetas(m);
      std::vector<cplx> vals(m);
      for (std::size_t i = 0; i < m; ++i) {
        thetas[i] = nodes[i].first;
        vals[i] = nodes[i].second;
      }
      return (a.kind() == Symbol::Kind::Step)
                 ? Symbol::step(std::move(thetas), std::move(vals))
                 : Symbol::piecewise_linear(std::move(thetas), std::move(vals));
    }
  }
  throw std::logic_error("shifted: unreachable");
}

double sup_norm_difference(const Symbol& f, const Symbol& g, int grid) {
  return grid_sup(
      [&](double t) { return std::abs(f.eval(t) - g.eval(t)); }, grid);
}

double total_variation_difference(const Symbol& f, const Symbol& g,
                                  double tol) {
  if (!f.is_trig_poly()) {
    throw std::invalid_argument(
        "total_variation_difference: first argument must be a trig polynomial");
  }
  if (g.is_trig_poly()) {
    const long long d = std::max(f.degree(), g.degree());
    std::vector<cplx> coeffs(static_cast<std::size_t>(2 * d + 1));
    for (long long k = -d; k <= d; ++k) {
      coeffs[static_cast<std::size_t>(k + d)] = f.coeff(k) - g.coeff(k);
    }
    return total_variation(Symbol::trig_poly(std::move(coeffs)));
  }

  // derivative of f as a trig polynomial
  const long long d = f.degree();
  std::vector<cplx> dc(static_cast<std::size_t>(2 * d + 1));
  for (long long k = -d; k <= d; ++k) {
    dc[static_cast<std::size_t>(k + d)] =
        f.coeff(k) * cplx{0.0, static_cast<double>(k)};
  }
  const Symbol df = Symbol::trig_poly(std::move(dc));

  const auto& thetas = g.breakpoints();
  const auto& vals = g.breakpoint_values();
  const std::size_t m = thetas.size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double a0 = thetas[i];
    const double a1 = (i + 1 < m) ? thetas[i + 1] : thetas[0] + kTwoPi;
    cplx gslope{0.0, 0.0};
    if (g.kind() == Symbol::Kind::PiecewiseLinear && a1 > a0) {
      gslope = (vals[(i + 1) % m] - vals[i]) / (a1 - a0);
    }
    // ~4 panels per oscillation of the degree-d derivative on this segment
    const int panels = static_cast<int>(std::min(
        8.0 + std::ceil(4.0 * static_cast<double>(d) * (a1 - a0) / kTwoPi),
        8192.0));
    total += integrate_adaptive(
        [&](double t) { return std::abs(df.eval(t) - gslope); }, a0, a1,
        tol / static_cast<double>(m), 40, panels);
    if (g.kind() == Symbol::Kind::Step) {
      // the difference inherits g's jumps with opposite sign
      total += std::abs(vals[(i + 1) % m] - vals[i]);
    }
  }
  return total;
}

}  // namespace llab
