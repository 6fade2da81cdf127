#include "llab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace llab {

namespace {

void verify_young_on_grid(const std::function<double(double)>& phi,
                          const std::string& name) {
  if (phi(0.0) != 0.0) {
    throw std::domain_error("YoungFunction " + name + ": Phi(0) != 0");
  }
  // convexity and monotonicity on a log-spaced sample grid
  double prev = 0.0;
  double t_prev = 0.0;
  double slope_prev = -std::numeric_limits<double>::infinity();
  for (int i = -40; i <= 40; ++i) {
    const double t = std::pow(10.0, i / 10.0);
    const double v = phi(t);
    if (!(v >= prev)) {
      throw std::domain_error("YoungFunction " + name + ": not increasing");
    }
    const double slope = (v - prev) / (t - t_prev);
    if (slope < slope_prev * (1.0 - 1e-9)) {
      throw std::domain_error("YoungFunction " + name + ": not convex on grid");
    }
    slope_prev = slope;
    prev = v;
    t_prev = t;
  }
}

}  // namespace

YoungFunction::YoungFunction(std::function<double(double)> eval,
                             std::string name)
    : eval_(std::move(eval)), name_(std::move(name)) {
  verify_young_on_grid(eval_, name_);
}

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("YoungFunction::power: requires p >= 1");
  }
  std::ostringstream os;
  os << "tpow(" << p << ")";
  return YoungFunction([p](double t) { return std::pow(t, p); }, os.str());
}

YoungFunction YoungFunction::piecewise_power(double a, double b) {
  if (!(a >= 1.0) || !(b >= a)) {
    throw std::domain_error("YoungFunction::piecewise_power: requires 1 <= a <= b");
  }
  std::ostringstream os;
  os << "piecewise(" << a << "," << b << ")";
  return YoungFunction(
      [a, b](double t) { return t <= 1.0 ? std::pow(t, a) : std::pow(t, b); },
      os.str());
}

YoungFunction YoungFunction::log_perturbed_power(double p, double c) {
  if (!(p >= 2.0) || !(c >= 0.0)) {
    throw std::domain_error(
        "YoungFunction::log_perturbed_power: requires p >= 2, c >= 0");
  }
  const double norm = std::log(std::exp(1.0) + 1.0);
  std::ostringstream os;
  os << "logpow(" << p << "," << c << ")";
  return YoungFunction(
      [p, c, norm](double t) {
        return std::pow(t, p) *
               std::pow(std::log(std::exp(1.0) + t) / norm, c);
      },
      os.str());
}

SpaceSpec::SpaceSpec(SpaceKind k, double p, double q)
    : kind_(k), p_(p), q_(q) {}

SpaceSpec SpaceSpec::lebesgue(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::domain_error("SpaceSpec::lebesgue: requires 1 < p < infinity");
  }
  return SpaceSpec(SpaceKind::LebesgueP, p, p);
}

SpaceSpec SpaceSpec::lorentz(double p, double q) {
  if (!(p > 1.0) || !(q >= 1.0)) {
    throw std::domain_error("SpaceSpec::lorentz: requires p > 1 and q >= 1");
  }
  return SpaceSpec(SpaceKind::Lorentz, p, q);
}

SpaceSpec SpaceSpec::orlicz(YoungFunction phi) {
  SpaceSpec s(SpaceKind::Orlicz, 0.0, 0.0);
  s.phi_ = std::move(phi);
  return s;
}

SpaceSpec SpaceSpec::with_weight(Weight w) const {
  SpaceSpec s = *this;
  s.weight_ = std::move(w);
  return s;
}

double SpaceSpec::holder_conjugate() const {
  if (kind_ != SpaceKind::LebesgueP) {
    throw std::logic_error("holder_conjugate: LebesgueP only");
  }
  return p_ / (p_ - 1.0);
}

const YoungFunction& SpaceSpec::phi() const {
  if (!phi_) throw std::logic_error("SpaceSpec::phi: not an Orlicz spec");
  return *phi_;
}

std::optional<SpaceSpec> SpaceSpec::exact_associate() const {
  if (kind_ != SpaceKind::LebesgueP) return std::nullopt;
  SpaceSpec dual = lebesgue(holder_conjugate());
  if (weight_ && !weight_->is_identity()) {
    dual.weight_ = Weight::exponentiated(*weight_, -1.0);
  }
  return dual;
}

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::LebesgueP:
      os << "lp(" << p_ << ")";
      break;
    case SpaceKind::Lorentz:
      os << "lorentz(" << p_ << "," << q_ << ")";
      break;
    case SpaceKind::Orlicz:
      os << "orlicz[" << phi_->describe() << "]";
      break;
  }
  if (weight_ && !weight_->is_identity()) os << "*" << weight_->describe();
  return os.str();
}

bool same_space(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == SpaceKind::Orlicz) {
    if (!(*a.phi_ == *b.phi_)) return false;
  } else if (a.p_ != b.p_ || a.q_ != b.q_) {
    return false;
  }
  const bool aw = !a.unweighted();
  const bool bw = !b.unweighted();
  if (aw != bw) return false;
  if (aw && !same_weight(*a.weight_, *b.weight_)) return false;
  return true;
}

namespace {

std::vector<double> weighted_magnitudes(const SpaceSpec& spec,
                                        const FiniteSequence& f) {
  std::vector<double> mags = f.magnitudes();
  if (spec.weight() && !spec.weight()->is_identity()) {
    const Weight& w = *spec.weight();
    for (std::size_t i = 0; i < mags.size(); ++i) {
      mags[i] *= w.value(f.offset() + static_cast<long long>(i));
    }
  }
  for (double m : mags) {
    if (!std::isfinite(m)) {
      throw std::domain_error("space_norm: non-finite weighted entry");
    }
  }
  return mags;
}

double scaled_power_sum_root(std::span<const double> mags, double p) {
  double mx = 0.0;
  for (double m : mags) mx = std::max(mx, m);
  if (mx == 0.0) return 0.0;
  double s = 0.0;
  for (double m : mags) s += std::pow(m / mx, p);
  return mx * std::pow(s, 1.0 / p);
}

double lorentz_norm(std::span<const double> decreasing, double p, double q) {
  double mx = decreasing.empty() ? 0.0 : decreasing[0];
  if (mx == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t n = 0; n < decreasing.size(); ++n) {
    s += std::pow(static_cast<double>(n + 1), q / p - 1.0) *
         std::pow(decreasing[n] / mx, q);
  }
  return mx * std::pow(s, 1.0 / q);
}

}  // namespace

double luxemburg_scale(const YoungFunction& phi,
                       std::span<const double> magnitudes) {
  double mx = 0.0;
  for (double m : magnitudes) mx = std::max(mx, m);
  if (mx == 0.0) return 0.0;

  const auto modular = [&](double lambda) {
    double s = 0.0;
    for (double m : magnitudes) {
      if (m > 0.0) s += phi(m / lambda);
    }
    return s;
  };

  // S(lambda) is nonincreasing; S(mx) >= Phi(1) = 1, so lambda* >= mx.
  double lo = mx;
  if (modular(lo) <= 1.0) return lo;
  double hi = mx;
  int guard = 0;
  do {
    hi *= 2.0;
    if (++guard > 200) {
      throw std::runtime_error(
          "luxemburg_scale: bisection bracket not found (modular stays > 1)");
    }
  } while (modular(hi) > 1.0);

  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (modular(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double space_norm(const SpaceSpec& spec, const FiniteSequence& f) {
  if (f.is_zero()) return 0.0;
  const std::vector<double> mags = weighted_magnitudes(spec, f);
  switch (spec.kind()) {
    case SpaceKind::LebesgueP:
      return scaled_power_sum_root(mags, spec.p());
    case SpaceKind::Lorentz: {
      std::vector<double> dec = mags;
      std::sort(dec.begin(), dec.end(), std::greater<double>());
      while (!dec.empty() && dec.back() == 0.0) dec.pop_back();
      return lorentz_norm(dec, spec.p(), spec.q());
    }
    case SpaceKind::Orlicz:
      return luxemburg_scale(spec.phi(), mags);
  }
  return 0.0;
}

namespace {

double weight_at(const SpaceSpec& spec, long long k) {
  if (spec.weight() && !spec.weight()->is_identity()) {
    return spec.weight()->value(k);
  }
  return 1.0;
}

// |dot(f, s)| / ||s||_X for a nonzero candidate s.
double pairing_value(const SpaceSpec& spec, const FiniteSequence& f,
                     const FiniteSequence& s) {
  if (s.is_zero()) return 0.0;
  const double ns = space_norm(spec, s);
  if (ns == 0.0) return 0.0;
  return std::abs(dot(f, s)) / ns;
}

// Phase-aligned candidate with positive profile sigma over supp(f).
FiniteSequence profile_candidate(const FiniteSequence& f,
                                 const std::vector<double>& sigma) {
  std::vector<cplx> vals(f.support_size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const cplx z = f.values()[i];
    const double a = std::abs(z);
    vals[i] = (a > 0.0) ? std::conj(z) / a * sigma[i] : cplx{0.0, 0.0};
  }
  return FiniteSequence(f.offset(), std::move(vals));
}

}  // namespace

BoundEstimate associate_norm_estimate(const SpaceSpec& spec,
                                      const FiniteSequence& f,
                                      long long support_radius,
                                      int search_budget, std::uint64_t seed) {
  if (search_budget <= 0) {
    throw std::invalid_argument("associate_norm_estimate: zero search budget");
  }
  BoundEstimate est;
  est.params.seed = seed;
  est.params.restarts = search_budget;
  if (f.is_zero()) {
    if (spec.kind() == SpaceKind::LebesgueP) {
      est.upper = 0.0;
      est.upper_method = UpperBoundMethod::HolderDual;
    }
    return est;
  }
  if (f.first() < -support_radius || f.last() > support_radius) {
    throw std::invalid_argument(
        "associate_norm_estimate: support_radius does not cover supp(f)");
  }

  double best = 0.0;
  FiniteSequence best_witness;
  const auto consider = [&](const FiniteSequence& s) {
    const double v = pairing_value(spec, f, s);
    if (v > best) {
      best = v;
      best_witness = s;
    }
  };

  // Basis vectors across the window.
  for (long long k = -support_radius; k <= support_radius; ++k) {
    consider(FiniteSequence::unit(k));
  }
  // Phase-aligned flat profile (the sign pattern of conj(f)).
  {
    std::vector<double> flat(f.support_size(), 1.0);
    consider(profile_candidate(f, flat));
  }
  // Dual-exponent extremal family sigma_k = |f_k|^t w_k^{-u}. For LebesgueP
  // the pair (t, u) = (q-1, q) attains the Holder dual exactly.
  {
    std::vector<std::pair<double, double>> tu = {
        {0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {0.5, 1.0}, {1.0, 2.0}};
    if (spec.kind() == SpaceKind::LebesgueP) {
      const double q = spec.holder_conjugate();
      tu.emplace_back(q - 1.0, q);
    }
    for (const auto& [t, u] : tu) {
      std::vector<double> sigma(f.support_size(), 0.0);
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double a = std::abs(f.values()[i]);
        if (a == 0.0) continue;
        const long long k = f.offset() + static_cast<long long>(i);
        sigma[i] = std::pow(a, t) * std::pow(weight_at(spec, k), -u);
      }
      consider(profile_candidate(f, sigma));
    }
  }
  // Random positive profiles.
  Rng rng(seed);
  for (int r = 0; r < search_budget; ++r) {
    std::vector<double> sigma(f.support_size());
    for (double& s : sigma) s = std::exp(rng.normal());
    consider(profile_candidate(f, sigma));
  }

  est.lower = best;
  if (!best_witness.is_zero()) est.witness = best_witness;
  if (spec.kind() == SpaceKind::LebesgueP) {
    const double q = spec.holder_conjugate();
    std::vector<double> dualmags = f.magnitudes();
    for (std::size_t i = 0; i < dualmags.size(); ++i) {
      const long long k = f.offset() + static_cast<long long>(i);
      dualmags[i] /= weight_at(spec, k);
    }
    est.upper = scaled_power_sum_root(dualmags, q);
    est.upper_method = UpperBoundMethod::HolderDual;
  }
  return est;
}

ReflectionInvarianceReport reflection_invariance_check(const SpaceSpec& spec,
                                                       int samples,
                                                       std::uint64_t seed,
                                                       double tolerance) {
  if (samples < 1) {
    throw std::invalid_argument("reflection_invariance_check: samples >= 1");
  }
  ReflectionInvarianceReport rep;
  rep.samples = samples;
  rep.tolerance = tolerance;

  const auto check = [&](const FiniteSequence& f) {
    const double a = space_norm(spec, f);
    const double b = space_norm(spec, reflect(f));
    const double denom = std::max(a, 1e-300);
    rep.max_rel_discrepancy =
        std::max(rep.max_rel_discrepancy, std::abs(a - b) / denom);
  };

  // Deterministic probes first: basis pairs catch one-sided weights even
  // when the random draws happen to be near-symmetric.
  check(FiniteSequence::unit(1));
  check(FiniteSequence::unit(-1));
  check(FiniteSequence::unit(5));

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const long long lo = -static_cast<long long>(rng.next_u64() % 16) - 1;
    const std::size_t len = 1 + rng.next_u64() % 24;
    std::vector<cplx> vals(len);
    for (cplx& v : vals) v = rng.complex_normal();
    check(FiniteSequence(lo, std::move(vals)));
  }
  rep.passed = rep.max_rel_discrepancy <= tolerance;
  return rep;
}

BoundEstimate calderon_product_norm_estimate(const SpaceSpec& spec0,
                                             const SpaceSpec& spec1,
                                             double theta,
                                             const FiniteSequence& f,
                                             int budget, std::uint64_t seed) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::domain_error("calderon_product_norm_estimate: theta in (0,1)");
  }
  if (budget < 0) {
    throw std::invalid_argument("calderon_product_norm_estimate: budget >= 0");
  }
  BoundEstimate est;
  est.params.seed = seed;
  est.params.restarts = budget;
  if (f.is_zero()) return est;

  const std::vector<double> absx = f.magnitudes();
  const std::size_t n = absx.size();

  // lambda(y, z) = ||y||^(1-theta) ||z||^theta * sup_k |x_k| / (y_k^(1-theta) z_k^theta)
  const auto factorization_value = [&](const std::vector<double>& y,
                                       const std::vector<double>& z) {
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (absx[i] == 0.0) continue;
      const double denom =
          std::pow(y[i], 1.0 - theta) * std::pow(z[i], theta);
      if (denom <= 0.0) return std::numeric_limits<double>::infinity();
      sup = std::max(sup, absx[i] / denom);
    }
    std::vector<cplx> yv(n), zv(n);
    for (std::size_t i = 0; i < n; ++i) {
      yv[i] = y[i];
      zv[i] = z[i];
    }
    const double ny = space_norm(spec0, FiniteSequence(f.offset(), yv));
    const double nz = space_norm(spec1, FiniteSequence(f.offset(), zv));
    return std::pow(ny, 1.0 - theta) * std::pow(nz, theta) * sup;
  };

  double upper = std::numeric_limits<double>::infinity();
  // identity split
  upper = std::min(upper, factorization_value(absx, absx));
  // exponent family y = |x|^{1+theta d}, z = |x|^{1-(1-theta) d}
  for (double d : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
    std::vector<double> y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = absx[i] > 0.0 ? std::pow(absx[i], 1.0 + theta * d) : 0.0;
      z[i] = absx[i] > 0.0 ? std::pow(absx[i], 1.0 - (1.0 - theta) * d) : 0.0;
    }
    upper = std::min(upper, factorization_value(y, z));
  }
  const bool lebesgue_pair = spec0.kind() == SpaceKind::LebesgueP &&
                             spec1.kind() == SpaceKind::LebesgueP;
  if (lebesgue_pair) {
    // Interpolation split: with 1/p(theta) = (1-theta)/p0 + theta/p1 and
    // W = w0^{1-theta} w1^theta, the optimum is y ~ |x|^{p(theta)/p0} W/w0,
    // z ~ |x|^{p(theta)/p1} W/w1, giving lambda = || x W ||_{p(theta)}.
    const double pt =
        1.0 / ((1.0 - theta) / spec0.p() + theta / spec1.p());
    std::vector<double> y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (absx[i] == 0.0) continue;
      const long long k = f.offset() + static_cast<long long>(i);
      const double w0 = weight_at(spec0, k);
      const double w1 = weight_at(spec1, k);
      const double W = std::pow(w0, 1.0 - theta) * std::pow(w1, theta);
      y[i] = std::pow(absx[i], pt / spec0.p()) * W / w0;
      z[i] = std::pow(absx[i], pt / spec1.p()) * W / w1;
    }
    upper = std::min(upper, factorization_value(y, z));
  }
  // random multiplicative perturbations of the identity split
  Rng rng(seed);
  for (int r = 0; r < budget; ++r) {
    std::vector<double> y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = 0.3 * rng.normal();
      y[i] = absx[i] * std::exp(theta * u);
      z[i] = absx[i] * std::exp(-(1.0 - theta) * u);
    }
    upper = std::min(upper, factorization_value(y, z));
  }
  est.upper = upper;

  // Lower bounds.
  double lower = 0.0;
  if (same_space(spec0, spec1)) {
    lower = space_norm(spec0, f);  // X^{1-theta} X^theta = X
  } else if (lebesgue_pair) {
    const double pt =
        1.0 / ((1.0 - theta) / spec0.p() + theta / spec1.p());
    std::vector<double> mags = f.magnitudes();
    for (std::size_t i = 0; i < n; ++i) {
      const long long k = f.offset() + static_cast<long long>(i);
      mags[i] *= std::pow(weight_at(spec0, k), 1.0 - theta) *
                 std::pow(weight_at(spec1, k), theta);
    }
    lower = scaled_power_sum_root(mags, pt);
  }
  // Per-coordinate duality bound, valid because ||e_k||_{X'} = 1/||e_k||_X
  // for every built-in norm.
  for (std::size_t i = 0; i < n; ++i) {
    if (absx[i] == 0.0) continue;
    const long long k = f.offset() + static_cast<long long>(i);
    lower = std::max(lower, absx[i] *
                                std::pow(weight_at(spec0, k), 1.0 - theta) *
                                std::pow(weight_at(spec1, k), theta));
  }
  est.lower = lower;
  return est;
}

double lozanovskii_check(const SpaceSpec& spec, const FiniteSequence& f,
                         int budget) {
  if (spec.kind() != SpaceKind::LebesgueP) {
    throw std::invalid_argument(
        "lozanovskii_check: supported only for LebesgueP specs "
        "(closed-form associate norm needed)");
  }
  if (f.is_zero()) return 0.0;
  const SpaceSpec dual = *spec.exact_associate();
  const BoundEstimate est =
      calderon_product_norm_estimate(spec, dual, 0.5, f, budget);
  const double l2 = space_norm(SpaceSpec::lebesgue(2.0), f);
  double gap = std::abs(est.lower - l2);
  if (est.upper) gap = std::max(gap, std::abs(*est.upper - l2));
  return gap / l2;
}

std::string to_string(UpperBoundMethod m) {
  switch (m) {
    case UpperBoundMethod::LinfExact:
      return "linf-exact";
    case UpperBoundMethod::Stechkin:
      return "stechkin";
    case UpperBoundMethod::GeometricMean:
      return "geometric-mean";
    case UpperBoundMethod::BoydInterp:
      return "boyd-interp";
    case UpperBoundMethod::HolderDual:
      return "holder-dual";
  }
  return "?";
}

}  // namespace llab
