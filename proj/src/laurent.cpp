#include "llab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace llab {

FiniteSequence convolve(const Symbol& a, const FiniteSequence& phi,
                        long long coeff_radius) {
  if (coeff_radius < 0) {
    throw std::invalid_argument("convolve: coeff_radius must be >= 0");
  }
  long long radius = coeff_radius;
  if (a.is_trig_poly()) {
    if (coeff_radius < a.degree()) {
      throw std::invalid_argument(
          "convolve: coeff_radius below the trig polynomial degree would "
          "silently truncate an exact case");
    }
    radius = a.degree();
  }
  if (phi.is_zero()) return phi;

  const FourierWindow window = fourier_window(a, radius);
  const long long lo = phi.first() - radius;
  const long long hi = phi.last() + radius;
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1), cplx{0.0, 0.0});
  for (long long j = lo; j <= hi; ++j) {
    cplx acc{0.0, 0.0};
    const long long kmin = std::max(phi.first(), j - radius);
    const long long kmax = std::min(phi.last(), j + radius);
    for (long long k = kmin; k <= kmax; ++k) {
      acc += window.at(j - k) * phi.at(k);
    }
    out[static_cast<std::size_t>(j - lo)] = acc;
  }
  return FiniteSequence(lo, std::move(out));
}

// Same tail metadata a FourierWindow carries, without materializing one.
double coefficient_tail_bound(const Symbol& a, long long radius) {
  if (a.is_trig_poly()) {
    return (radius >= a.degree()) ? 0.0
                                  : std::numeric_limits<double>::infinity();
  }
  if (radius < 1) return std::numeric_limits<double>::infinity();
  return total_variation(a) / (kPi * static_cast<double>(radius));
}

namespace {

long long section_band(const Symbol& a, long long N) {
  if (a.is_trig_poly()) return std::min(a.degree(), 2 * N);
  const long long cap = std::max<long long>(512, 64 * N);
  return std::min(2 * N, cap);
}

}  // namespace

FiniteSection::FiniteSection(const Symbol& a, long long N, const Weight& w)
    : N_(N) {
  if (N < 1) throw std::domain_error("FiniteSection: N must be >= 1");
  band_ = section_band(a, N);
  FourierWindow window = fourier_window(a, band_);
  // diagonals beyond |j-k| = 2N never intersect the compression
  tail_bound_ = (band_ >= 2 * N) ? 0.0 : window.tail_bound;
  diag_ = std::move(window.coeffs);
  w_.resize(static_cast<std::size_t>(2 * N + 1));
  winv_.resize(w_.size());
  for (long long j = -N; j <= N; ++j) {
    const double wj = w.value(j);
    if (!(wj > 0.0) || !std::isfinite(wj)) {
      throw std::domain_error("FiniteSection: weight must be positive/finite");
    }
    w_[static_cast<std::size_t>(j + N)] = wj;
    winv_[static_cast<std::size_t>(j + N)] = 1.0 / wj;
  }
}

FiniteSection::FiniteSection(const Symbol& a, long long N)
    : FiniteSection(a, N, Weight::identity()) {}

cplx FiniteSection::diagonal_coefficient(long long d) const {
  if (d < -band_ || d > band_) return {0.0, 0.0};
  return diag_[static_cast<std::size_t>(d + band_)];
}

cplx FiniteSection::entry(long long j, long long k) const {
  if (j < -N_ || j > N_ || k < -N_ || k > N_) {
    throw std::out_of_range("FiniteSection::entry: index outside [-N, N]");
  }
  return w_[static_cast<std::size_t>(j + N_)] * diagonal_coefficient(j - k) *
         winv_[static_cast<std::size_t>(k + N_)];
}

double FiniteSection::weight_at(long long j) const {
  return w_[static_cast<std::size_t>(j + N_)];
}

std::vector<cplx> FiniteSection::apply(std::span<const cplx> x) const {
  const std::size_t n = static_cast<std::size_t>(2 * N_ + 1);
  if (x.size() != n) throw std::invalid_argument("FiniteSection::apply: size");
  std::vector<cplx> xw(n);
  for (std::size_t i = 0; i < n; ++i) xw[i] = x[i] * winv_[i];
  std::vector<cplx> y(n, cplx{0.0, 0.0});
  for (long long j = -N_; j <= N_; ++j) {
    const long long kmin = std::max(-N_, j - band_);
    const long long kmax = std::min(N_, j + band_);
    cplx acc{0.0, 0.0};
    for (long long k = kmin; k <= kmax; ++k) {
      acc += diag_[static_cast<std::size_t>(j - k + band_)] *
             xw[static_cast<std::size_t>(k + N_)];
    }
    y[static_cast<std::size_t>(j + N_)] =
        acc * w_[static_cast<std::size_t>(j + N_)];
  }
  return y;
}

std::vector<cplx> FiniteSection::apply_adjoint(std::span<const cplx> x) const {
  const std::size_t n = static_cast<std::size_t>(2 * N_ + 1);
  if (x.size() != n) {
    throw std::invalid_argument("FiniteSection::apply_adjoint: size");
  }
  std::vector<cplx> xw(n);
  for (std::size_t i = 0; i < n; ++i) xw[i] = x[i] * w_[i];
  std::vector<cplx> y(n, cplx{0.0, 0.0});
  for (long long k = -N_; k <= N_; ++k) {
    const long long jmin = std::max(-N_, k - band_);
    const long long jmax = std::min(N_, k + band_);
    cplx acc{0.0, 0.0};
    for (long long j = jmin; j <= jmax; ++j) {
      acc += std::conj(diag_[static_cast<std::size_t>(j - k + band_)]) *
             xw[static_cast<std::size_t>(j + N_)];
    }
    y[static_cast<std::size_t>(k + N_)] =
        acc * winv_[static_cast<std::size_t>(k + N_)];
  }
  return y;
}

std::vector<cplx> holder_dual_witness(std::span<const cplx> y, double p) {
  std::vector<cplx> out(y.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a > 0.0) out[i] = std::pow(a, p - 2.0) * y[i];
  }
  return out;
}

namespace {

// Norm of a section-coordinate vector in the unweighted base norm of `spec`
// (the weight is already folded into the section).
double base_norm(const SpaceSpec& base, std::span<const cplx> v,
                 long long N) {
  if (base.kind() == SpaceKind::LebesgueP) return lp_norm(v, base.p());
  std::vector<cplx> vals(v.begin(), v.end());
  return space_norm(base, FiniteSequence(-N, std::move(vals)));
}

SpaceSpec strip_weight(const SpaceSpec& spec) {
  switch (spec.kind()) {
    case SpaceKind::LebesgueP:
      return SpaceSpec::lebesgue(spec.p());
    case SpaceKind::Lorentz:
      return SpaceSpec::lorentz(spec.p(), spec.q());
    case SpaceKind::Orlicz:
      return SpaceSpec::orlicz(spec.phi());
  }
  throw std::logic_error("strip_weight: unreachable");
}

double ratio_of(const FiniteSection& S, const SpaceSpec& base,
                std::span<const cplx> x) {
  const double nx = base_norm(base, x, S.halfwidth());
  if (nx == 0.0) return 0.0;
  const std::vector<cplx> y = S.apply(x);
  return base_norm(base, y, S.halfwidth()) / nx;
}

void normalize_l2(std::vector<cplx>& v) {
  const double n = l2_norm(v);
  if (n > 0.0) {
    for (cplx& z : v) z /= n;
  }
}

// |z|^{r-2} z applied entrywise (the duality map of the l^r norm).
std::vector<cplx> jmap(std::span<const cplx> v, double r) {
  std::vector<cplx> out(v.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 0.0) out[i] = std::pow(a, r - 2.0) * v[i];
  }
  return out;
}

struct AscentResult {
  double value = 0.0;
  std::vector<cplx> witness;
};

void track(AscentResult& best, double value, const std::vector<cplx>& x) {
  if (value > best.value) {
    best.value = value;
    best.witness = x;
  }
}

// Power iteration on S^H S; the Rayleigh value after every step is a valid
// lower bound, so the best one seen is returned.
AscentResult power_iteration(const FiniteSection& S, std::vector<cplx> x,
                             int iterations) {
  AscentResult best;
  normalize_l2(x);
  if (l2_norm(x) == 0.0) return best;
  double prev = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<cplx> y = S.apply(x);
    const double sigma = l2_norm(y);  // ||Sx|| with ||x|| = 1
    track(best, sigma, x);
    if (sigma == 0.0) break;
    x = S.apply_adjoint(y);
    normalize_l2(x);
    if (it > 2 && std::abs(sigma - prev) <= 1e-13 * std::max(1.0, sigma)) {
      break;
    }
    prev = sigma;
  }
  return best;
}

// Nonlinear power iteration for the p -> p operator norm:
//   x <- J_{p'}(S^H J_p(S x)), normalized.
// Globally convergent for entrywise-nonnegative sections; a strong
// warm-startable heuristic otherwise. Every iterate's ratio is certified.
AscentResult lp_power_iteration(const FiniteSection& S, std::vector<cplx> x,
                                double p, int iterations) {
  AscentResult best;
  const double pdual = p / (p - 1.0);
  normalize_l2(x);
  if (l2_norm(x) == 0.0) return best;
  double prev = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const double nx = lp_norm(x, p);
    if (nx == 0.0) break;
    std::vector<cplx> y = S.apply(x);
    const double r = lp_norm(y, p) / nx;
    track(best, r, x);
    std::vector<cplx> z = S.apply_adjoint(jmap(y, p));
    x = jmap(z, pdual);
    normalize_l2(x);
    if (l2_norm(x) == 0.0) break;
    if (it > 2 && std::abs(r - prev) <= 1e-13 * std::max(1.0, r)) break;
    prev = r;
  }
  return best;
}

// Randomized ascent for norms without a usable duality map (Lorentz/Orlicz):
// full-vector Gaussian perturbations with an adaptive step.
AscentResult randomized_ascent(const FiniteSection& S, const SpaceSpec& base,
                               std::vector<cplx> x, int iterations, Rng rng) {
  AscentResult best;
  normalize_l2(x);
  double fx = ratio_of(S, base, x);
  track(best, fx, x);
  double step = 0.5;
  const std::size_t n = x.size();
  for (int it = 0; it < iterations; ++it) {
    std::vector<cplx> cand = x;
    // perturb a random subset; sparse moves explore edge-supported optima
    const std::size_t moves = 1 + rng.next_u64() % std::max<std::size_t>(1, n / 4);
    for (std::size_t m = 0; m < moves; ++m) {
      const std::size_t i = rng.next_u64() % n;
      cand[i] += step * rng.complex_normal();
    }
    normalize_l2(cand);
    const double fc = ratio_of(S, base, cand);
    if (fc > fx) {
      x = std::move(cand);
      fx = fc;
      track(best, fx, x);
      step = std::min(step * 1.3, 2.0);
    } else {
      step = std::max(step * 0.8, 1e-6);
    }
  }
  return best;
}

std::vector<cplx> sequence_to_section_coords(const FiniteSequence& phi,
                                             const FiniteSection& S) {
  const long long N = S.halfwidth();
  std::vector<cplx> x(static_cast<std::size_t>(2 * N + 1), cplx{0.0, 0.0});
  for (long long k = std::max(-N, phi.first());
       k <= std::min(N, phi.last()); ++k) {
    // section coordinates carry the weight: psi = w phi
    x[static_cast<std::size_t>(k + N)] = phi.at(k) * S.weight_at(k);
  }
  return x;
}

FiniteSequence section_coords_to_sequence(std::span<const cplx> x,
                                          const FiniteSection& S) {
  const long long N = S.halfwidth();
  std::vector<cplx> vals(x.size());
  for (long long k = -N; k <= N; ++k) {
    vals[static_cast<std::size_t>(k + N)] =
        x[static_cast<std::size_t>(k + N)] / S.weight_at(k);
  }
  return FiniteSequence(-N, std::move(vals));
}

}  // namespace

BoundEstimate multiplier_norm_lower(const Symbol& a, const SpaceSpec& spec,
                                    const LowerBoundOptions& options) {
  if (options.iterations <= 0) {
    throw std::invalid_argument("multiplier_norm_lower: zero iterations");
  }
  if (options.N < 1) {
    throw std::invalid_argument("multiplier_norm_lower: N must be >= 1");
  }
  const Weight w = (spec.weight() && !spec.weight()->is_identity())
                       ? *spec.weight()
                       : Weight::identity();
  const SpaceSpec base = strip_weight(spec);
  const FiniteSection S(a, options.N, w);
  const long long N = options.N;
  const std::size_t dim = static_cast<std::size_t>(2 * N + 1);

  AscentResult best;

  // Basis-vector scan: the ratio of e_k is the base norm of the k-th column.
  std::size_t best_col = dim / 2;
  {
    std::vector<cplx> col(dim);
    for (long long k = -N; k <= N; ++k) {
      const long long jmin = std::max(-N, k - S.band());
      const long long jmax = std::min(N, k + S.band());
      std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
      for (long long j = jmin; j <= jmax; ++j) {
        col[static_cast<std::size_t>(j + N)] = S.entry(j, k);
      }
      const double r = base_norm(base, col, N);
      if (r > best.value) {
        best.value = r;
        best_col = static_cast<std::size_t>(k + N);
        best.witness.assign(dim, cplx{0.0, 0.0});
        best.witness[best_col] = 1.0;
      }
    }
  }

  Rng rng(options.seed);

  // l^2 power iteration: the answer for LebesgueP(2), a warm start otherwise.
  std::vector<cplx> v0(dim);
  for (cplx& z : v0) z = rng.complex_normal();
  AscentResult l2res = power_iteration(S, v0, options.iterations);
  if (options.warm_start) {
    const std::vector<cplx> ws =
        sequence_to_section_coords(*options.warm_start, S);
    if (l2_norm(ws) > 0.0) {
      AscentResult fromws = power_iteration(S, ws, options.iterations);
      track(l2res, fromws.value, fromws.witness);
      // the warm start itself must never be lost: its ratio at larger N
      // dominates the smaller-N value exactly
      track(best, ratio_of(S, base, ws), ws);
    }
  }

  const bool is_l2 =
      spec.kind() == SpaceKind::LebesgueP && spec.p() == 2.0;
  if (is_l2) {
    track(best, l2res.value, l2res.witness);
  } else {
    std::vector<std::vector<cplx>> starts;
    if (!l2res.witness.empty()) starts.push_back(l2res.witness);
    if (options.warm_start) {
      starts.push_back(sequence_to_section_coords(*options.warm_start, S));
    }
    {
      std::vector<cplx> e(dim, cplx{0.0, 0.0});
      e[best_col] = 1.0;
      starts.push_back(std::move(e));
    }
    for (int r = 0; r < options.restarts; ++r) {
      Rng sub = rng.fork(static_cast<std::uint64_t>(r));
      std::vector<cplx> x(dim);
      for (cplx& z : x) z = sub.complex_normal();
      starts.push_back(std::move(x));
    }
    for (std::size_t s = 0; s < starts.size(); ++s) {
      if (l2_norm(starts[s]) == 0.0) continue;
      AscentResult res;
      if (base.kind() == SpaceKind::LebesgueP) {
        res = lp_power_iteration(S, starts[s], base.p(), options.iterations);
      } else {
        res = randomized_ascent(S, base, starts[s], options.iterations,
                                rng.fork(1000 + s));
      }
      track(best, res.value, res.witness);
    }
  }

  BoundEstimate est;
  est.lower = best.value;
  if (!best.witness.empty()) {
    est.witness = section_coords_to_sequence(best.witness, S);
  }
  est.params.section_halfwidth = N;
  est.params.iterations = options.iterations;
  est.params.restarts = options.restarts;
  est.params.seed = options.seed;
  est.params.truncation_tail_bound = S.truncation_tail_bound();
  return est;
}

BoundEstimate multiplier_norm_lower(const Symbol& a, const SpaceSpec& spec,
                                    long long N, int restarts, int iterations,
                                    std::uint64_t seed) {
  LowerBoundOptions opt;
  opt.N = N;
  opt.restarts = restarts;
  opt.iterations = iterations;
  opt.seed = seed;
  return multiplier_norm_lower(a, spec, opt);
}

std::vector<BoundEstimate> multiplier_norm_lower_sweep(
    const Symbol& a, const SpaceSpec& spec, std::span<const long long> Ns,
    int restarts, int iterations, std::uint64_t seed) {
  std::vector<BoundEstimate> out;
  LowerBoundOptions opt;
  opt.restarts = restarts;
  opt.iterations = iterations;
  opt.seed = seed;
  for (long long N : Ns) {
    opt.N = N;
    BoundEstimate est = multiplier_norm_lower(a, spec, opt);
    // monotone by construction; clamp against roundoff in the norm evals
    if (!out.empty() && est.lower < out.back().lower) {
      est.lower = out.back().lower;
      est.witness = out.back().witness;
    }
    opt.warm_start = est.witness;
    out.push_back(std::move(est));
  }
  return out;
}

UpperBoundResult multiplier_norm_upper(const Symbol& a, const SpaceSpec& spec,
                                       double stechkin_constant) {
  if (!(stechkin_constant > 0.0)) {
    throw std::domain_error("multiplier_norm_upper: constant must be positive");
  }
  const double sup = sup_norm(a);
  const double var = total_variation(a);
  if (!std::isfinite(var)) {
    throw std::domain_error("multiplier_norm_upper: symbol with infinite variation");
  }

  UpperBoundResult res;
  const double stechkin = stechkin_constant * (sup + var);
  const bool l2_exact = spec.kind() == SpaceKind::LebesgueP &&
                        spec.p() == 2.0 && spec.unweighted();
  if (l2_exact) {
    res.estimate.upper = sup;  // the Laurent norm on l^2 is the sup norm
    res.estimate.upper_method = UpperBoundMethod::LinfExact;
  } else {
    res.estimate.upper = stechkin;
    res.estimate.upper_method = UpperBoundMethod::Stechkin;
  }
  if (spec.kind() == SpaceKind::LebesgueP) {
    // sqrt(upper_X * upper_X') bounds the l^2 norm; with the same Stechkin
    // constant on both sides it collapses to the Stechkin value itself, so
    // it is reported for consistency displays only.
    res.l2_consistency = stechkin;
  }
  return res;
}

}  // namespace llab
