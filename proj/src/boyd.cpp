#include "llab/boyd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace llab {

DecreasingSequence::DecreasingSequence(std::vector<double> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw std::domain_error("DecreasingSequence: entries must be >= 0");
    }
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw std::domain_error("DecreasingSequence: entries must not increase");
    }
  }
  while (!values_.empty() && values_.back() == 0.0) values_.pop_back();
}

DecreasingSequence DecreasingSequence::flat_block(std::size_t n) {
  return DecreasingSequence(std::vector<double>(n, 1.0));
}

DecreasingSequence DecreasingSequence::geometric(double ratio, std::size_t n) {
  std::vector<double> v(n);
  double x = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x;
    x *= ratio;
  }
  return DecreasingSequence(std::move(v));
}

DecreasingSequence dilate_down(int j, const DecreasingSequence& g) {
  if (j < 1) throw std::domain_error("dilate_down: j must be >= 1");
  if (j == 1) return g;
  std::vector<double> out;
  out.reserve(g.size() / static_cast<std::size_t>(j) + 1);
  for (std::size_t k = static_cast<std::size_t>(j) - 1; k < g.size();
       k += static_cast<std::size_t>(j)) {
    out.push_back(g.values()[k]);
  }
  return DecreasingSequence(std::move(out));
}

DecreasingSequence dilate_up(int j, const DecreasingSequence& g) {
  if (j < 1) throw std::domain_error("dilate_up: j must be >= 1");
  if (j == 1) return g;
  std::vector<double> out;
  out.reserve(g.size() * static_cast<std::size_t>(j));
  for (double v : g.values()) {
    for (int r = 0; r < j; ++r) out.push_back(v);
  }
  return DecreasingSequence(std::move(out));
}

double representation_norm(const SpaceSpec& spec, const DecreasingSequence& g) {
  if (g.empty()) return 0.0;
  std::vector<cplx> vals(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) vals[i] = g.values()[i];
  return space_norm(spec, FiniteSequence(0, std::move(vals)));
}

namespace {

void require_unweighted(const SpaceSpec& spec, const char* who) {
  if (!spec.unweighted()) {
    throw std::domain_error(std::string(who) +
                            ": Boyd indices are defined for the unweighted "
                            "rearrangement-invariant space");
  }
}

std::vector<DecreasingSequence> candidate_family(int j, long long budget,
                                                 std::uint64_t seed) {
  std::vector<DecreasingSequence> fam;
  // Flat blocks: dyadic lengths and multiples of j (those attain the
  // dilation exponent exactly for the power-type built-ins).
  for (long long n = 1; n <= budget; n *= 2) {
    fam.push_back(DecreasingSequence::flat_block(static_cast<std::size_t>(n)));
    const long long jn = static_cast<long long>(j) * n;
    if (jn <= budget) {
      fam.push_back(DecreasingSequence::flat_block(static_cast<std::size_t>(jn)));
    }
  }
  // Geometric tails.
  for (double r : {0.5, 0.8, 0.95, 0.99}) {
    const std::size_t len = static_cast<std::size_t>(
        std::min<long long>(budget, 4096));
    fam.push_back(DecreasingSequence::geometric(r, len));
  }
  // Random decreasing safety net.
  Rng rng(seed);
  for (int s = 0; s < 8; ++s) {
    const std::size_t len =
        1 + static_cast<std::size_t>(rng.next_u64() %
                                     static_cast<std::uint64_t>(
                                         std::min<long long>(budget, 2048)));
    std::vector<double> v(len);
    for (double& x : v) x = std::abs(rng.normal());
    std::sort(v.begin(), v.end(), std::greater<double>());
    if (v.back() == 0.0) v.back() = 1e-9;
    fam.push_back(DecreasingSequence(std::move(v)));
  }
  return fam;
}

template <typename Dilate>
double estimate_dilation_sup(const SpaceSpec& spec, int j, long long budget,
                             std::uint64_t seed, Dilate&& dil) {
  if (j < 1) throw std::domain_error("dilation estimate: j must be >= 1");
  if (budget < 1) throw std::domain_error("dilation estimate: budget >= 1");
  double best = 0.0;
  for (const DecreasingSequence& g : candidate_family(j, budget, seed)) {
    const double denom = representation_norm(spec, g);
    if (denom == 0.0) continue;
    const double num = representation_norm(spec, dil(j, g));
    best = std::max(best, num / denom);
  }
  return best;
}

}  // namespace

double estimate_H(const SpaceSpec& spec, int j, long long budget,
                  std::uint64_t seed) {
  require_unweighted(spec, "estimate_H");
  return estimate_dilation_sup(spec, j, budget, seed,
                               [](int jj, const DecreasingSequence& g) {
                                 return dilate_down(jj, g);
                               });
}

double estimate_K(const SpaceSpec& spec, int j, long long budget,
                  std::uint64_t seed) {
  require_unweighted(spec, "estimate_K");
  return estimate_dilation_sup(spec, j, budget, seed,
                               [](int jj, const DecreasingSequence& g) {
                                 return dilate_up(jj, g);
                               });
}

namespace {

struct IndexFit {
  double alpha, beta;
  LinearFit afit, bfit;
  std::vector<BoydEstimate::Row> rows;
};

IndexFit fit_indices(const SpaceSpec& spec, int j_max, long long budget,
                     std::uint64_t seed) {
  std::vector<double> logj, neg_logH, logK;
  IndexFit out;
  for (int j = 2; j <= j_max; j *= 2) {
    const double H = estimate_H(spec, j, budget, seed);
    const double K = estimate_K(spec, j, budget, seed);
    out.rows.push_back({j, H, K});
    logj.push_back(std::log(static_cast<double>(j)));
    neg_logH.push_back(-std::log(H));
    logK.push_back(std::log(K));
  }
  if (logj.size() < 3) {
    throw std::invalid_argument(
        "boyd_indices: fewer than 3 dilation points; increase j_max");
  }
  out.afit = fit_line(logj, neg_logH);
  out.bfit = fit_line(logj, logK);
  out.alpha = out.afit.slope;
  out.beta = out.bfit.slope;
  return out;
}

}  // namespace

BoydEstimate boyd_indices(const SpaceSpec& spec, int j_max, long long budget,
                          std::uint64_t seed) {
  require_unweighted(spec, "boyd_indices");
  if (j_max < 4) throw std::domain_error("boyd_indices: j_max must be >= 4");

  const IndexFit fit = fit_indices(spec, j_max, budget, seed);
  BoydEstimate est;
  est.per_j = fit.rows;
  est.alpha_hat = fit.alpha;
  est.beta_hat = fit.beta;
  est.alpha_fit = fit.afit;
  est.beta_fit = fit.bfit;

  if (spec.kind() == SpaceKind::LebesgueP) {
    const SpaceSpec dual = SpaceSpec::lebesgue(spec.holder_conjugate());
    const IndexFit dual_fit = fit_indices(dual, j_max, budget, seed);
    est.dual_alpha_hat = dual_fit.alpha;
    est.duality_residual = std::abs(dual_fit.alpha - (1.0 - est.beta_hat));
  }
  return est;
}

}  // namespace llab
