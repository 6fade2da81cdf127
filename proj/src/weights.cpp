#include "llab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace llab {

namespace {
enum class Kind { Constant, Power, Table, Exponentiated };
}

struct Weight::Node {
  Kind kind = Kind::Constant;
  WeightDomain domain = WeightDomain::FullLine;
  bool symmetric = false;
  double scalar = 1.0;  // constant value, power exponent, or outer exponent
  std::vector<double> log_table;
  long long table_first = 0;
  std::shared_ptr<const Node> base;  // Exponentiated
};

Weight Weight::constant(double c, WeightDomain d) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::domain_error("Weight::constant: value must be positive");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->domain = d;
  node->symmetric = (d == WeightDomain::FullLine);
  node->scalar = c;
  return Weight(std::move(node));
}

Weight Weight::power(double gamma, WeightDomain d) {
  if (!std::isfinite(gamma)) {
    throw std::domain_error("Weight::power: exponent must be finite");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Power;
  node->domain = d;
  node->symmetric = (d == WeightDomain::FullLine);
  node->scalar = gamma;
  return Weight(std::move(node));
}

Weight Weight::table(std::vector<double> values, long long first_index,
                     WeightDomain d) {
  if (values.empty()) throw std::domain_error("Weight::table: empty table");
  if (d == WeightDomain::HalfLine && first_index != 0) {
    throw std::domain_error("Weight::table: half-line tables start at 0");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Table;
  node->domain = d;
  node->table_first = first_index;
  node->log_table.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("Weight::table: values must be positive");
    }
    node->log_table.push_back(std::log(v));
  }
  if (d == WeightDomain::FullLine) {
    const long long last = first_index + static_cast<long long>(values.size()) - 1;
    bool sym = (first_index == -last);
    if (sym) {
      for (std::size_t i = 0; sym && i < values.size(); ++i) {
        if (values[i] != values[values.size() - 1 - i]) sym = false;
      }
    }
    node->symmetric = sym;
  }
  return Weight(std::move(node));
}

Weight Weight::exponentiated(Weight base, double exponent) {
  if (!std::isfinite(exponent)) {
    throw std::domain_error("Weight::exponentiated: exponent must be finite");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Exponentiated;
  node->domain = base.domain();
  node->symmetric = base.symmetric();
  node->scalar = exponent;
  node->base = base.node_;
  return Weight(std::move(node));
}

double Weight::log_value(long long k) const {
  const Node& n = *node_;
  if (n.domain == WeightDomain::HalfLine && k < 0) {
    throw std::out_of_range("Weight: negative index on a half-line weight");
  }
  switch (n.kind) {
    case Kind::Constant:
      return std::log(n.scalar);
    case Kind::Power: {
      const long long a = (n.domain == WeightDomain::FullLine) ? std::llabs(k) : k;
      return n.scalar * std::log1p(static_cast<double>(a));
    }
    case Kind::Table: {
      const long long i = k - n.table_first;
      if (i < 0 || i >= static_cast<long long>(n.log_table.size())) {
        throw std::out_of_range("Weight: index outside the stored table");
      }
      return n.log_table[static_cast<std::size_t>(i)];
    }
    case Kind::Exponentiated:
      return n.scalar * Weight(n.base).log_value(k);
  }
  return 0.0;
}

double Weight::value(long long k) const { return std::exp(log_value(k)); }

WeightDomain Weight::domain() const { return node_->domain; }

bool Weight::symmetric() const { return node_->symmetric; }

bool Weight::is_identity() const {
  return node_->kind == Kind::Constant && node_->scalar == 1.0;
}

std::string Weight::describe() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Constant:
      os << "const(" << n.scalar << ")";
      break;
    case Kind::Power:
      os << (n.domain == WeightDomain::HalfLine ? "halfpower(" : "power(")
         << n.scalar << ")";
      break;
    case Kind::Table:
      os << "table[" << n.log_table.size() << "@" << n.table_first << "]";
      break;
    case Kind::Exponentiated:
      os << "pow(" << Weight(n.base).describe() << "," << n.scalar << ")";
      break;
  }
  return os.str();
}

bool same_weight(const Weight& a, const Weight& b) {
  const Weight::Node& x = *a.node_;
  const Weight::Node& y = *b.node_;
  if (x.kind != y.kind || x.domain != y.domain) return false;
  switch (x.kind) {
    case Kind::Constant:
    case Kind::Power:
      return x.scalar == y.scalar;
    case Kind::Table:
      return x.table_first == y.table_first && x.log_table == y.log_table;
    case Kind::Exponentiated:
      return x.scalar == y.scalar && same_weight(Weight(x.base), Weight(y.base));
  }
  return false;
}

Weight symmetric_extend(const Weight& w) {
  const Weight::Node& n = *w.node_;
  if (n.domain != WeightDomain::HalfLine) {
    throw std::domain_error("symmetric_extend: expects a half-line weight");
  }
  switch (n.kind) {
    case Kind::Constant:
      return Weight::constant(n.scalar, WeightDomain::FullLine);
    case Kind::Power:
      return Weight::power(n.scalar, WeightDomain::FullLine);
    case Kind::Table: {
      // mirror w_0 w_1 ... w_m into w_m ... w_1 w_0 w_1 ... w_m
      const std::size_t m = n.log_table.size();
      std::vector<double> vals(2 * m - 1);
      for (std::size_t i = 0; i < m; ++i) {
        const double v = std::exp(n.log_table[i]);
        vals[m - 1 + i] = v;
        vals[m - 1 - i] = v;
      }
      return Weight::table(std::move(vals), -(static_cast<long long>(m) - 1),
                           WeightDomain::FullLine);
    }
    case Kind::Exponentiated:
      return Weight::exponentiated(symmetric_extend(Weight(n.base)), n.scalar);
  }
  throw std::logic_error("symmetric_extend: unreachable");
}

double log_moment_mean(const Weight& w, long long lo, long long hi, double e) {
  if (lo > hi) throw std::invalid_argument("log_moment_mean: empty interval");
  LogSumAccumulator acc;
  for (long long k = lo; k <= hi; ++k) acc.add_log(e * w.log_value(k));
  return acc.log_sum() - std::log(static_cast<double>(hi - lo + 1));
}

namespace {

struct ScanContext {
  const Weight* w;
  double p, q;
  double best_log = -std::numeric_limits<double>::infinity();
  std::pair<long long, long long> best_interval{0, 0};
  // best_per_level[r]: best log value among intervals of length <= 2^r
  std::vector<double> per_level;
  int levels = 0;

  void init(int lv) {
    levels = lv;
    per_level.assign(static_cast<std::size_t>(lv) + 1,
                     -std::numeric_limits<double>::infinity());
  }

  void record(long long lo, long long hi, double log_value) {
    const long long m = hi - lo + 1;
    int r = 0;
    while ((1LL << r) < m) ++r;
    if (r <= levels && log_value > per_level[static_cast<std::size_t>(r)]) {
      per_level[static_cast<std::size_t>(r)] = log_value;
    }
    if (log_value > best_log) {
      best_log = log_value;
      best_interval = {lo, hi};
    }
  }
};

// A_p interval value in the log domain:
//   log[(1/m)(sum w^p)^{1/p}(sum w^{-q})^{1/q}]
double interval_log_value(const Weight& w, double p, double q, long long lo,
                          long long hi) {
  LogSumAccumulator sp, sq;
  for (long long k = lo; k <= hi; ++k) {
    const double lw = w.log_value(k);
    sp.add_log(p * lw);
    sq.add_log(-q * lw);
  }
  const double logm = std::log(static_cast<double>(hi - lo + 1));
  return sp.log_sum() / p + sq.log_sum() / q - logm;
}

// Extends the interval one index at a time so the exhaustive small-length
// scan costs O(anchors * max_len) log-adds instead of O(anchors * max_len^2).
void scan_anchor(ScanContext& ctx, long long anchor, long long max_len,
                 long long domain_min) {
  if (anchor < domain_min) return;
  LogSumAccumulator sp, sq;
  for (long long len = 1; len <= max_len; ++len) {
    const long long hi = anchor + len - 1;
    const double lw = ctx.w->log_value(hi);
    sp.add_log(ctx.p * lw);
    sq.add_log(-ctx.q * lw);
    const double logm = std::log(static_cast<double>(len));
    ctx.record(anchor, hi,
               sp.log_sum() / ctx.p + sq.log_sum() / ctx.q - logm);
  }
}

}  // namespace

ApCharacteristic ap_characteristic(const Weight& w, double p, long long budget,
                                   long long anchor_range) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::domain_error("ap_characteristic: requires 1 < p < infinity");
  }
  if (budget < 1) throw std::domain_error("ap_characteristic: budget >= 1");
  const double q = p / (p - 1.0);
  const long long domain_min =
      (w.domain() == WeightDomain::HalfLine) ? 0 : std::numeric_limits<long long>::min() / 4;

  ScanContext ctx;
  ctx.w = &w;
  ctx.p = p;
  ctx.q = q;
  int levels = 0;
  while ((1LL << (levels + 1)) <= budget) ++levels;
  ctx.init(levels);

  // Exhaustive small lengths anchored near the origin.
  const long long small_len = std::min<long long>(64, budget);
  const long long lo_anchor =
      (w.domain() == WeightDomain::HalfLine) ? 0 : -anchor_range;
  for (long long a = lo_anchor; a <= anchor_range; ++a) {
    scan_anchor(ctx, a, small_len, domain_min);
  }

  // Dyadic lengths anchored at 0 and +-budget/2: left end, right end, and
  // centered at the anchor. Power-type weights attain their growth on
  // intervals touching the origin; the far anchors cover weights that grow
  // away from it.
  const long long half = budget / 2;
  const std::vector<long long> anchors =
      (w.domain() == WeightDomain::HalfLine)
          ? std::vector<long long>{0, half}
          : std::vector<long long>{0, half, -half};
  for (int r = 0; r <= levels; ++r) {
    const long long len = 1LL << r;
    for (long long a : anchors) {
      const long long starts[3] = {a, a - len + 1, a - len / 2};
      for (long long s : starts) {
        const long long lo = std::max(s, domain_min);
        if (w.domain() == WeightDomain::HalfLine && lo < 0) continue;
        ctx.record(lo, lo + len - 1,
                   interval_log_value(w, p, q, lo, lo + len - 1));
      }
    }
  }

  ApCharacteristic out;
  out.p = p;
  out.budget = budget;
  out.value = std::exp(ctx.best_log);
  out.attaining_interval = ctx.best_interval;
  double running = -std::numeric_limits<double>::infinity();
  for (int r = 0; r <= levels; ++r) {
    running = std::max(running, ctx.per_level[static_cast<std::size_t>(r)]);
    out.growth_trace.emplace_back(1LL << r, std::exp(running));
  }
  return out;
}

ApMembershipReport ap_membership_verdict(const Weight& w, double p,
                                         const std::vector<long long>& budgets,
                                         double plateau_tolerance,
                                         double divergence_threshold,
                                         long long anchor_range) {
  if (budgets.empty()) {
    throw std::invalid_argument("ap_membership_verdict: empty budget list");
  }
  for (std::size_t i = 1; i < budgets.size(); ++i) {
    if (budgets[i] <= budgets[i - 1]) {
      throw std::invalid_argument("ap_membership_verdict: budgets must increase");
    }
  }
  ApMembershipReport rep;
  rep.plateau_tolerance = plateau_tolerance;
  rep.divergence_threshold = divergence_threshold;
  rep.characteristic = ap_characteristic(w, p, budgets.back(), anchor_range);

  // Pull the trace values at the requested budgets from the dyadic trace.
  std::vector<double> values;
  for (long long b : budgets) {
    double v = 1.0;
    for (const auto& [len, tv] : rep.characteristic.growth_trace) {
      if (len <= b) v = tv;
    }
    values.push_back(v);
  }
  if (values.size() >= 2) {
    const double last = values[values.size() - 1];
    const double prev = values[values.size() - 2];
    rep.final_doubling_growth = last / prev - 1.0;
    const int doublings = static_cast<int>(values.size()) - 1;
    rep.mean_doubling_growth =
        std::pow(last / values.front(), 1.0 / doublings) - 1.0;
  }

  if (values.size() < 2 || rep.final_doubling_growth < plateau_tolerance) {
    rep.verdict = ApVerdict::InApEvidence;
  } else if (rep.final_doubling_growth > divergence_threshold ||
             rep.mean_doubling_growth > divergence_threshold) {
    rep.verdict = ApVerdict::NotInApEvidence;
  } else {
    rep.verdict = ApVerdict::Inconclusive;
  }
  return rep;
}

ReverseHolderResult reverse_holder_probe(const Weight& w, double p,
                                         long long budget,
                                         const std::vector<double>& delta_grid,
                                         double constant_cap) {
  if (delta_grid.empty()) {
    throw std::invalid_argument("reverse_holder_probe: empty delta grid");
  }
  if (w.domain() != WeightDomain::HalfLine) {
    throw std::domain_error("reverse_holder_probe: expects a half-line weight");
  }
  // Dyadic intervals R with m(R) = 2^r, r >= 1, within the budget, anchored
  // at 0, at dyadic points, and on a half-length lattice.
  std::vector<std::pair<long long, long long>> intervals;
  for (long long len = 2; len <= budget; len *= 2) {
    std::vector<long long> anchors{0};
    for (long long s = 1; s <= budget; s *= 2) anchors.push_back(s);
    for (long long a = len / 2; a + len - 1 < budget; a += len / 2) {
      anchors.push_back(a);
    }
    for (long long a : anchors) {
      if (a + len - 1 >= budget) continue;
      intervals.emplace_back(a, a + len - 1);
    }
  }

  ReverseHolderResult out;
  for (double delta : delta_grid) {
    if (delta < 0.0) {
      throw std::invalid_argument("reverse_holder_probe: delta must be >= 0");
    }
    double worst = 1.0;
    if (delta == 0.0) {
      worst = 1.0;  // identical exponents, ratio is identically 1
    } else {
      double worst_log = -std::numeric_limits<double>::infinity();
      for (const auto& [lo, hi] : intervals) {
        const double lhs =
            log_moment_mean(w, lo, hi, p * (1.0 + delta)) / (1.0 + delta);
        const double rhs = log_moment_mean(w, lo, hi, p);
        worst_log = std::max(worst_log, lhs - rhs);
      }
      worst = std::exp(worst_log);
    }
    out.table.emplace_back(delta, worst);
    if (worst <= constant_cap &&
        (!out.found || delta > out.best_delta)) {
      out.found = true;
      out.best_delta = delta;
      out.best_constant = worst;
    }
  }
  return out;
}

ConvexityRegionReport convexity_region_probe(
    const Weight& w, const std::vector<double>& p_grid,
    const std::vector<double>& delta_grid, long long budget) {
  if (w.domain() != WeightDomain::HalfLine) {
    throw std::domain_error("convexity_region_probe: expects a half-line weight");
  }
  std::vector<long long> budgets;
  for (long long b = 2; b <= budget; b *= 2) budgets.push_back(b);

  ConvexityRegionReport rep;
  std::vector<std::pair<double, double>> in_region;
  for (double p : p_grid) {
    for (double d : delta_grid) {
      const Weight u = Weight::exponentiated(w, d / p);
      const auto verdict = ap_membership_verdict(u, p, budgets);
      ConvexityRegionReport::GridPoint gp;
      gp.p = p;
      gp.delta = d;
      gp.verdict = verdict.verdict;
      gp.characteristic = verdict.characteristic.value;
      rep.grid.push_back(gp);
      if (gp.verdict == ApVerdict::InApEvidence) in_region.emplace_back(p, d);
    }
  }

  rep.min_slack = std::numeric_limits<double>::infinity();
  const double thetas[3] = {0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < in_region.size(); ++i) {
    for (std::size_t j = i + 1; j < in_region.size(); ++j) {
      const auto [p1, d1] = in_region[i];
      const auto [p2, d2] = in_region[j];
      const double c1 =
          ap_characteristic(Weight::exponentiated(w, d1 / p1), p1, budget).value;
      const double c2 =
          ap_characteristic(Weight::exponentiated(w, d2 / p2), p2, budget).value;
      for (double t : thetas) {
        const double pt = (1.0 - t) * p1 + t * p2;
        const double dt = (1.0 - t) * d1 + t * d2;
        const double lhs =
            ap_characteristic(Weight::exponentiated(w, dt / pt), pt, budget).value;
        const double rhs = std::pow(c1, (1.0 - t) * p1 / pt) *
                           std::pow(c2, t * p2 / pt);
        ConvexityRegionReport::MidpointCheck mc{p1, d1, p2, d2, t,
                                                lhs, rhs, rhs - lhs};
        rep.min_slack = std::min(rep.min_slack, mc.slack);
        if (mc.slack < -1e-9) rep.all_nonnegative = false;
        rep.midpoint_checks.push_back(mc);
      }
    }
  }
  if (rep.midpoint_checks.empty()) rep.min_slack = 0.0;
  return rep;
}

StabilityReport stability_probe(const Weight& w, double p0,
                                const std::vector<double>& eps_grid,
                                const std::vector<double>& p_grid,
                                long long budget) {
  {
    std::vector<long long> budgets;
    for (long long b = 2; b <= budget; b *= 2) budgets.push_back(b);
    const auto base = ap_membership_verdict(w, p0, budgets);
    if (base.verdict == ApVerdict::NotInApEvidence) {
      throw std::domain_error(
          "stability_probe: base weight fails A_p membership at p0");
    }
  }
  StabilityReport rep;
  rep.eps_grid = eps_grid;
  rep.p_grid = p_grid;
  rep.in_ap.assign(eps_grid.size(), std::vector<bool>(p_grid.size(), false));
  std::vector<long long> budgets;
  for (long long b = 2; b <= budget; b *= 2) budgets.push_back(b);
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const Weight we = Weight::exponentiated(w, 1.0 + eps_grid[i]);
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
      rep.in_ap[i][j] =
          (ap_membership_verdict(we, p_grid[j], budgets).verdict ==
           ApVerdict::InApEvidence);
    }
  }

  // The open box around (p0, eps=0): every grid point within one grid step
  // of the center must carry InApEvidence.
  auto nearest = [](const std::vector<double>& g, double x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (std::abs(g[i] - x) < std::abs(g[best] - x)) best = i;
    }
    return best;
  };
  const std::size_t ie = nearest(eps_grid, 0.0);
  const std::size_t jp = nearest(p_grid, p0);
  rep.open_box_nonempty = true;
  for (std::size_t i = (ie == 0 ? 0 : ie - 1);
       i <= std::min(eps_grid.size() - 1, ie + 1); ++i) {
    for (std::size_t j = (jp == 0 ? 0 : jp - 1);
         j <= std::min(p_grid.size() - 1, jp + 1); ++j) {
      if (!rep.in_ap[i][j]) rep.open_box_nonempty = false;
    }
  }
  return rep;
}

}  // namespace llab
