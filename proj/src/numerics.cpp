#include "llab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace llab {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(kTwoPi * u2);
  return r * std::cos(kTwoPi * u2);
}

void LogSumAccumulator::add_log(double log_term) {
  ++count_;
  if (log_term == -std::numeric_limits<double>::infinity()) return;
  if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  }
}

double LogSumAccumulator::log_sum() const {
  if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
  return max_ + std::log(sum_);
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth,
                          int min_panels) {
  if (a == b) return 0.0;
  // Seed with enough panels that the refinement test sees the oscillation;
  // a single Simpson estimate can alias a fast mode to zero error.
  const int panels = std::clamp(min_panels, 2, 1 << 14);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    const double hi = lo + h;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fmid = f(mid);
    const double whole = simpson(lo, flo, hi, fhi, fmid);
    total += adaptive_step(f, lo, flo, hi, fhi, mid, fmid, whole,
                           tol / panels, max_depth);
  }
  return total;
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_iter) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LinearFit fit;
  fit.points = static_cast<int>(x.size());
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

double l2_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double lp_norm(std::span<const cplx> v, double p) {
  if (p <= 0.0) throw std::invalid_argument("lp_norm: p must be positive");
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const cplx& z : v) s += std::pow(std::abs(z) / m, p);
  return m * std::pow(s, 1.0 / p);
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mu;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < n;
             i += static_cast<std::size_t>(workers)) {
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace llab
