#include "llab/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace llab {

FiniteSequence::FiniteSequence(long long offset, std::vector<cplx> values)
    : offset_(offset), values_(std::move(values)) {
  for (const cplx& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::domain_error("FiniteSequence: non-finite entry");
    }
  }
  normalize();
}

void FiniteSequence::normalize() {
  std::size_t lo = 0;
  while (lo < values_.size() && values_[lo] == cplx{0.0, 0.0}) ++lo;
  if (lo == values_.size()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  std::size_t hi = values_.size();
  while (hi > lo && values_[hi - 1] == cplx{0.0, 0.0}) --hi;
  if (lo > 0 || hi < values_.size()) {
    values_ = std::vector<cplx>(values_.begin() + static_cast<long>(lo),
                                values_.begin() + static_cast<long>(hi));
    offset_ += static_cast<long long>(lo);
  }
}

FiniteSequence FiniteSequence::unit(long long j) {
  return FiniteSequence(j, {cplx{1.0, 0.0}});
}

double FiniteSequence::max_abs() const {
  double m = 0.0;
  for (const cplx& z : values_) m = std::max(m, std::abs(z));
  return m;
}

std::vector<double> FiniteSequence::magnitudes() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const cplx& z : values_) out.push_back(std::abs(z));
  return out;
}

FiniteSequence& FiniteSequence::operator*=(cplx c) {
  for (cplx& z : values_) z *= c;
  normalize();
  return *this;
}

FiniteSequence operator+(const FiniteSequence& a, const FiniteSequence& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long long lo = std::min(a.first(), b.first());
  const long long hi = std::max(a.last(), b.last());
  std::vector<cplx> vals(static_cast<std::size_t>(hi - lo + 1));
  for (long long k = lo; k <= hi; ++k) {
    vals[static_cast<std::size_t>(k - lo)] = a.at(k) + b.at(k);
  }
  return FiniteSequence(lo, std::move(vals));
}

FiniteSequence operator-(const FiniteSequence& a, const FiniteSequence& b) {
  FiniteSequence nb = b;
  nb *= cplx{-1.0, 0.0};
  return a + nb;
}

FiniteSequence reflect(const FiniteSequence& f) {
  if (f.is_zero()) return f;
  std::vector<cplx> vals(f.values().rbegin(), f.values().rend());
  return FiniteSequence(-f.last(), std::move(vals));
}

FiniteSequence modulate(double x, const FiniteSequence& f) {
  if (f.is_zero()) return f;
  std::vector<cplx> vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double jx = static_cast<double>(f.offset() + static_cast<long long>(i)) * x;
    vals[i] *= cplx{std::cos(jx), std::sin(jx)};
  }
  return FiniteSequence(f.offset(), std::move(vals));
}

std::size_t distribution_function(const FiniteSequence& f, double lambda) {
  if (!(lambda >= 0.0)) {
    throw std::domain_error("distribution_function: lambda must be >= 0");
  }
  std::size_t count = 0;
  for (const cplx& z : f.values()) {
    if (std::abs(z) > lambda) ++count;
  }
  return count;
}

std::vector<double> decreasing_rearrangement(const FiniteSequence& f) {
  std::vector<double> mags = f.magnitudes();
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  while (!mags.empty() && mags.back() == 0.0) mags.pop_back();
  return mags;
}

cplx dot(const FiniteSequence& f, const FiniteSequence& g) {
  if (f.is_zero() || g.is_zero()) return {0.0, 0.0};
  const long long lo = std::max(f.first(), g.first());
  const long long hi = std::min(f.last(), g.last());
  cplx s{0.0, 0.0};
  for (long long k = lo; k <= hi; ++k) s += f.at(k) * g.at(k);
  return s;
}

}  // namespace llab
