#pragma once

#include <cstddef>
#include <vector>

#include "llab/numerics.hpp"

namespace llab {

// Finitely supported complex sequence on Z. Entries are stored as a
// contiguous block values()[i] = f_{offset+i}; everything outside is zero.
// After normalization the first and last stored entries are nonzero, and the
// zero sequence is canonically (offset 0, empty values).
class FiniteSequence {
 public:
  FiniteSequence() = default;
  FiniteSequence(long long offset, std::vector<cplx> values);

  static FiniteSequence unit(long long j);  // e_j

  bool is_zero() const { return values_.empty(); }
  long long first() const { return offset_; }
  long long last() const {
    return offset_ + static_cast<long long>(values_.size()) - 1;
  }
  std::size_t support_size() const { return values_.size(); }
  long long offset() const { return offset_; }
  const std::vector<cplx>& values() const { return values_; }

  cplx at(long long k) const {
    if (is_zero() || k < offset_ || k > last()) return {0.0, 0.0};
    return values_[static_cast<std::size_t>(k - offset_)];
  }

  double max_abs() const;
  std::vector<double> magnitudes() const;  // |f_k| over the stored block

  FiniteSequence& operator*=(cplx c);
  friend FiniteSequence operator+(const FiniteSequence& a,
                                  const FiniteSequence& b);
  friend FiniteSequence operator-(const FiniteSequence& a,
                                  const FiniteSequence& b);
  friend FiniteSequence operator*(cplx c, FiniteSequence f) {
    f *= c;
    return f;
  }

 private:
  void normalize();

  long long offset_ = 0;
  std::vector<cplx> values_;
};

// (reflect f)_k = f_{-k}; an involution.
FiniteSequence reflect(const FiniteSequence& f);

// Modulation D_x: f_j -> e^{ijx} f_j. Entrywise phase twist, so it is an
// isometry in every lattice norm.
FiniteSequence modulate(double x, const FiniteSequence& f);

// d_f(lambda) = m{k : |f_k| > lambda}. Throws std::domain_error for
// negative lambda.
std::size_t distribution_function(const FiniteSequence& f, double lambda);

// f*(n) = inf{lambda >= 0 : d_f(lambda) <= n-1}: the magnitudes sorted in
// decreasing order, trailing zeros dropped.
std::vector<double> decreasing_rearrangement(const FiniteSequence& f);

// sum_k f_k g_k (no conjugation; the associate-norm pairing)
cplx dot(const FiniteSequence& f, const FiniteSequence& g);

}  // namespace llab
