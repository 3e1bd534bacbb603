#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kg/polynomial.hpp"

namespace kg {

/// Raised when a series operation leaves no known coefficients, or when a
/// coefficient at or beyond the truncation order is requested.
class SeriesUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series sum_{k >= lead} c_k s^k with polynomial
/// coefficients. Exponents >= order are unknown. Exact series (finite sums)
/// carry order kExact.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;

  LaurentSeries() = default;
  /// Coefficients c[i] of s^(lead + i), known below `order`.
  LaurentSeries(int lead, std::vector<Polynomial> coeffs, int order = kExact);

  static LaurentSeries monomial(const Polynomial& c, int k, int order = kExact);
  static LaurentSeries zero(int order = kExact);

  int lead() const { return lead_; }
  int order() const { return order_; }
  bool exact() const { return order_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of s^k; throws SeriesUnderflow when k >= order.
  Polynomial coefficient(int k) const;
  /// Exponent of the highest stored coefficient, or lead - 1 when zero.
  int last() const { return lead_ + static_cast<int>(coeffs_.size()) - 1; }

  LaurentSeries truncated(int order) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries x, const LaurentSeries& y) { return x += y; }
  friend LaurentSeries operator-(LaurentSeries x, const LaurentSeries& y) { return x -= y; }
  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator*(const Polynomial& c, const LaurentSeries& x);

  LaurentSeries derivative() const;

  /// Equality of all known coefficients and of the truncation order.
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y);

  /// e.g. "s^-1 + (2/3*a)*s + O(s^5)".
  std::string str() const;

 private:
  void normalize();
  int lead_ = 0;
  std::vector<Polynomial> coeffs_;
  int order_ = kExact;
};

}  // namespace kg
