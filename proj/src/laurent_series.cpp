#include <algorithm>

#include "kg/laurent_series.hpp"

namespace kg {

namespace {

int shift_order(int order, int by) {
  if (order >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return order + by;
}

}  // namespace

LaurentSeries::LaurentSeries(int lead, std::vector<Polynomial> coeffs, int order)
    : lead_(lead), coeffs_(std::move(coeffs)), order_(std::min(order, kExact)) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Polynomial& c, int k, int order) {
  return LaurentSeries(k, {c}, order);
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(0, {}, order); }

void LaurentSeries::normalize() {
  // Drop coefficients at or past the order, then leading and trailing zeros.
  if (!exact()) {
    const long keep = static_cast<long>(order_) - lead_;
    if (keep < static_cast<long>(coeffs_.size())) coeffs_.resize(std::max(0L, keep));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    lead_ += static_cast<int>(first);
  }
  if (coeffs_.empty() && !exact()) lead_ = order_;
}

Polynomial LaurentSeries::coefficient(int k) const {
  if (k >= order_)
    throw SeriesUnderflow("coefficient of s^" + std::to_string(k) +
                          " is beyond the truncation order " + std::to_string(order_));
  if (k < lead_ || k > last()) return {};
  return coeffs_[static_cast<std::size_t>(k - lead_)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries r = *this;
  r.order_ = std::min(order_, order);
  r.normalize();
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const int order = std::min(order_, o.order_);
  if (o.is_zero()) {
    order_ = order;
    normalize();
    return *this;
  }
  if (is_zero()) {
    *this = o;
    order_ = order;
    normalize();
    return *this;
  }
  const int lo = std::min(lead_, o.lead_);
  const int hi = std::max(last(), o.last());
  std::vector<Polynomial> c(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lead_; k <= last(); ++k) c[k - lo] += coeffs_[k - lead_];
  for (int k = o.lead_; k <= o.last(); ++k) c[k - lo] += o.coeffs_[k - o.lead_];
  *this = LaurentSeries(lo, std::move(c), order);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  return *this += Polynomial(-1) * o;
}

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  // Unknown terms of x start at x.order and meet y's lowest power, and
  // vice versa. A zero factor contributes its order as the lowest power.
  const int ly = y.is_zero() ? y.order_ : y.lead_;
  const int lx = x.is_zero() ? x.order_ : x.lead_;
  const int order = std::min(shift_order(x.order_, ly), shift_order(y.order_, lx));
  if (x.is_zero() || y.is_zero()) return LaurentSeries::zero(order);
  const int lead = x.lead_ + y.lead_;
  if (order < lead)
    throw SeriesUnderflow("product truncation order " + std::to_string(order) +
                          " is below its leading exponent " + std::to_string(lead));
  const int hi = std::min(x.last() + y.last(), order - 1);
  std::vector<Polynomial> c(static_cast<std::size_t>(std::max(0, hi - lead + 1)));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      const std::size_t k = i + j;
      if (static_cast<int>(k) + lead > hi) break;
      c[k] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return LaurentSeries(lead, std::move(c), order);
}

LaurentSeries operator*(const Polynomial& c, const LaurentSeries& x) {
  LaurentSeries r = x;
  for (auto& v : r.coeffs_) v = c * v;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  const int order = shift_order(order_, -1);
  if (is_zero()) return zero(order);
  if (order < lead_ - 1)
    throw SeriesUnderflow("derivative leaves no known coefficients");
  std::vector<Polynomial> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i] = coeffs_[i] * Rational(lead_ + static_cast<int>(i));
  return LaurentSeries(lead_ - 1, std::move(c), order);
}

bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.order_ != y.order_) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.lead_ == y.lead_ && x.coeffs_ == y.coeffs_;
}

std::string LaurentSeries::str() const {
  std::string out;
  for (int k = lead_; k <= last(); ++k) {
    const Polynomial& c = coeffs_[k - lead_];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string s = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    const std::string cs = c.terms().size() > 1 ? "(" + c.str() + ")" : c.str();
    if (s.empty())
      out += cs;
    else if (c == Polynomial(1))
      out += s;
    else
      out += cs + "*" + s;
  }
  if (!exact()) out += (out.empty() ? "" : " + ") + std::string("O(s^") + std::to_string(order_) + ")";
  return out.empty() ? "0" : out;
}

}  // namespace kg
