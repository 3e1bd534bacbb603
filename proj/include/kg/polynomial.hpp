#pragma once

#include <map>
#include <string>
#include <utility>

#include "kg/rational.hpp"

namespace kg {

/// Sparse polynomial over Q in the two symbols `a` and `g3`. Keys are
/// exponent pairs (power of a, power of g3); zero coefficients are never
/// stored.
class Polynomial {
 public:
  using Exponent = std::pair<int, int>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial a();
  static Polynomial g3();
  static Polynomial monomial(const Rational& c, int pow_a, int pow_g3);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int pow_a, int pow_g3) const;
  int degree_a() const;
  int degree_g3() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator-(const Polynomial& x) { return x * Rational(-1); }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(Polynomial x, const Rational& c) { return x *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial x) { return x *= c; }
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

  Rational evaluate(const Rational& a, const Rational& g3) const;
  /// Substitutes g3 = value, leaving a polynomial in a alone.
  Polynomial substitute_g3(const Rational& value) const;

  /// Canonical text: monomials in descending lexicographic order of
  /// (power of a, power of g3), e.g. "1/252*a^3 + 3/7*a*g3 - 16/63".
  std::string str() const;
  static Polynomial parse(const std::string& text);

 private:
  void put(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

}  // namespace kg
