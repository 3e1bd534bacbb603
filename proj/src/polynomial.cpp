#include <cctype>

#include "kg/lattice.hpp"
#include "kg/polynomial.hpp"

namespace kg {

Polynomial::Polynomial(const Rational& c) { put({0, 0}, c); }

Polynomial Polynomial::a() { return monomial(1, 1, 0); }
Polynomial Polynomial::g3() { return monomial(1, 0, 1); }

Polynomial Polynomial::monomial(const Rational& c, int pow_a, int pow_g3) {
  if (pow_a < 0 || pow_g3 < 0) throw InvalidInput("negative exponent in polynomial");
  Polynomial p;
  p.put({pow_a, pow_g3}, c);
  return p;
}

void Polynomial::put(const Exponent& e, const Rational& c) {
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

Rational Polynomial::coefficient(int pow_a, int pow_g3) const {
  auto it = terms_.find({pow_a, pow_g3});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree_a() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int Polynomial::degree_g3() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) put(e, coefficient(e.first, e.second) + c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) put(e, coefficient(e.first, e.second) - c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  Polynomial r;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      const Polynomial::Exponent e{ex.first + ey.first, ex.second + ey.second};
      r.put(e, r.coefficient(e.first, e.second) + cx * cy);
    }
  }
  return r;
}

namespace {

Rational power_of(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Rational Polynomial::evaluate(const Rational& a, const Rational& g3) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * power_of(a, e.first) * power_of(g3, e.second);
  return s;
}

Polynomial Polynomial::substitute_g3(const Rational& value) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r += monomial(c * power_of(value, e.second), e.first, 0);
  return r;
}

namespace {

std::string power(const char* name, int k) {
  if (k == 0) return "";
  return k == 1 ? name : std::string(name) + "^" + std::to_string(k);
}

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string vars = power("a", e.first);
    const std::string g = power("g3", e.second);
    if (!g.empty()) vars += (vars.empty() ? "" : "*") + g;
    if (vars.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += vars;
    else
      out += to_string(mag) + "*" + vars;
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : text_(t) {}

  Polynomial parse() {
    Polynomial result;
    skip();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    result += term() * Rational(sign);
    skip();
    while (pos_ < text_.size()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      result += term() * Rational(op == '-' ? -1 : 1);
      skip();
    }
    return result;
  }

 private:
  Polynomial term() {
    Polynomial t = factor();
    skip();
    while (peek() == '*') {
      get();
      t = t * factor();
      skip();
    }
    return t;
  }

  Polynomial factor() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        get();
        skip();
        num += "/" + digits();
      }
      return Polynomial(parse_rational(num));
    }
    if (text_.compare(pos_, 2, "g3") == 0) {
      pos_ += 2;
      return Polynomial::monomial(1, 0, exponent());
    }
    if (peek() == 'a') {
      ++pos_;
      return Polynomial::monomial(1, exponent(), 0);
    }
    fail("expected a number, 'a' or 'g3'");
    return {};
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    get();
    skip();
    return std::stoi(digits());
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + text_ + "' at position " + std::to_string(pos_) +
                       ": " + why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace kg
