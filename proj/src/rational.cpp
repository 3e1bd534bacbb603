#include <regex>

#include "kg/lattice.hpp"
#include "kg/rational.hpp"

namespace kg {

std::string to_string(const Rational& r) {
  const auto num = numerator(r);
  const auto den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw InvalidInput("not a rational number: '" + text + "'");
  const boost::multiprecision::cpp_int num(m[1].str());
  boost::multiprecision::cpp_int den(1);
  if (m[2].matched) den = boost::multiprecision::cpp_int(m[2].str());
  if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace kg
