#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kg {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "num/den" or an integer. Throws InvalidInput on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace kg
