#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vrk {

// All integer arithmetic in the engine is unbounded; all scale comparisons
// are exact rational. No floating point touches any mathematical value.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "-3", "0.375" (finite decimals) exactly. Exponent notation
// and anything else is rejected with std::invalid_argument.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

} // namespace vrk
