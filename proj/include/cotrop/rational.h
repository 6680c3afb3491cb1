#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cotrop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q". Throws Error(Parse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Exact dyadic approximation n / 2^bits (round to nearest).
Rational approximate_rational(double x, int bits = 30);

Rational floor_to_integer(const Rational& q);

using RationalPoint = std::vector<Rational>;

}  // namespace cotrop
