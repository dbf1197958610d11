#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace assoc {

// Exact arithmetic substrate.  Every computational path in the library is
// integer or rational; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);

/// Canonical form: "3" for integers, "num/den" otherwise (den > 0, reduced).
std::string to_string(const Rational& v);

/// Accepts "3", "-3", "num/den".
Rational parse_rational(const std::string& s);

/// Exact decimal expansion with `digits` fractional digits, for export
/// formats that cannot carry fractions.  Truncates toward zero.
std::string decimal_string(const Rational& v, int digits);

}  // namespace assoc
