#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hypsub {

// Unbounded rationals for norm ratios and bound constants.
using Ratio = boost::multiprecision::cpp_rational;

/// Exact lengths, radii and tolerances. Values stay small (half-integers in
/// practice) so 64-bit numerator/denominator is ample.
using Rational = boost::rational<std::int64_t>;

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" or a JSON-ish integer literal.
Rational parse_rational(std::string_view text);

std::int64_t floor_int(const Rational& q);
std::int64_t ceil_int(const Rational& q);

// boost::rational's mixed-type operator== recurses forever under C++20's
// reversed-operand rewriting. These exact-match overloads take precedence
// inside this namespace; elsewhere compare against Rational(n).
inline bool operator==(const Rational& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const Rational& a, int b) { return a == static_cast<std::int64_t>(b); }

inline Rational abs_diff(const Rational& a, const Rational& b) {
  return a > b ? a - b : b - a;
}

}  // namespace hypsub
