#include "hypsub/rational.hpp"

#include "hypsub/error.hpp"

#include <charconv>

namespace hypsub {

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t floor_int(const Rational& q) {
  auto n = q.numerator();
  auto d = q.denominator();  // boost keeps d > 0
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil_int(const Rational& q) {
  auto f = floor_int(q);
  return Rational(f) == q ? f : f + 1;
}

}  // namespace hypsub
