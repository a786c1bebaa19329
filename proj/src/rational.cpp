#include "kcut/rational.hpp"

#include <cctype>
#include <limits>

#include "kcut/error.hpp"

namespace kcut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    BigInt d = parse_digits(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_digits(num), d);
  }
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw InvalidInput("malformed decimal '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole);
    return Rational(w * scale + parse_digits(frac), scale);
  }
  if (!all_digits(text)) throw InvalidInput("malformed number '" + std::string(text) + "'");
  return Rational(parse_digits(text));
}

std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t ceil_to_int64(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (num < 0) throw InvalidInput("ceil_to_int64 expects a nonnegative value");
  BigInt c = (num + den - 1) / den;
  if (c > std::numeric_limits<std::int64_t>::max())
    throw InvalidInput("value " + c.str() + " exceeds 63 bits");
  return static_cast<std::int64_t>(c);
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integral(r)) throw InvalidInput("expected an integer, got " + format_rational(r));
  BigInt num = boost::multiprecision::numerator(r);
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput("integer " + num.str() + " exceeds 63 bits");
  return static_cast<std::int64_t>(num);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace kcut
