#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kcut {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "7", "3/4", "0.125". Throws InvalidInput on anything else,
// including negative values.
Rational parse_rational(std::string_view text);

// Canonical form: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& r);

// Smallest integer >= r, for r >= 0. Throws InvalidInput if it does not
// fit in 63 bits.
std::int64_t ceil_to_int64(const Rational& r);

bool is_integral(const Rational& r);
std::int64_t to_int64(const Rational& r);  // r must be integral
double to_double(const Rational& r);

}  // namespace kcut
