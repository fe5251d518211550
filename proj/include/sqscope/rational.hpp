#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqscope {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Non-negative `value` rounded half-up to thousandths (0.5215 -> 522).
std::int64_t round_thousandths(const Rational& value);

/// ".781" for values below one, "1.250" otherwise.
std::string format_3dp(std::int64_t thousandths);
/// Always with the leading digit: "0.781".
std::string format_3dp_padded(std::int64_t thousandths);

std::string to_string(const Rational& value);

}  // namespace sqscope
