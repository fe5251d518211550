#include "sqscope/rational.hpp"

#include <cstdio>

#include "sqscope/errors.hpp"

namespace sqscope {

std::int64_t round_thousandths(const Rational& value) {
  if (value < 0) throw DomainError("round_thousandths: negative value");
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt rounded = (num * 2000 + den) / (den * 2);
  return rounded.convert_to<std::int64_t>();
}

std::string format_3dp_padded(std::int64_t thousandths) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%03lld",
                static_cast<long long>(thousandths / 1000),
                static_cast<long long>(thousandths % 1000));
  return buf;
}

std::string format_3dp(std::int64_t thousandths) {
  std::string s = format_3dp_padded(thousandths);
  if (thousandths < 1000) s.erase(0, 1);
  return s;
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace sqscope
