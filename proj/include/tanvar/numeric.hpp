#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tanvar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value)
{
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// C(n, k) exactly; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

} // namespace tanvar
