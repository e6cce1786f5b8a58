#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace balancegate {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Number of 1's in one full period of an output sequence.
using OnesCount = BigInt;

inline BigInt pow2(std::size_t exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Renders p/q in lowest terms ("0/1" for zero).
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws ValidationError otherwise.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

}  // namespace balancegate
