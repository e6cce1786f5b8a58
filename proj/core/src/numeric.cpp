#include "balancegate/numeric.hpp"

#include <cctype>

#include "balancegate/errors.hpp"

namespace balancegate {

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ValidationError("expected an integer, got '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ValidationError("expected an integer, got '" + std::string(text) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace balancegate
