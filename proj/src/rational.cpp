#include "pascalgamma/rational.hpp"

#include <cctype>

#include "pascalgamma/errors.hpp"

namespace pascalgamma {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw NotAUnit("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::optional<Rational> Rational::inverse() const {
  if (is_zero()) return std::nullopt;
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    const auto inv = inverse();
    if (!inv) throw NotAUnit("zero raised to a negative power");
    return inv->pow(-exponent);
  }
  Rational base = *this;
  Rational result = one();
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw NotAUnit("division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace pascalgamma
