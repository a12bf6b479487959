#include "pascalgamma/yrational.hpp"

#include <utility>

#include "pascalgamma/errors.hpp"

namespace pascalgamma {

YRationalFunction::YRationalFunction(YPolynomial num, YPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw NotAUnit("rational function with zero denominator");
  normalize();
}

void YRationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = YPolynomial::one();
    return;
  }
  if (!den_.is_constant()) {
    const YPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead_inv = *den_.leading().inverse();
  if (!lead_inv.is_one()) {
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
  }
}

std::optional<YRationalFunction> YRationalFunction::inverse() const {
  if (is_zero()) return std::nullopt;
  return YRationalFunction(den_, num_);
}

Rational YRationalFunction::evaluate(const Rational& y) const {
  const Rational d = den_.evaluate(y);
  if (d.is_zero()) throw NotAUnit("rational function has a pole at y = " + y.to_string());
  return num_.evaluate(y) / d;
}

std::string YRationalFunction::to_string(std::string_view var) const {
  if (den_ == YPolynomial::one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

YRationalFunction operator+(const YRationalFunction& a, const YRationalFunction& b) {
  if (a.den_ == b.den_) return YRationalFunction(a.num_ + b.num_, a.den_);
  return YRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

YRationalFunction operator-(const YRationalFunction& a, const YRationalFunction& b) {
  return a + (-b);
}

YRationalFunction operator*(const YRationalFunction& a, const YRationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    // Both denominators are 1 after normalization.
    return YRationalFunction(a.num_ * b.num_, YPolynomial::one(),
                             YRationalFunction::Normalized{});
  }
  return YRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

YRationalFunction operator/(const YRationalFunction& a, const YRationalFunction& b) {
  const auto inv = b.inverse();
  if (!inv) throw NotAUnit("division by the zero rational function");
  return a * *inv;
}

}  // namespace pascalgamma
