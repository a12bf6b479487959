#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "pascalgamma/rational.hpp"
#include "pascalgamma/ypolynomial.hpp"

namespace pascalgamma {

/// Element of the field Q(y): num/den in lowest terms with a monic
/// denominator.
class YRationalFunction {
 public:
  YRationalFunction() : den_(YPolynomial::one()) {}
  YRationalFunction(const Rational& c) : num_(c), den_(YPolynomial::one()) {}  // NOLINT
  YRationalFunction(long c) : YRationalFunction(Rational(c)) {}  // NOLINT
  YRationalFunction(int c) : YRationalFunction(Rational(c)) {}   // NOLINT
  YRationalFunction(const YPolynomial& p) : num_(p), den_(YPolynomial::one()) {}  // NOLINT
  /// Throws NotAUnit when den is zero.
  YRationalFunction(YPolynomial num, YPolynomial den);

  static YRationalFunction zero() { return {}; }
  static YRationalFunction one() { return YRationalFunction(Rational(1)); }
  static YRationalFunction y() { return YRationalFunction(YPolynomial::y()); }

  const YPolynomial& numerator() const { return num_; }
  const YPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  std::optional<YRationalFunction> inverse() const;

  /// Throws NotAUnit when the denominator vanishes at y.
  Rational evaluate(const Rational& y) const;

  /// "p" when the denominator is 1, "(p)/(q)" otherwise.
  std::string to_string(std::string_view var = "y") const;

  friend YRationalFunction operator+(const YRationalFunction& a, const YRationalFunction& b);
  friend YRationalFunction operator-(const YRationalFunction& a, const YRationalFunction& b);
  friend YRationalFunction operator*(const YRationalFunction& a, const YRationalFunction& b);
  friend YRationalFunction operator/(const YRationalFunction& a, const YRationalFunction& b);
  friend YRationalFunction operator-(const YRationalFunction& a) {
    YRationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  YRationalFunction& operator+=(const YRationalFunction& rhs) { return *this = *this + rhs; }
  YRationalFunction& operator-=(const YRationalFunction& rhs) { return *this = *this - rhs; }
  YRationalFunction& operator*=(const YRationalFunction& rhs) { return *this = *this * rhs; }

  friend bool operator==(const YRationalFunction& a, const YRationalFunction& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const YRationalFunction& f) {
    return os << f.to_string();
  }

 private:
  struct Normalized {};
  YRationalFunction(YPolynomial num, YPolynomial den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  YPolynomial num_;
  YPolynomial den_;
};

}  // namespace pascalgamma
