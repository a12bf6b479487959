#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pascalgamma/rational.hpp"

namespace pascalgamma {

/// Dense polynomial in one marker variable over the rationals. The
/// coefficient list never has a trailing zero; the zero polynomial is empty.
class YPolynomial {
 public:
  YPolynomial() = default;
  YPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  YPolynomial(long constant) : YPolynomial(Rational(constant)) {}  // NOLINT
  YPolynomial(int constant) : YPolynomial(Rational(constant)) {}   // NOLINT
  explicit YPolynomial(std::vector<Rational> coefficients);
  YPolynomial(std::initializer_list<Rational> coefficients)
      : YPolynomial(std::vector<Rational>(coefficients)) {}

  static YPolynomial zero() { return {}; }
  static YPolynomial one() { return YPolynomial(Rational(1)); }
  /// The marker itself.
  static YPolynomial y() { return YPolynomial(std::vector<Rational>{0, 1}); }
  static YPolynomial monomial(const Rational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of y^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Units are the nonzero constants.
  std::optional<YPolynomial> inverse() const;

  Rational evaluate(const Rational& y) const;
  YPolynomial scaled(const Rational& c) const;
  /// p(c*y).
  YPolynomial dilated(const Rational& c) const;
  YPolynomial monic() const;

  /// Euclidean division; throws NotAUnit for a zero divisor.
  std::pair<YPolynomial, YPolynomial> divmod(const YPolynomial& divisor) const;

  /// Canonical form "c0 + c1*y + c2*y^2"; zero terms omitted, minus signs
  /// folded into the separators.
  std::string to_string(std::string_view var = "y") const;

  YPolynomial& operator+=(const YPolynomial& rhs);
  YPolynomial& operator-=(const YPolynomial& rhs);
  YPolynomial& operator*=(const YPolynomial& rhs) { return *this = *this * rhs; }

  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator-(const YPolynomial& a);
  friend bool operator==(const YPolynomial& a, const YPolynomial& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const YPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
YPolynomial gcd(YPolynomial a, YPolynomial b);

/// Renders a term list "c0 + c1*v + ..." shared by the polynomial printers.
std::string render_polynomial(std::span<const Rational> coeffs, std::string_view var);

}  // namespace pascalgamma
