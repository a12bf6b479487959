#include "pascalgamma/ypolynomial.hpp"

#include <algorithm>

#include "pascalgamma/errors.hpp"

namespace pascalgamma {

YPolynomial::YPolynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

YPolynomial::YPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

YPolynomial YPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return YPolynomial(std::move(coeffs));
}

void YPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational YPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

std::optional<YPolynomial> YPolynomial::inverse() const {
  if (coeffs_.size() != 1) return std::nullopt;
  return YPolynomial(*coeffs_.front().inverse());
}

Rational YPolynomial::evaluate(const Rational& y) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

YPolynomial YPolynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  YPolynomial r = *this;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

YPolynomial YPolynomial::dilated(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= c;
  }
  return YPolynomial(std::move(out));
}

YPolynomial YPolynomial::monic() const {
  if (is_zero()) return {};
  return scaled(*leading().inverse());
}

std::pair<YPolynomial, YPolynomial> YPolynomial::divmod(const YPolynomial& divisor) const {
  if (divisor.is_zero()) throw NotAUnit("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size();
  if (rem.size() < dd) return {YPolynomial(), *this};
  std::vector<Rational> quot(rem.size() - dd + 1);
  const Rational lead_inv = *divisor.leading().inverse();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + dd - 1] * lead_inv;
    quot[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dd; ++j) rem[i + j] -= q * divisor.coeffs_[j];
  }
  return {YPolynomial(std::move(quot)), YPolynomial(std::move(rem))};
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return YPolynomial(std::move(out));
}

YPolynomial operator-(const YPolynomial& a) {
  YPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

YPolynomial gcd(YPolynomial a, YPolynomial b) {
  while (!b.is_zero()) {
    auto rem = a.divmod(b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

std::string render_polynomial(std::span<const Rational> coeffs, std::string_view var) {
  std::string out;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    const Rational& c = coeffs[p];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (p == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.to_string();
      out += '*';
    }
    out += var;
    if (p > 1) {
      out += '^';
      out += std::to_string(p);
    }
  }
  return out.empty() ? "0" : out;
}

std::string YPolynomial::to_string(std::string_view var) const {
  return render_polynomial(coeffs_, var);
}

}  // namespace pascalgamma
