#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/rational.hpp"
#include "pascalgamma/ring.hpp"

namespace pascalgamma {

/// Power series in x known exactly through x^order. Binary operations
/// produce the smaller of the two operand orders.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  using coefficient_type = R;

  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, R::zero()) {}

  /// Coefficients beyond `coeffs` are zero; extra entries are dropped.
  TruncatedSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, R::zero());
  }

  static TruncatedSeries constant(const R& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return constant(R::one(), order); }
  /// c * x^power (zero if power exceeds the order).
  static TruncatedSeries monomial(const R& c, std::size_t power, std::size_t order) {
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }
  static TruncatedSeries x(std::size_t order) { return monomial(R::one(), 1, order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const R> coefficients() const { return coeffs_; }

  /// Lowers the order; asking for a higher order is an error because the
  /// missing coefficients are unknown.
  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw OrderTooLow("cannot raise series order from " + std::to_string(this->order()) +
                        " to " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
  }

  /// Multiplies by x^k, keeping the order.
  TruncatedSeries shifted_up(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t i = k; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
  }

  /// Divides by x^k; the order drops by k. The first k coefficients must vanish.
  TruncatedSeries shifted_down(std::size_t k) const {
    if (k > order()) throw OrderTooLow("shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i) {
      if (!coeffs_[i].is_zero()) throw CompositionDomain("series not divisible by x^k");
    }
    return TruncatedSeries(std::vector<R>(coeffs_.begin() + k, coeffs_.end()), order() - k);
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<S>(std::move(out), order());
  }

  TruncatedSeries scaled(const R& c) const {
    TruncatedSeries s = *this;
    for (auto& a : s.coeffs_) a = a * c;
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        s.coeffs_[i + j] = s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return s;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const auto inv0 = b.coeffs_[0].inverse();
    if (!inv0) throw NotAUnit("series constant term is not invertible");
    TruncatedSeries q(n);
    for (std::size_t i = 0; i <= n; ++i) {
      R acc = a.coeffs_[i];
      for (std::size_t j = 1; j <= i; ++j) {
        if (!b.coeffs_[j].is_zero()) acc = acc - b.coeffs_[j] * q.coeffs_[i - j];
      }
      q.coeffs_[i] = acc * *inv0;
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<R> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

template <CoefficientRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return a * b;
}

template <CoefficientRing R>
TruncatedSeries<R> series_div(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return a / b;
}

template <CoefficientRing R>
TruncatedSeries<R> series_pow(TruncatedSeries<R> base, std::size_t exponent) {
  auto result = TruncatedSeries<R>::one(base.order());
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// Evaluates a polynomial at a series by Horner's rule; any inner series is
/// allowed. Result order is inner's order.
template <CoefficientRing R>
TruncatedSeries<R> compose_polynomial(std::span<const R> outer, const TruncatedSeries<R>& inner) {
  auto acc = TruncatedSeries<R>(inner.order());
  for (std::size_t k = outer.size(); k-- > 0;) {
    acc = acc * inner + TruncatedSeries<R>::constant(outer[k], inner.order());
  }
  return acc;
}

/// outer(inner(x)); inner must have a zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (!inner[0].is_zero()) {
    throw CompositionDomain("inner series has a nonzero constant term; use compose_polynomial");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  return compose_polynomial(outer.truncated(n).coefficients(), inner.truncated(n));
}

/// Compositional inverse: g with f(g(x)) = x, solved one coefficient at a
/// time from the table of powers g^k.
template <CoefficientRing R>
TruncatedSeries<R> series_revert(const TruncatedSeries<R>& f) {
  const std::size_t n = f.order();
  if (n < 1) throw ReversionDomain("reversion needs order >= 1");
  if (!f[0].is_zero()) throw ReversionDomain("reversion needs f(0) = 0");
  const auto inv1 = f[1].inverse();
  if (!inv1) throw ReversionDomain("reversion needs an invertible x coefficient");

  // powers[k][m] = [x^m] g^k for k >= 1; [x^m] g^k = 0 for m < k.
  std::vector<std::vector<R>> powers(n + 1, std::vector<R>(n + 1, R::zero()));
  powers[1][1] = *inv1;
  for (std::size_t m = 2; m <= n; ++m) {
    for (std::size_t k = 2; k <= m; ++k) {
      R acc = R::zero();
      for (std::size_t j = 1; j + (k - 1) <= m; ++j) {
        if (powers[1][j].is_zero() || powers[k - 1][m - j].is_zero()) continue;
        acc = acc + powers[1][j] * powers[k - 1][m - j];
      }
      powers[k][m] = acc;
    }
    R err = R::zero();
    for (std::size_t k = 2; k <= m; ++k) {
      if (!f[k].is_zero()) err = err + f[k] * powers[k][m];
    }
    powers[1][m] = -(err * *inv1);
  }
  return TruncatedSeries<R>(powers[1], n);
}

/// exp(f) for f(0) = 0, from n e_n = sum_k k f_k e_{n-k}.
template <CoefficientRing R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f) {
  if (!f[0].is_zero()) throw ExpDomain("exp needs a zero constant term");
  const std::size_t n = f.order();
  std::vector<R> e(n + 1, R::zero());
  e[0] = R::one();
  for (std::size_t m = 1; m <= n; ++m) {
    R acc = R::zero();
    for (std::size_t k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc = acc + R(Rational(static_cast<long>(k))) * f[k] * e[m - k];
    }
    e[m] = acc * R(Rational(1, static_cast<long>(m)));
  }
  return TruncatedSeries<R>(std::move(e), n);
}

/// Catalan generating function c(x) through x^order, via c = 1 + x c^2.
template <CoefficientRing R = Rational>
TruncatedSeries<R> catalan_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    Rational acc;
    for (std::size_t i = 0; i < m; ++i) acc += c[i] * c[m - 1 - i];
    c[m] = acc;
  }
  std::vector<R> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(R(v));
  return TruncatedSeries<R>(std::move(out), order);
}

/// Embeds a rational series into another coefficient ring.
template <CoefficientRing R>
TruncatedSeries<R> lift(const RationalSeries& s) {
  return s.map([](const Rational& q) { return R(q); });
}

}  // namespace pascalgamma
