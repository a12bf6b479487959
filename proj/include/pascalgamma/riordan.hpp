#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pascalgamma/combinatorics.hpp"
#include "pascalgamma/errors.hpp"
#include "pascalgamma/gamma.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/triangle.hpp"

namespace pascalgamma {

enum class RiordanKind { Ordinary, Exponential, Stretched };

std::string to_string(RiordanKind kind);

/// A Riordan array given by its two defining series. For the stretched
/// kind `f` plays the role of phi(x) = phi_2 x^2 + ...
template <CoefficientRing R>
class BasicRiordanSpec {
 public:
  BasicRiordanSpec(RiordanKind kind, TruncatedSeries<R> g, TruncatedSeries<R> f)
      : kind_(kind), g_(std::move(g)), f_(std::move(f)) {
    if (!(g_[0] == R::one())) throw InvalidSpec("Riordan array needs g(0) = 1");
    if (!f_[0].is_zero()) throw InvalidSpec("Riordan array needs f(0) = 0");
    if (kind_ == RiordanKind::Stretched) {
      if (f_.order() >= 1 && !f_[1].is_zero()) {
        throw InvalidSpec("stretched Riordan array needs [x^1] phi = 0");
      }
    } else if (f_.order() < 1 || f_[1].is_zero()) {
      throw InvalidSpec("Riordan array needs a nonzero x coefficient in f");
    }
  }

  RiordanKind kind() const { return kind_; }
  const TruncatedSeries<R>& g() const { return g_; }
  const TruncatedSeries<R>& f() const { return f_; }
  std::size_t order() const { return std::min(g_.order(), f_.order()); }

 private:
  RiordanKind kind_;
  TruncatedSeries<R> g_;
  TruncatedSeries<R> f_;
};

using RiordanSpec = BasicRiordanSpec<Rational>;

namespace detail {

template <CoefficientRing R>
void require_order(const BasicRiordanSpec<R>& spec, std::size_t rows) {
  if (rows > 0 && spec.order() + 1 < rows) {
    throw OrderTooLow("series order " + std::to_string(spec.order()) + " too low for " +
                      std::to_string(rows) + " rows");
  }
}

/// columns[k][n] = [x^n] g f^k for n, k < rows.
template <CoefficientRing R>
std::vector<std::vector<R>> riordan_columns(const BasicRiordanSpec<R>& spec, std::size_t rows) {
  const std::size_t n = rows - 1;
  auto power = spec.g().truncated(n);
  const auto f = spec.f().truncated(n);
  std::vector<std::vector<R>> cols;
  cols.reserve(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    cols.emplace_back(power.coefficients().begin(), power.coefficients().end());
    if (k + 1 < rows) power = power * f;
  }
  return cols;
}

}  // namespace detail

/// Entry (n, k) = [x^n] g f^k (phi in place of f for a stretched array).
template <CoefficientRing R>
BasicTriangle<R> ordinary_triangle(const BasicRiordanSpec<R>& spec, std::size_t rows) {
  if (spec.kind() == RiordanKind::Exponential) {
    throw UnsupportedKind("ordinary_triangle called with an exponential spec");
  }
  if (rows == 0) return {};
  detail::require_order(spec, rows);
  const auto cols = detail::riordan_columns(spec, rows);
  std::vector<std::vector<R>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[n].push_back(cols[k][n]);
  }
  return BasicTriangle<R>(std::move(out));
}

/// Entry (n, k) = (n!/k!) [x^n] g f^k.
template <CoefficientRing R>
BasicTriangle<R> exponential_triangle(const BasicRiordanSpec<R>& spec, std::size_t rows) {
  if (spec.kind() != RiordanKind::Exponential) {
    throw UnsupportedKind("exponential_triangle needs an exponential spec");
  }
  if (rows == 0) return {};
  detail::require_order(spec, rows);
  const auto cols = detail::riordan_columns(spec, rows);
  std::vector<std::vector<R>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational scale(factorial(static_cast<long>(n)), factorial(static_cast<long>(k)));
      out[n].push_back(cols[k][n] * R(scale));
    }
  }
  return BasicTriangle<R>(std::move(out));
}

template <CoefficientRing R>
BasicTriangle<R> riordan_triangle(const BasicRiordanSpec<R>& spec, std::size_t rows) {
  return spec.kind() == RiordanKind::Exponential ? exponential_triangle(spec, rows)
                                                 : ordinary_triangle(spec, rows);
}

// ---------------------------------------------------------------------------
// Parameterized families. `r` may be a number or, over YPolynomial, the
// marker itself, which yields the symbolic-r rows.

template <CoefficientRing R>
TruncatedSeries<R> geometric_series(const R& ratio, std::size_t order) {
  std::vector<R> c(order + 1);
  R p = R::one();
  for (std::size_t i = 0; i <= order; ++i) {
    c[i] = p;
    p = p * ratio;
  }
  return TruncatedSeries<R>(std::move(c), order);
}

/// (1/(1-x), x(1+rx)/(1-x)).
template <CoefficientRing R>
BasicRiordanSpec<R> pascal_like_spec(const R& r, std::size_t order) {
  const auto g = geometric_series(R::one(), order);
  const auto num = TruncatedSeries<R>(std::vector<R>{R::zero(), R::one(), r}, order);
  return BasicRiordanSpec<R>(RiordanKind::Ordinary, g, num * g);
}

/// (1/(1+x), -x(1+rx)/(1+x)).
template <CoefficientRing R>
BasicRiordanSpec<R> signed_pascal_like_spec(const R& r, std::size_t order) {
  const auto g = geometric_series(-R::one(), order);
  const auto num = TruncatedSeries<R>(std::vector<R>{R::zero(), -R::one(), -r}, order);
  return BasicRiordanSpec<R>(RiordanKind::Ordinary, g, num * g);
}

/// [e^x, x(1 + r x/2)].
template <CoefficientRing R>
BasicRiordanSpec<R> exp_pascal_like_spec(const R& r, std::size_t order) {
  const auto g = series_exp(TruncatedSeries<R>::x(order));
  const auto f = TruncatedSeries<R>(std::vector<R>{R::zero(), R::one(), r * R(Rational(1, 2))}, order);
  return BasicRiordanSpec<R>(RiordanKind::Exponential, g, f);
}

/// Stretched (1/(1-x), x^2 g(x)).
template <CoefficientRing R>
BasicRiordanSpec<R> stretched_gamma_spec(const TruncatedSeries<R>& g) {
  if (!(g[0] == R::one())) throw InvalidSpec("stretched gamma family needs g(0) = 1");
  const std::size_t order = g.order() + 2;
  std::vector<R> phi(order + 1, R::zero());
  for (std::size_t i = 0; i <= g.order(); ++i) phi[i + 2] = g[i];
  return BasicRiordanSpec<R>(RiordanKind::Stretched, geometric_series(R::one(), order),
                             TruncatedSeries<R>(std::move(phi), order));
}

/// g(x) = (1 + r x)/(1 - x), the stretched-gamma family studied with r.
template <CoefficientRing R>
TruncatedSeries<R> one_plus_rx_over_one_minus_x(const R& r, std::size_t order) {
  return TruncatedSeries<R>(std::vector<R>{R::one(), r}, order) *
         geometric_series(R::one(), order);
}

/// Stretched (1/(1-x), r x^2/(1-x)): gamma-matrix of pascal_like_spec(r).
template <CoefficientRing R>
BasicRiordanSpec<R> ordinary_gamma_spec(const R& r, std::size_t order) {
  const auto g = geometric_series(R::one(), order);
  return BasicRiordanSpec<R>(RiordanKind::Stretched, g,
                             TruncatedSeries<R>::monomial(r, 2, order) * g);
}

template <CoefficientRing R>
BasicTriangle<R> pascal_like_family(const R& r, std::size_t rows) {
  return ordinary_triangle(pascal_like_spec(r, rows), rows);
}
Triangle pascal_like_family(long r, std::size_t rows);

template <CoefficientRing R>
BasicTriangle<R> signed_pascal_like_family(const R& r, std::size_t rows) {
  return ordinary_triangle(signed_pascal_like_spec(r, rows), rows);
}
Triangle signed_pascal_like_family(long r, std::size_t rows);

template <CoefficientRing R>
BasicTriangle<R> exp_pascal_like_family(const R& r, std::size_t rows) {
  return exponential_triangle(exp_pascal_like_spec(r, rows), rows);
}
Triangle exp_pascal_like_family(long r, std::size_t rows);

/// Reads the gamma-matrix off a stretched triangle: entries beyond
/// floor(n/2) must vanish.
template <CoefficientRing R>
BasicGammaMatrix<R> gamma_from_stretched(const BasicTriangle<R>& t) {
  std::vector<std::vector<R>> out(t.n_rows());
  for (std::size_t n = 0; n < t.n_rows(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (k <= n / 2) {
        out[n].push_back(t.rows[n][k]);
      } else if (!t.rows[n][k].is_zero()) {
        throw InvalidSpec("stretched triangle row " + std::to_string(n) +
                          " has a nonzero entry past floor(n/2)");
      }
    }
  }
  return BasicGammaMatrix<R>(std::move(out));
}

template <CoefficientRing R>
struct StretchedGammaFamily {
  BasicGammaMatrix<R> gamma;
  BasicTriangle<R> triangle;
};

/// gamma-matrix (1/(1-x), x^2 g(x)) and the Pascal-like triangle it generates.
template <CoefficientRing R>
StretchedGammaFamily<R> general_stretched_gamma_family(const TruncatedSeries<R>& g,
                                                       std::size_t rows) {
  auto gamma = gamma_from_stretched(ordinary_triangle(stretched_gamma_spec(g), rows));
  auto tri = expand_gamma(gamma, rows);
  return {std::move(gamma), std::move(tri)};
}

/// The g = (1 + r x)/(1 - x) member.
StretchedGammaFamily<Rational> stretched_gamma_family(const Rational& r, std::size_t rows);

// ---------------------------------------------------------------------------
// Closed forms used as cross-checks.

/// sum_j binom(k,j) binom(n-j, n-k-j) r^j.
Rational pascal_like_entry_sum_r(const Rational& r, long n, long k);
/// sum_j binom(k,j) binom(n-k, n-k-j) (r+1)^j.
Rational pascal_like_entry_sum_r_plus_1(const Rational& r, long n, long k);
/// (n!/k!) sum_j binom(k,j) r^j / ((n-k-j)! 2^j), the exponential family entry.
Rational exp_pascal_like_entry(const Rational& r, long n, long k);
/// The same sum without binom(k,j); disagrees with the array (kept to
/// document the discrepancy).
Rational exp_pascal_like_entry_without_binomial(const Rational& r, long n, long k);

/// A008292 by the standard recurrence.
Triangle eulerian_triangle(std::size_t rows);

/// g(x)/(1 - y f(x)) over Q[y]; the x^n coefficient is the row-n polynomial.
/// Throws UnsupportedKind for exponential specs.
TruncatedSeries<YPolynomial> bivariate_gf(const RiordanSpec& spec, std::size_t order);

/// g(x) e^{y f(x)} for an exponential spec: an exponential generating
/// function, so [x^n] is the row-n polynomial divided by n!.
TruncatedSeries<YPolynomial> exponential_bivariate_gf(const RiordanSpec& spec, std::size_t order);

}  // namespace pascalgamma
