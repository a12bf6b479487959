#pragma once

#include <cstddef>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/riordan.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/triangle.hpp"
#include "pascalgamma/ypolynomial.hpp"

namespace pascalgamma {

/// INVERT(alpha): f / (1 + alpha x f). INVERT(-alpha) undoes it.
template <CoefficientRing R>
TruncatedSeries<R> invert_transform(const TruncatedSeries<R>& gf, const R& alpha) {
  const std::size_t n = gf.order();
  return gf / (TruncatedSeries<R>::one(n) + gf.shifted_up(1).scaled(alpha));
}

/// t-th binomial transform: (1/(1 - t x)) gf(x/(1 - t x)).
template <CoefficientRing R>
TruncatedSeries<R> binomial_transform(const TruncatedSeries<R>& gf, const R& t) {
  const std::size_t n = gf.order();
  const auto denom = TruncatedSeries<R>::one(n) - TruncatedSeries<R>::monomial(t, 1, n);
  const auto inner = TruncatedSeries<R>::x(n) / denom;
  return series_compose(gf, inner) / denom;
}

/// (1/x) Rev_x(x h(x, y)); the order is preserved.
template <CoefficientRing R>
TruncatedSeries<R> revert_bivariate(const TruncatedSeries<R>& h) {
  std::vector<R> xh;
  xh.reserve(h.order() + 2);
  xh.push_back(R::zero());
  for (const auto& c : h.coefficients()) xh.push_back(c);
  const TruncatedSeries<R> shifted(std::move(xh), h.order() + 1);
  return series_revert(shifted).shifted_down(1);
}

/// Reversion of a triangle through its bivariate generating function.
Triangle revert_triangle(const Triangle& h, std::size_t rows);

/// Reversion applied to a gamma-matrix's generating function (the gamma
/// rows are read back with floor(n/2) + 1 entries).
GammaMatrix revert_gamma(const GammaMatrix& g, std::size_t rows);

/// (1/(1 + x(y+1))) c(-r x^2 y / (1 + x(y+1))^2): reversion of
/// (1/(1-x), x(1+rx)/(1-x)).
TruncatedSeries<YPolynomial> reverted_family_gf(const Rational& r, std::size_t order);

/// sum_k (-1)^n (-r)^k binom(n, 2k) C_k binom(n-2k, i-k).
Rational reverted_family_entry(const Rational& r, long n, long i);

/// (1/(1+x)) c(-r x^2 y / (1+x)^2), gamma gf of the reverted family.
TruncatedSeries<YPolynomial> reverted_gamma_gf(const Rational& r, std::size_t order);

/// 1/(1 - x - r x^2 y), gamma gf of (1/(1-x), x(1+rx)/(1-x)).
TruncatedSeries<YPolynomial> ordinary_gamma_gf(const Rational& r, std::size_t order);

/// r-Narayana triangle: reversion of (1/(1+x), -x(1+rx)/(1+x)).
Triangle narayana_triangle(long r, std::size_t rows);
Triangle narayana_triangle(const Rational& r, std::size_t rows);

/// (1/(1 - x(y+1))) c(r x^2 y / (1 - x(y+1))^2).
TruncatedSeries<YPolynomial> narayana_gf(const Rational& r, std::size_t order);

/// (1/(1-x)) c(r x^2 y / (1-x)^2), gamma gf of the r-Narayana triangle.
TruncatedSeries<YPolynomial> narayana_gamma_gf(const Rational& r, std::size_t order);

/// e^{x(1 + r x y/2)}: exponential gf of the gamma-matrix of [e^x, x(1+rx/2)].
TruncatedSeries<YPolynomial> exponential_gamma_egf(const Rational& r, std::size_t order);

/// Multiplies [x^n] by n! (exponential to ordinary gf).
TruncatedSeries<YPolynomial> egf_to_ogf(const TruncatedSeries<YPolynomial>& egf);

/// A001263 by N(n,k) = binom(n+1,k) binom(n,k)/(k+1).
Triangle narayana_numbers(std::size_t rows);

}  // namespace pascalgamma
