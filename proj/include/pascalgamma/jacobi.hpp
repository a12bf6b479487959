#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/ypolynomial.hpp"

namespace pascalgamma {

/// Prefix of a Jacobi continued fraction
///   1/(1 - a0 x - b0 x^2/(1 - a1 x - b1 x^2/(1 - ...))).
/// `finite` marks a fraction whose tail after the last a-level is zero;
/// then b holds one entry fewer than a.
template <CoefficientRing R>
struct BasicJacobiCF {
  std::vector<R> a;
  std::vector<R> b;
  bool finite = false;

  std::size_t depth() const { return a.size(); }

  /// Highest power of x the prefix determines.
  std::size_t exact_order() const {
    return finite ? std::numeric_limits<std::size_t>::max() : a.size() + b.size();
  }

  friend bool operator==(const BasicJacobiCF&, const BasicJacobiCF&) = default;
};

/// Strips levels G = 1/(1 - a x - b x^2 G') off a series with G(0) = 1.
/// Needs gf order >= 2*depth - 1; order 2*depth also yields the last b.
/// A zero b with a zero remainder ends the fraction (finite = true).
template <CoefficientRing R>
BasicJacobiCF<R> jacobi_extract(const TruncatedSeries<R>& gf, std::size_t depth) {
  BasicJacobiCF<R> cf;
  if (depth == 0) return cf;
  if (gf.order() + 1 < 2 * depth) {
    throw InsufficientDepth("series order " + std::to_string(gf.order()) +
                            " cannot determine " + std::to_string(depth) + " levels");
  }
  if (!(gf[0] == R::one())) throw NotJFraction("J-fraction needs gf(0) = 1");

  auto g = gf;
  for (std::size_t level = 0; level < depth; ++level) {
    const std::size_t m = g.order();
    const auto h = TruncatedSeries<R>::one(m) - TruncatedSeries<R>::one(m) / g;
    cf.a.push_back(h[1]);
    if (m < 2) break;
    const auto rest = h - TruncatedSeries<R>::monomial(h[1], 1, m);
    const R& b = rest[2];
    if (b.is_zero()) {
      for (std::size_t i = 3; i <= m; ++i) {
        if (!rest[i].is_zero()) {
          throw NotJFraction("level " + std::to_string(level) +
                             " has b = 0 with a nonzero remainder");
        }
      }
      cf.finite = true;
      break;
    }
    cf.b.push_back(b);
    if (level + 1 == depth) break;
    const auto inv = b.inverse();
    if (!inv) {
      throw FieldRequired("b coefficient at level " + std::to_string(level) +
                          " is not invertible in the coefficient ring");
    }
    g = rest.shifted_down(2).scaled(*inv);
  }
  return cf;
}

/// Bottom-up evaluation through x^order.
template <CoefficientRing R>
TruncatedSeries<R> jacobi_evaluate(const BasicJacobiCF<R>& cf, std::size_t order) {
  if (order > cf.exact_order()) {
    throw InsufficientDepth("J-fraction of depth " + std::to_string(cf.depth()) +
                            " determines the series only through x^" +
                            std::to_string(cf.exact_order()));
  }
  using S = TruncatedSeries<R>;
  S g = S::one(order);
  if (cf.finite && cf.b.size() == cf.a.size()) {
    throw NotJFraction("finite J-fraction must have one b fewer than a");
  }
  for (std::size_t level = cf.a.size(); level-- > 0;) {
    S den = S::one(order) - S::monomial(cf.a[level], 1, order);
    if (level < cf.b.size()) den = den - (g.shifted_up(2)).scaled(cf.b[level]);
    g = S::one(order) / den;
  }
  return g;
}

/// a_n -> a_n + t; evaluates to the t-th binomial transform.
template <CoefficientRing R>
BasicJacobiCF<R> binomial_transform_cf(const BasicJacobiCF<R>& cf, const R& t) {
  BasicJacobiCF<R> out = cf;
  for (auto& a : out.a) a = a + t;
  return out;
}

/// Symbolic extraction by sampling: evaluates the y-coefficients at
/// max_degree + 2 points, extracts over Q at each, interpolates every a_n
/// and b_n and checks the extra sample. Throws NotJFraction when the
/// coefficients are not polynomials of degree <= max_degree.
BasicJacobiCF<YPolynomial> jacobi_extract_sampled(const TruncatedSeries<YPolynomial>& gf,
                                                  std::size_t depth, std::size_t max_degree);

/// Interpolating polynomial through (xs[i], ys[i]).
YPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace pascalgamma
