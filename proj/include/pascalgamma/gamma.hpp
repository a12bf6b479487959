#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pascalgamma/combinatorics.hpp"
#include "pascalgamma/errors.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/triangle.hpp"

namespace pascalgamma {

/// h_{n,k} = sum_i binom(n-2i, k-i) gamma_{n,i}.
template <CoefficientRing R>
BasicTriangle<R> expand_gamma(const BasicGammaMatrix<R>& gamma, std::size_t rows) {
  if (gamma.n_rows() < rows) {
    throw OrderTooLow("gamma matrix has " + std::to_string(gamma.n_rows()) + " rows, need " +
                      std::to_string(rows));
  }
  std::vector<std::vector<R>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const long ln = static_cast<long>(n);
    out[n].assign(n + 1, R::zero());
    for (std::size_t i = 0; i <= n / 2; ++i) {
      const R& g = gamma.rows[n][i];
      if (g.is_zero()) continue;
      const long li = static_cast<long>(i);
      for (std::size_t k = i; k <= n - i; ++k) {
        const long lk = static_cast<long>(k);
        out[n][k] = out[n][k] + R(Rational(binom(ln - 2 * li, lk - li))) * g;
      }
    }
  }
  return BasicTriangle<R>(std::move(out));
}

namespace detail {

template <CoefficientRing R>
void require_palindromic(const BasicTriangle<R>& h) {
  const std::size_t bad = first_non_palindromic_row(h);
  if (bad != h.n_rows()) {
    throw NotReciprocal(bad, "row " + std::to_string(bad) + " is not palindromic");
  }
}

/// Applies a per-row extractor to the unsigned core of h and restores the
/// (-1)^n signs of a signed Pascal-like input.
template <CoefficientRing R, class RowFn>
BasicGammaMatrix<R> extract_rows(const BasicTriangle<R>& h, RowFn&& row_fn) {
  require_palindromic(h);
  const bool flip = classify_symmetry(h) == Symmetry::SignedPascalLike;
  std::vector<std::vector<R>> out(h.n_rows());
  for (std::size_t n = 0; n < h.n_rows(); ++n) {
    const bool odd = flip && (n % 2 == 1);
    std::vector<R> row = h.rows[n];
    if (odd) {
      for (auto& v : row) v = -v;
    }
    out[n] = row_fn(n, row);
    if (odd) {
      for (auto& v : out[n]) v = -v;
    }
  }
  return BasicGammaMatrix<R>(std::move(out));
}

}  // namespace detail

/// Solves the unit lower-triangular system of expand_gamma row by row
/// (k = 0..floor(n/2)); no division occurs, so integer rows give integer gammas.
template <CoefficientRing R>
BasicGammaMatrix<R> extract_gamma_solve(const BasicTriangle<R>& h) {
  return detail::extract_rows(h, [](std::size_t n, const std::vector<R>& row) {
    const long ln = static_cast<long>(n);
    std::vector<R> g(n / 2 + 1, R::zero());
    for (std::size_t k = 0; k <= n / 2; ++k) {
      R acc = row[k];
      for (std::size_t i = 0; i < k; ++i) {
        acc = acc - R(Rational(binom(ln - 2 * static_cast<long>(i),
                                     static_cast<long>(k) - static_cast<long>(i)))) * g[i];
      }
      g[k] = acc;
    }
    return g;
  });
}

/// gamma_{n,k} = [x^k] h_n(x c(x)^2) / c(x)^n, each row worked to order 2n.
template <CoefficientRing R>
BasicGammaMatrix<R> extract_gamma_zeilberger(const BasicTriangle<R>& h) {
  const std::size_t top = h.n_rows() == 0 ? 0 : 2 * (h.n_rows() - 1);
  const auto c = catalan_series<R>(top);
  const auto x_c2 = (c * c).shifted_up(1);
  const auto inv_c = TruncatedSeries<R>::one(top) / c;
  return detail::extract_rows(h, [&](std::size_t n, const std::vector<R>& row) {
    const std::size_t order = 2 * n;
    const auto composed = compose_polynomial<R>(row, x_c2.truncated(order));
    const auto series = composed * series_pow(inv_c.truncated(order), n);
    return std::vector<R>(series.coefficients().begin(),
                          series.coefficients().begin() + static_cast<long>(n / 2 + 1));
  });
}

/// Entry of the Riordan array (1, x c(x)^2):
/// binom(2n-1, n-k) (2k + 0^{n+k}) / (n + k + 0^{n+k}). Throws IndexError
/// unless 0 <= k <= n.
Rational alpha_entry(long n, long k);

/// Entry of the Riordan array (1, x/c(x)); beta_{n,n} = 1.
Rational beta_entry(long n, long k);

/// gamma_{n,k} = sum_{i<=k} (sum_j h_{n,j} alpha_{i,j}) beta_{n+k-i, n}.
template <CoefficientRing R>
BasicGammaMatrix<R> extract_gamma_alphabeta(const BasicTriangle<R>& h) {
  return detail::extract_rows(h, [](std::size_t n, const std::vector<R>& row) {
    const long ln = static_cast<long>(n);
    std::vector<R> g(n / 2 + 1, R::zero());
    for (long k = 0; k <= ln / 2; ++k) {
      R acc = R::zero();
      for (long i = 0; i <= k; ++i) {
        R inner = R::zero();
        for (long j = 0; j <= std::min(ln, i); ++j) {
          const auto& hv = row[static_cast<std::size_t>(j)];
          if (hv.is_zero()) continue;
          inner = inner + hv * R(alpha_entry(i, j));
        }
        if (inner.is_zero()) continue;
        acc = acc + inner * R(beta_entry(ln + k - i, ln));
      }
      g[static_cast<std::size_t>(k)] = acc;
    }
    return g;
  });
}

// ---------------------------------------------------------------------------
// Closed forms. Each throws IndexError unless 0 <= k <= floor(n/2).

namespace detail {
inline void require_gamma_index(long n, long k) {
  if (n < 0 || k < 0 || k > n / 2) {
    throw IndexError("gamma index (" + std::to_string(n) + ", " + std::to_string(k) +
                     ") outside 0 <= k <= floor(n/2)");
  }
}

template <CoefficientRing R>
R power_of(const R& base, long e) {
  R p = R::one();
  for (long i = 0; i < e; ++i) p = p * base;
  return p;
}
}  // namespace detail

/// binom(n-k, k) r^k: gamma-matrix of (1/(1-x), x(1+rx)/(1-x)).
template <CoefficientRing R>
R gamma_closed_ordinary(const R& r, long n, long k) {
  detail::require_gamma_index(n, k);
  return R(Rational(binom(n - k, k))) * detail::power_of(r, k);
}

/// (-1)^n (-r)^k binom(n, 2k) C_k: gamma-matrix of the reverted family.
template <CoefficientRing R>
R gamma_closed_reverted(const R& r, long n, long k) {
  detail::require_gamma_index(n, k);
  const Rational scale(BigInt(sign_pow(n) * binom(n, 2 * k) * catalan_number(k)));
  return R(scale) * detail::power_of(-r, k);
}

/// binom(n, 2k) r^k C_k: gamma-matrix of the r-Narayana triangle.
template <CoefficientRing R>
R gamma_closed_narayana(const R& r, long n, long k) {
  detail::require_gamma_index(n, k);
  return R(Rational(BigInt(binom(n, 2 * k) * catalan_number(k)))) * detail::power_of(r, k);
}

/// binom(n, 2k) r^k (2k-1)!!: gamma-matrix of [e^x, x(1 + r x/2)].
template <CoefficientRing R>
R gamma_closed_exponential(const R& r, long n, long k) {
  detail::require_gamma_index(n, k);
  return R(Rational(BigInt(binom(n, 2 * k) * odd_double_factorial(k)))) * detail::power_of(r, k);
}

/// (-1)^{n-k} r^k binom(n-k, k): gamma-matrix of (1/(1+x), -x(1+rx)/(1+x)).
template <CoefficientRing R>
R gamma_closed_signed(const R& r, long n, long k) {
  detail::require_gamma_index(n, k);
  return R(Rational(BigInt(sign_pow(n - k) * binom(n - k, k)))) * detail::power_of(r, k);
}

/// Tabulates a closed form into a gamma-matrix.
template <CoefficientRing R, class F>
BasicGammaMatrix<R> tabulate_gamma(std::size_t rows, F&& entry) {
  std::vector<std::vector<R>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k <= n / 2; ++k) {
      out[n].push_back(entry(static_cast<long>(n), static_cast<long>(k)));
    }
  }
  return BasicGammaMatrix<R>(std::move(out));
}

}  // namespace pascalgamma
