#include "pascalgamma/transforms.hpp"

namespace pascalgamma {

namespace {

using YSeries = TruncatedSeries<YPolynomial>;

YPolynomial y_plus_one() { return YPolynomial{1, 1}; }

/// (1/D) c(s x^2 y / D^2) for D = 1 + d1 x.
YSeries catalan_quotient(const YPolynomial& d1, const Rational& s, std::size_t order) {
  const YSeries d = YSeries(std::vector<YPolynomial>{1, d1}, order);
  const YSeries num = YSeries::monomial(YPolynomial::y().scaled(s), 2, order);
  const YSeries u = num / (d * d);
  return series_compose(catalan_series<YPolynomial>(order), u) / d;
}

}  // namespace

Triangle revert_triangle(const Triangle& h, std::size_t rows) {
  if (rows == 0) return {};
  if (h.n_rows() < rows) {
    throw OrderTooLow("triangle has " + std::to_string(h.n_rows()) + " rows, need " +
                      std::to_string(rows));
  }
  return triangle_from_gf(revert_bivariate(triangle_gf(truncate_rows(h, rows))), rows);
}

GammaMatrix revert_gamma(const GammaMatrix& g, std::size_t rows) {
  if (rows == 0) return {};
  if (g.n_rows() < rows) throw OrderTooLow("gamma matrix has too few rows");
  std::vector<std::vector<Rational>> head(g.rows.begin(), g.rows.begin() + rows);
  return gamma_from_gf(revert_bivariate(gamma_gf(GammaMatrix(std::move(head)))), rows);
}

TruncatedSeries<YPolynomial> reverted_family_gf(const Rational& r, std::size_t order) {
  return catalan_quotient(y_plus_one(), -r, order);
}

Rational reverted_family_entry(const Rational& r, long n, long i) {
  Rational acc;
  for (long k = 0; 2 * k <= n; ++k) {
    const BigInt c = binom(n, 2 * k) * catalan_number(k) * binom(n - 2 * k, i - k);
    if (c == 0) continue;
    acc += Rational(c) * (-r).pow(k);
  }
  return n % 2 == 0 ? acc : -acc;
}

TruncatedSeries<YPolynomial> reverted_gamma_gf(const Rational& r, std::size_t order) {
  return catalan_quotient(YPolynomial(1), -r, order);
}

TruncatedSeries<YPolynomial> ordinary_gamma_gf(const Rational& r, std::size_t order) {
  const YSeries den(std::vector<YPolynomial>{1, -1, YPolynomial::y().scaled(-r)}, order);
  return YSeries::one(order) / den;
}

Triangle narayana_triangle(const Rational& r, std::size_t rows) {
  if (rows == 0) return {};
  return revert_triangle(signed_pascal_like_family(r, rows), rows);
}

Triangle narayana_triangle(long r, std::size_t rows) {
  return narayana_triangle(Rational(r), rows);
}

TruncatedSeries<YPolynomial> narayana_gf(const Rational& r, std::size_t order) {
  return catalan_quotient(-y_plus_one(), r, order);
}

TruncatedSeries<YPolynomial> narayana_gamma_gf(const Rational& r, std::size_t order) {
  return catalan_quotient(YPolynomial(-1), r, order);
}

TruncatedSeries<YPolynomial> exponential_gamma_egf(const Rational& r, std::size_t order) {
  const YSeries exponent(std::vector<YPolynomial>{0, 1, YPolynomial::y().scaled(r / 2)}, order);
  return series_exp(exponent);
}

TruncatedSeries<YPolynomial> egf_to_ogf(const TruncatedSeries<YPolynomial>& egf) {
  std::vector<YPolynomial> out;
  out.reserve(egf.order() + 1);
  for (std::size_t n = 0; n <= egf.order(); ++n) {
    out.push_back(egf[n].scaled(Rational(factorial(static_cast<long>(n)))));
  }
  return TruncatedSeries<YPolynomial>(std::move(out), egf.order());
}

Triangle narayana_numbers(std::size_t rows) {
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const long ln = static_cast<long>(n);
    for (long k = 0; k <= ln; ++k) {
      out[n].emplace_back(binom(ln + 1, k) * binom(ln, k), BigInt(k + 1));
    }
  }
  return Triangle(std::move(out));
}

}  // namespace pascalgamma
