#include "pascalgamma/riordan.hpp"

namespace pascalgamma {

std::string to_string(RiordanKind kind) {
  switch (kind) {
    case RiordanKind::Ordinary: return "ordinary";
    case RiordanKind::Exponential: return "exponential";
    case RiordanKind::Stretched: return "stretched";
  }
  return "unknown";
}

Triangle pascal_like_family(long r, std::size_t rows) {
  return pascal_like_family(Rational(r), rows);
}

Triangle signed_pascal_like_family(long r, std::size_t rows) {
  return signed_pascal_like_family(Rational(r), rows);
}

Triangle exp_pascal_like_family(long r, std::size_t rows) {
  return exp_pascal_like_family(Rational(r), rows);
}

StretchedGammaFamily<Rational> stretched_gamma_family(const Rational& r, std::size_t rows) {
  const std::size_t order = rows < 3 ? 0 : rows - 3;
  return general_stretched_gamma_family(one_plus_rx_over_one_minus_x(r, order), rows);
}

Rational pascal_like_entry_sum_r(const Rational& r, long n, long k) {
  Rational acc;
  for (long j = 0; j <= k; ++j) {
    acc += Rational(binom(k, j) * binom(n - j, n - k - j)) * r.pow(j);
  }
  return acc;
}

Rational pascal_like_entry_sum_r_plus_1(const Rational& r, long n, long k) {
  Rational acc;
  const Rational r1 = r + 1;
  for (long j = 0; j <= k; ++j) {
    acc += Rational(binom(k, j) * binom(n - k, n - k - j)) * r1.pow(j);
  }
  return acc;
}

namespace {
Rational exp_entry(const Rational& r, long n, long k, bool with_binomial) {
  Rational acc;
  for (long j = 0; j <= k && j <= n - k; ++j) {
    Rational term = r.pow(j) / Rational(factorial(n - k - j) * (BigInt(1) << j));
    if (with_binomial) term *= Rational(binom(k, j));
    acc += term;
  }
  return acc * Rational(factorial(n), factorial(k));
}
}  // namespace

Rational exp_pascal_like_entry(const Rational& r, long n, long k) {
  return exp_entry(r, n, k, true);
}

Rational exp_pascal_like_entry_without_binomial(const Rational& r, long n, long k) {
  return exp_entry(r, n, k, false);
}

Triangle eulerian_triangle(std::size_t rows) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t m = 0; m < rows; ++m) {
    std::vector<Rational> row(m + 1);
    if (m == 0) {
      row[0] = 1;
    } else {
      const auto& prev = out.back();
      for (std::size_t j = 0; j <= m; ++j) {
        Rational v;
        if (j < m) v += Rational(static_cast<long>(j + 1)) * prev[j];
        if (j > 0) v += Rational(static_cast<long>(m - j + 1)) * prev[j - 1];
        row[j] = v;
      }
    }
    out.push_back(std::move(row));
  }
  return Triangle(std::move(out));
}

TruncatedSeries<YPolynomial> bivariate_gf(const RiordanSpec& spec, std::size_t order) {
  if (spec.kind() == RiordanKind::Exponential) {
    throw UnsupportedKind("bivariate_gf: use exponential_bivariate_gf for exponential arrays");
  }
  if (spec.order() < order) throw OrderTooLow("spec series order below requested gf order");
  const auto g = lift<YPolynomial>(spec.g().truncated(order));
  const auto f = lift<YPolynomial>(spec.f().truncated(order));
  return g / (TruncatedSeries<YPolynomial>::one(order) - f.scaled(YPolynomial::y()));
}

TruncatedSeries<YPolynomial> exponential_bivariate_gf(const RiordanSpec& spec,
                                                      std::size_t order) {
  if (spec.kind() != RiordanKind::Exponential) {
    throw UnsupportedKind("exponential_bivariate_gf needs an exponential spec");
  }
  if (spec.order() < order) throw OrderTooLow("spec series order below requested gf order");
  const auto g = lift<YPolynomial>(spec.g().truncated(order));
  const auto f = lift<YPolynomial>(spec.f().truncated(order));
  return g * series_exp(f.scaled(YPolynomial::y()));
}

}  // namespace pascalgamma
