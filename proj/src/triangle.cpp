#include "pascalgamma/triangle.hpp"

namespace pascalgamma {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::PascalLike: return "pascal-like";
    case Symmetry::SignedPascalLike: return "signed-pascal-like";
    case Symmetry::Asymmetric: return "asymmetric";
  }
  return "unknown";
}

TruncatedSeries<YPolynomial> triangle_gf(const Triangle& t) {
  if (t.n_rows() == 0) throw OrderTooLow("empty triangle has no generating function");
  std::vector<YPolynomial> coeffs;
  coeffs.reserve(t.n_rows());
  for (const auto& row : t.rows) coeffs.emplace_back(row);
  return TruncatedSeries<YPolynomial>(std::move(coeffs), t.n_rows() - 1);
}

Triangle triangle_from_gf(const TruncatedSeries<YPolynomial>& gf, std::size_t rows) {
  if (rows > 0 && gf.order() + 1 < rows) {
    throw OrderTooLow("generating function order " + std::to_string(gf.order()) +
                      " too low for " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const YPolynomial& p = gf[n];
    if (p.degree() > static_cast<long>(n)) {
      throw InvalidSpec("coefficient of x^" + std::to_string(n) + " has y-degree " +
                        std::to_string(p.degree()));
    }
    out[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[n][k] = p.coefficient(k);
  }
  return Triangle(std::move(out));
}

GammaMatrix gamma_from_gf(const TruncatedSeries<YPolynomial>& gf, std::size_t rows) {
  if (rows > 0 && gf.order() + 1 < rows) {
    throw OrderTooLow("generating function order " + std::to_string(gf.order()) +
                      " too low for " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const YPolynomial& p = gf[n];
    if (p.degree() > static_cast<long>(n / 2)) {
      throw InvalidSpec("gamma coefficient of x^" + std::to_string(n) + " has y-degree " +
                        std::to_string(p.degree()));
    }
    out[n].resize(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) out[n][k] = p.coefficient(k);
  }
  return GammaMatrix(std::move(out));
}

TruncatedSeries<YPolynomial> gamma_gf(const GammaMatrix& g) {
  if (g.n_rows() == 0) throw OrderTooLow("empty gamma matrix has no generating function");
  std::vector<YPolynomial> coeffs;
  coeffs.reserve(g.n_rows());
  for (const auto& row : g.rows) coeffs.emplace_back(row);
  return TruncatedSeries<YPolynomial>(std::move(coeffs), g.n_rows() - 1);
}

Triangle alternate_row_signs(const Triangle& t) {
  Triangle out = t;
  for (std::size_t n = 1; n < out.n_rows(); n += 2) {
    for (auto& v : out.rows[n]) v = -v;
  }
  return out;
}

GammaMatrix alternate_row_signs(const GammaMatrix& g) {
  GammaMatrix out = g;
  for (std::size_t n = 1; n < out.n_rows(); n += 2) {
    for (auto& v : out.rows[n]) v = -v;
  }
  return out;
}

namespace {
bool rows_integral(const std::vector<std::vector<Rational>>& rows) {
  for (const auto& row : rows) {
    for (const auto& v : row) {
      if (!v.is_integer()) return false;
    }
  }
  return true;
}
}  // namespace

bool is_integral(const Triangle& t) { return rows_integral(t.rows); }
bool is_integral(const GammaMatrix& g) { return rows_integral(g.rows); }

Triangle truncate_rows(const Triangle& t, std::size_t rows) {
  if (rows > t.n_rows()) throw OrderTooLow("triangle has fewer rows than requested");
  return Triangle(std::vector<std::vector<Rational>>(t.rows.begin(), t.rows.begin() + rows));
}

}  // namespace pascalgamma
