#include "pascalgamma/families.hpp"

#include "pascalgamma/gamma.hpp"
#include "pascalgamma/riordan.hpp"
#include "pascalgamma/transforms.hpp"

namespace pascalgamma {

const std::vector<std::string>& triangle_family_names() {
  static const std::vector<std::string> names = {
      "ordinary", "signed", "exponential", "stretched-gamma", "narayana", "reverted", "eulerian"};
  return names;
}

Triangle family_triangle(std::string_view family, const Rational& r, std::size_t rows) {
  if (family == "ordinary") return pascal_like_family(r, rows);
  if (family == "signed") return signed_pascal_like_family(r, rows);
  if (family == "exponential") return exp_pascal_like_family(r, rows);
  if (family == "stretched-gamma") return stretched_gamma_family(r, rows).triangle;
  if (family == "narayana") return narayana_triangle(r, rows);
  if (family == "reverted") return revert_triangle(pascal_like_family(r, rows), rows);
  if (family == "eulerian") return eulerian_triangle(rows);
  throw UnknownFamily("unknown family '" + std::string(family) + "'");
}

std::optional<GammaMatrix> family_closed_gamma(std::string_view family, const Rational& r,
                                               std::size_t rows) {
  auto with = [&](auto fn) {
    return tabulate_gamma<Rational>(rows, [&](long n, long k) { return fn(r, n, k); });
  };
  if (family == "ordinary") return with(gamma_closed_ordinary<Rational>);
  if (family == "signed") return with(gamma_closed_signed<Rational>);
  if (family == "exponential") return with(gamma_closed_exponential<Rational>);
  if (family == "narayana") return with(gamma_closed_narayana<Rational>);
  if (family == "reverted") return with(gamma_closed_reverted<Rational>);
  if (family == "stretched-gamma") return stretched_gamma_family(r, rows).gamma;
  if (family == "eulerian") return std::nullopt;
  throw UnknownFamily("unknown family '" + std::string(family) + "'");
}

const std::vector<std::string>& gf_family_names() {
  static const std::vector<std::string> names = {
      "ordinary",        "ordinary-gamma",        "signed",   "signed-gamma",
      "exponential",     "exponential-gamma",     "narayana", "narayana-gamma",
      "reverted",        "reverted-gamma",        "stretched-gamma",
      "stretched-gamma-gamma"};
  return names;
}

TruncatedSeries<YPolynomial> family_gf(std::string_view name, const Rational& r,
                                       std::size_t order) {
  using YSeries = TruncatedSeries<YPolynomial>;
  if (name == "ordinary") return bivariate_gf(pascal_like_spec(r, order), order);
  if (name == "ordinary-gamma") return ordinary_gamma_gf(r, order);
  if (name == "signed") return bivariate_gf(signed_pascal_like_spec(r, order), order);
  if (name == "signed-gamma") {
    return YSeries::one(order) /
           YSeries(std::vector<YPolynomial>{1, 1, YPolynomial::y().scaled(r)}, order);
  }
  if (name == "exponential") return egf_to_ogf(exponential_bivariate_gf(exp_pascal_like_spec(r, order), order));
  if (name == "exponential-gamma") return egf_to_ogf(exponential_gamma_egf(r, order));
  if (name == "narayana") return narayana_gf(r, order);
  if (name == "narayana-gamma") return narayana_gamma_gf(r, order);
  if (name == "reverted") return reverted_family_gf(r, order);
  if (name == "reverted-gamma") return reverted_gamma_gf(r, order);
  if (name == "stretched-gamma") {
    return triangle_gf(stretched_gamma_family(r, order + 1).triangle);
  }
  if (name == "stretched-gamma-gamma") {
    return gamma_gf(stretched_gamma_family(r, order + 1).gamma);
  }
  throw UnknownFamily("unknown generating function family '" + std::string(name) + "'");
}

}  // namespace pascalgamma
