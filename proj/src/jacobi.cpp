#include "pascalgamma/jacobi.hpp"

namespace pascalgamma {

YPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  YPolynomial acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    YPolynomial basis = YPolynomial::one();
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * YPolynomial{-xs[j], 1};
      denom *= xs[i] - xs[j];
    }
    acc += basis.scaled(ys[i] / denom);
  }
  return acc;
}

BasicJacobiCF<YPolynomial> jacobi_extract_sampled(const TruncatedSeries<YPolynomial>& gf,
                                                  std::size_t depth, std::size_t max_degree) {
  const std::size_t samples = max_degree + 2;
  std::vector<Rational> ys;
  std::vector<BasicJacobiCF<Rational>> cfs;
  for (std::size_t s = 0; s < samples; ++s) {
    const Rational y(static_cast<long>(s + 1));
    ys.push_back(y);
    cfs.push_back(jacobi_extract(gf.map([&](const YPolynomial& p) { return p.evaluate(y); }),
                                 depth));
  }
  for (const auto& cf : cfs) {
    if (cf.a.size() != cfs.front().a.size() || cf.b.size() != cfs.front().b.size() ||
        cf.finite != cfs.front().finite) {
      throw NotJFraction("samples disagree on the shape of the J-fraction");
    }
  }

  const std::vector<Rational> fit_x(ys.begin(), ys.end() - 1);
  auto fit = [&](auto pick) {
    std::vector<Rational> vals;
    for (std::size_t s = 0; s + 1 < samples; ++s) vals.push_back(pick(cfs[s]));
    YPolynomial p = interpolate(fit_x, vals);
    if (p.degree() > static_cast<long>(max_degree) ||
        !(p.evaluate(ys.back()) == pick(cfs.back()))) {
      throw NotJFraction("J-fraction coefficient is not a polynomial of degree <= " +
                         std::to_string(max_degree));
    }
    return p;
  };

  BasicJacobiCF<YPolynomial> out;
  out.finite = cfs.front().finite;
  for (std::size_t i = 0; i < cfs.front().a.size(); ++i) {
    out.a.push_back(fit([i](const BasicJacobiCF<Rational>& cf) { return cf.a[i]; }));
  }
  for (std::size_t i = 0; i < cfs.front().b.size(); ++i) {
    out.b.push_back(fit([i](const BasicJacobiCF<Rational>& cf) { return cf.b[i]; }));
  }
  return out;
}

}  // namespace pascalgamma
