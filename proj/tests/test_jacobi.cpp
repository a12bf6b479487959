#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pascalgamma/families.hpp"
#include "pascalgamma/gamma.hpp"
#include "pascalgamma/jacobi.hpp"
#include "pascalgamma/transforms.hpp"
#include "pascalgamma/yrational.hpp"

using namespace pascalgamma;
using testing::seq;
using QS = TruncatedSeries<YRationalFunction>;
using YS = TruncatedSeries<YPolynomial>;

namespace {

QS to_field(const YS& s) {
  return s.map([](const YPolynomial& p) { return YRationalFunction(p); });
}

}  // namespace

TEST_CASE("evaluation of constant-stream fractions") {
  const auto y = YPolynomial::y();
  BasicJacobiCF<YPolynomial> cf;
  for (int i = 0; i < 6; ++i) {
    cf.a.push_back(1);
    cf.b.push_back(y);
  }
  const auto g = jacobi_evaluate(cf, 10);
  CHECK(gamma_from_gf(g, 11) == gamma_from_gf(narayana_gamma_gf(1, 10), 11));
  CHECK(gamma_from_gf(g, 7).rows[6] == seq("1 15 30 5"));
}

TEST_CASE("finite fractions") {
  BasicJacobiCF<Rational> cf{{Rational(3)}, {}, true};
  CHECK(jacobi_evaluate(cf, 3) == testing::series("1 3 9 27", 3));
  const auto back = jacobi_extract(testing::series("1 3 9 27 81 243", 5), 3);
  CHECK(back.finite);
  CHECK(back.a == seq("3"));
  CHECK(back.b.empty());
}

TEST_CASE("extraction needs enough terms") {
  CHECK_THROWS_AS(jacobi_extract(testing::series("1 1 2", 2), 3), InsufficientDepth);
  BasicJacobiCF<Rational> cf{seq("1 1"), seq("1 1"), false};
  CHECK_THROWS_AS(jacobi_evaluate(cf, 5), InsufficientDepth);
  CHECK_THROWS_AS(jacobi_extract(testing::series("2 1 1", 2), 1), NotJFraction);
}

TEST_CASE("Catalan numbers") {
  const auto cf = jacobi_extract(catalan_series<Rational>(12), 6);
  CHECK(cf.a == seq("1 2 2 2 2 2"));
  CHECK(cf.b == seq("1 1 1 1 1 1"));
}

TEST_CASE("J-fractions over Q(y)") {
  const auto y = YRationalFunction::y();
  for (long r : {-2L, -1L, 1L, 2L}) {
    const auto ry = y * YRationalFunction(r);
    const auto rev = jacobi_extract(to_field(reverted_family_gf(r, 12)), 6);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(rev.a[n] == -(y + YRationalFunction(1)));
      CHECK(rev.b[n] == -ry);
    }
    const auto nar = jacobi_extract(to_field(narayana_gf(r, 12)), 6);
    const auto ex = jacobi_extract(to_field(family_gf("exponential", r, 12)), 6);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(nar.a[n] == y + YRationalFunction(1));
      CHECK(nar.b[n] == ry);
      CHECK(ex.a[n] == y + YRationalFunction(1));
      CHECK(ex.b[n] == ry * YRationalFunction(static_cast<long>(n) + 1));
    }
  }
  CHECK(jacobi_extract(to_field(reverted_family_gf(1, 12)), 1).a[0].to_string() == "-1 - y");
}

TEST_CASE("binomial transform shifts a") {
  const auto y = YPolynomial::y();
  BasicJacobiCF<YPolynomial> gstar;
  for (int i = 0; i < 6; ++i) {
    gstar.a.push_back(-1);
    gstar.b.push_back(-y);
  }
  const auto shifted = binomial_transform_cf(gstar, -y);
  CHECK(shifted.a[0] == -(y + YPolynomial(1)));
  CHECK(jacobi_evaluate(shifted, 12) == reverted_family_gf(1, 12));
  CHECK(jacobi_evaluate(shifted, 12) == binomial_transform(jacobi_evaluate(gstar, 12), -y));
  CHECK(binomial_transform_cf(gstar, YPolynomial()) == gstar);
}

TEST_CASE("random round trips") {
  std::mt19937 gen(21);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    BasicJacobiCF<Rational> cf;
    for (int i = 0; i < 6; ++i) {
      cf.a.emplace_back(d(gen));
      int b = d(gen);
      cf.b.emplace_back(b == 0 ? 1 : b);
    }
    const auto s = jacobi_evaluate(cf, 12);
    CHECK(jacobi_extract(s, 6) == cf);
    CHECK(jacobi_evaluate(jacobi_extract(s, 6), 12) == s);
  }
}

TEST_CASE("sampled extraction agrees with the field route") {
  for (long r : {-1L, 2L}) {
    const auto gf = reverted_family_gf(r, 10);
    const auto sampled = jacobi_extract_sampled(gf, 5, 3);
    const auto exact = jacobi_extract(to_field(gf), 5);
    for (std::size_t n = 0; n < 5; ++n) CHECK(YRationalFunction(sampled.a[n]) == exact.a[n]);
  }
  CHECK(interpolate(seq("0 1 2"), seq("1 2 5")) == YPolynomial{1, 0, 1});
}
