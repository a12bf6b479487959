#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pascalgamma/combinatorics.hpp"
#include "pascalgamma/ring.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/ypolynomial.hpp"
#include "pascalgamma/yrational.hpp"

using namespace pascalgamma;
using testing::seq;
using testing::series;

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<YPolynomial>);
static_assert(CoefficientRing<YRationalFunction>);
static_assert(!CoefficientRing<int>);

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/4") == Rational(3) / Rational(2));
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK(Rational::parse("12").is_integer());
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_FALSE(Rational(0).inverse().has_value());
  CHECK(*Rational(-4).inverse() == Rational(BigInt(-1), BigInt(4)));
}

TEST_CASE("series multiplication") {
  const auto one_plus_x = series("1 1", 4);
  const auto one_minus_x = series("-1 -1", 4).scaled(-1) - series("0 2", 4);
  CHECK(one_minus_x == series("1 -1", 4));
  CHECK(one_plus_x * one_minus_x == series("1 0 -1", 4));

  const auto geo = RationalSeries::one(5) / series("1 -1", 5);
  CHECK(series_mul(geo, series("1 1", 5)) == series("1 2 2 2 2 2", 5));

  const auto a = series("3 -1/2 7 0 2", 4);
  CHECK(a * RationalSeries::one(4) == a);
}

TEST_CASE("binary operations take the smaller order") {
  const auto a = series("1 1 1 1 1 1", 5);
  const auto b = series("1 1", 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
}

TEST_CASE("series division") {
  CHECK(series_div(RationalSeries::one(4), series("1 -1", 4)) == series("1 1 1 1 1", 4));
  CHECK(RationalSeries::one(6) / series("1 -1 -1", 6) == series("1 1 2 3 5 8 13", 6));
  CHECK_THROWS_AS(RationalSeries::one(3) / RationalSeries::x(3), NotAUnit);

  // 1/(1 - (1+y)x - x^2 y): the x^3 coefficient is the Delannoy row 1 5 5 1.
  using YS = TruncatedSeries<YPolynomial>;
  const auto y = YPolynomial::y();
  const YS den(std::vector<YPolynomial>{1, -(y + 1), -y}, 3);
  const auto h = YS::one(3) / den;
  CHECK(h[3] == YPolynomial{1, 5, 5, 1});
  CHECK(h[3].to_string() == "1 + 5*y + 5*y^2 + y^3");

  // Only the constant term must be a unit for polynomial coefficients.
  CHECK_THROWS_AS(YS::one(2) / YS(std::vector<YPolynomial>{y, 1}, 2), NotAUnit);
}

TEST_CASE("series composition") {
  const auto geo = RationalSeries::one(4) / series("1 -1", 4);
  CHECK(series_compose(geo, series("0 1 1", 4)) == series("1 1 2 3 5", 4));
  const auto f = series("2 -1 1/3 5 0 7", 5);
  CHECK(series_compose(f, RationalSeries::x(5)) == f);
  CHECK_THROWS_AS(series_compose(geo, series("1 1", 4)), CompositionDomain);

  const auto g = series("0 1 -1", 5);
  CHECK(series_compose(g, series_revert(g)) == RationalSeries::x(5));
}

TEST_CASE("series reversion") {
  CHECK(series_revert(series("0 1 -1", 4)) == series("0 1 1 2 5", 4));
  CHECK(series_revert(RationalSeries::x(6)) == RationalSeries::x(6));
  const auto x_over = RationalSeries::x(5) / series("1 -1", 5);
  CHECK(series_revert(x_over) == series("0 1 -1 1 -1 1", 5));
  CHECK_THROWS_AS(series_revert(series("1 1", 3)), ReversionDomain);
  CHECK_THROWS_AS(series_revert(series("0 0 1", 3)), ReversionDomain);
}

TEST_CASE("series exponential") {
  CHECK(series_exp(RationalSeries::x(4)) == series("1 1 1/2 1/6 1/24", 4));
  CHECK(series_exp(RationalSeries(4)) == RationalSeries::one(4));
  CHECK_THROWS_AS(series_exp(series("1 1", 3)), ExpDomain);

  using YS = TruncatedSeries<YPolynomial>;
  const auto y = YPolynomial::y();
  const YS f(std::vector<YPolynomial>{0, 1, y.scaled(Rational(BigInt(1), BigInt(2)))}, 3);
  const auto e = series_exp(f);
  CHECK(e[3] == YPolynomial{Rational(BigInt(1), BigInt(6)), Rational(BigInt(1), BigInt(2))});
  // times 3! gives gamma row 3 of A100861: 1, 3
  CHECK(e[3].scaled(6) == YPolynomial{1, 3});
}

TEST_CASE("catalan series") {
  CHECK(catalan_series<Rational>(5) == series("1 1 2 5 14 42", 5));
  CHECK(catalan_series<Rational>(0) == RationalSeries::one(0));
  const auto c = catalan_series<Rational>(20);
  // c = 1 + x c^2
  CHECK(RationalSeries::one(20) + (c * c).shifted_up(1) == c);
}

TEST_CASE("combinatorial scalars") {
  CHECK(binom(6, 2) == 15);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(odd_double_factorial(3) == 15);
  CHECK(odd_double_factorial(0) == 1);
  CHECK(binom(6, 4) * odd_double_factorial(2) == 45);
  CHECK(zero_pow(0) == 1);
  CHECK(zero_pow(3) == 0);
  CHECK(catalan_number(10) == 16796);
}

TEST_CASE("series ring laws on random inputs") {
  std::mt19937 gen(1);
  std::uniform_int_distribution<int> d(-9, 9);
  auto random_series = [&](std::size_t order, bool unit) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.emplace_back(BigInt(d(gen)), BigInt(1 + (d(gen) + 9) % 4));
    if (unit && c[0].is_zero()) c[0] = 1;
    return RationalSeries(c, order);
  };
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(10, false);
    const auto b = random_series(10, false);
    const auto c = random_series(10, false);
    const auto u = random_series(10, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / u) * u == a);

    auto f = random_series(10, false) - RationalSeries::constant(0, 10);
    std::vector<Rational> fc(f.coefficients().begin(), f.coefficients().end());
    fc[0] = 0;
    if (fc[1].is_zero()) fc[1] = 1;
    const RationalSeries g(fc, 10);
    CHECK(series_compose(g, series_revert(g)) == RationalSeries::x(10));
    CHECK(series_compose(series_revert(g), g) == RationalSeries::x(10));
    CHECK(series_revert(series_revert(g)) == g);
  }
}

TEST_CASE("polynomial rendering") {
  const auto y = YPolynomial::y();
  CHECK(YPolynomial().to_string() == "0");
  CHECK(YPolynomial{1, -9}.to_string() == "1 - 9*y");
  CHECK((-(y + 1)).to_string() == "-1 - y");
  CHECK((-y).to_string() == "-y");
  CHECK(YPolynomial{0, 0, 3}.to_string("r") == "3*r^2");
  CHECK(YPolynomial{Rational(BigInt(1), BigInt(2)), 0, -1}.to_string() == "1/2 - y^2");
}

TEST_CASE("polynomial and rational function arithmetic") {
  const auto y = YPolynomial::y();
  const YPolynomial p{1, 2, 1};
  const auto [q, rem] = p.divmod(y + 1);
  CHECK(q == y + 1);
  CHECK(rem.is_zero());
  CHECK(gcd(p, YPolynomial{-1, 0, 1}) == y + 1);
  CHECK_FALSE(y.inverse().has_value());
  CHECK(*YPolynomial(4).inverse() == YPolynomial(Rational(BigInt(1), BigInt(4))));

  const YRationalFunction f(p, YPolynomial{-1, 0, 1});
  CHECK(f.numerator() == y + 1);
  CHECK(f.denominator() == y - 1);
  CHECK((f * YRationalFunction(y - 1)).is_polynomial());
  CHECK(*f.inverse() * f == YRationalFunction::one());
  CHECK_FALSE(YRationalFunction::zero().inverse().has_value());
}

TEST_CASE("evaluation is a homomorphism at random y") {
  std::mt19937 gen(2);
  std::uniform_int_distribution<int> d(-7, 7);
  auto rand_poly = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(d(gen));
    return YPolynomial(c);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Rational y0(BigInt(d(gen)), BigInt(1 + trial % 5));
    const auto a = rand_poly();
    const auto b = rand_poly();
    CHECK((a * b).evaluate(y0) == a.evaluate(y0) * b.evaluate(y0));
    CHECK((a + b).evaluate(y0) == a.evaluate(y0) + b.evaluate(y0));
    auto c = rand_poly();
    if (c.is_zero()) c = YPolynomial(1);
    if (c.evaluate(y0).is_zero()) continue;
    const YRationalFunction f(a, c);
    const YRationalFunction g(b, c + YPolynomial(1));
    if ((c + YPolynomial(1)).evaluate(y0).is_zero()) continue;
    CHECK(f.evaluate(y0) == a.evaluate(y0) / c.evaluate(y0));
    CHECK((f + g).evaluate(y0) == f.evaluate(y0) + g.evaluate(y0));
    CHECK((f * g).evaluate(y0) == f.evaluate(y0) * g.evaluate(y0));
  }
}
