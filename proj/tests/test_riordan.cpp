#include <doctest.h>

#include "helpers.hpp"
#include "pascalgamma/riordan.hpp"
#include "pascalgamma/transforms.hpp"

using namespace pascalgamma;
using testing::row;
using testing::seq;
using testing::tri;

TEST_CASE("ordinary triangles") {
  CHECK(row(ordinary_triangle(pascal_like_spec(Rational(1), 7), 7), 6) == seq("1 11 41 63 41 11 1"));
  const RiordanSpec stretched(RiordanKind::Stretched, geometric_series(Rational(1), 6),
                              RationalSeries::monomial(1, 2, 6));
  CHECK(row(ordinary_triangle(stretched, 7), 6) == seq("1 1 1 1 0 0 0"));
  const RiordanSpec id(RiordanKind::Ordinary, RationalSeries::one(3), RationalSeries::x(3));
  CHECK(ordinary_triangle(id, 3) == tri("1; 0 1; 0 0 1"));
  CHECK_THROWS_AS(ordinary_triangle(pascal_like_spec(Rational(1), 3), 7), OrderTooLow);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(RiordanSpec(RiordanKind::Ordinary, testing::series("2 1", 3), RationalSeries::x(3)),
                  InvalidSpec);
  CHECK_THROWS_AS(RiordanSpec(RiordanKind::Ordinary, RationalSeries::one(3), testing::series("1 1", 3)),
                  InvalidSpec);
  CHECK_THROWS_AS(RiordanSpec(RiordanKind::Stretched, RationalSeries::one(3), RationalSeries::x(3)),
                  InvalidSpec);
}

TEST_CASE("exponential triangles") {
  CHECK(row(exp_pascal_like_family(1, 7), 6) == seq("1 21 120 215 120 21 1"));
  CHECK(row(exp_pascal_like_family(2, 7), 6) == seq("1 36 315 680 315 36 1"));
  const RiordanSpec id(RiordanKind::Exponential, RationalSeries::one(3), RationalSeries::x(3));
  CHECK(exponential_triangle(id, 3) == tri("1; 0 1; 0 0 1"));
  CHECK(exp_pascal_like_family(0, 6) == pascal_like_family(0, 6));

  const auto sym = exp_pascal_like_family(YPolynomial::y(), 5);
  const auto y = YPolynomial::y();
  CHECK(sym.rows[4] == std::vector<YPolynomial>{1, YPolynomial{4, 6}, YPolynomial{6, 12, 3},
                                                YPolynomial{4, 6}, 1});
}

TEST_CASE("ordinary and signed families") {
  CHECK(pascal_like_family(0, 5) == tri("1; 1 1; 1 2 1; 1 3 3 1; 1 4 6 4 1"));
  CHECK(pascal_like_family(-1, 4) == tri("1; 1 1; 1 1 1; 1 1 1 1"));
  const auto s = signed_pascal_like_family(-1, 7);
  CHECK(row(s, 6) == seq("1 11 41 63 41 11 1"));
  CHECK(row(s, 5) == seq("-1 -9 -25 -25 -9 -1"));
  CHECK(signed_pascal_like_family(0, 7) == alternate_row_signs(pascal_like_family(0, 7)));
  CHECK(row(signed_pascal_like_family(1, 7), 6) == seq("1 1 1 1 1 1 1"));
  for (long r = -3; r <= 3; ++r) {
    // the signed family is h(-x; -r)
    CHECK(signed_pascal_like_family(r, 9) == alternate_row_signs(pascal_like_family(-r, 9)));
  }
}

TEST_CASE("stretched gamma families") {
  const auto fam = stretched_gamma_family(Rational(1), 7);
  CHECK(fam.gamma.rows[6] == seq("1 9 13 1"));
  CHECK(row(fam.triangle, 6) == seq("1 15 64 101 64 15 1"));

  // g = 1: the stretched array (1/(1-x), x^2), every gamma entry is 1
  const auto trivial = general_stretched_gamma_family(RationalSeries::one(8), 9);
  for (std::size_t n = 0; n < 9; ++n) {
    CHECK(trivial.gamma.rows[n] == std::vector<Rational>(n / 2 + 1, Rational(1)));
  }
  CHECK(trivial.triangle.rows[6] == seq("1 7 20 29 20 7 1"));
  // g = 1/(1-x): Delannoy, binom(n-k, k)
  const auto delannoy = general_stretched_gamma_family(geometric_series(Rational(1), 8), 9);
  for (long n = 0; n < 9; ++n) {
    for (long k = 0; k <= n / 2; ++k) CHECK(delannoy.gamma.rows[n][k] == Rational(binom(n - k, k)));
  }

  const auto r = YPolynomial::y();
  const auto sym = general_stretched_gamma_family(one_plus_rx_over_one_minus_x(r, 6), 4);
  CHECK(sym.triangle.rows[3] == std::vector<YPolynomial>{1, YPolynomial{5, 1}, YPolynomial{5, 1}, 1});
}

TEST_CASE("symmetry classification") {
  CHECK(classify_symmetry(pascal_like_family(1, 7)) == Symmetry::PascalLike);
  CHECK(classify_symmetry(signed_pascal_like_family(-1, 7)) == Symmetry::SignedPascalLike);
  const RiordanSpec asym(RiordanKind::Ordinary, RationalSeries::one(5) / testing::series("1 -2", 5),
                         RationalSeries::x(5));
  CHECK(classify_symmetry(ordinary_triangle(asym, 5)) == Symmetry::Asymmetric);
  CHECK(first_non_palindromic_row(ordinary_triangle(asym, 5)) == 1);
}

TEST_CASE("row and diagonal sums") {
  const auto t = stretched_gamma_family(Rational(1), 7).triangle;
  CHECK(row_sums(t) == seq("1 2 5 14 37 98 261"));
  CHECK(diagonal_sums(t) == seq("1 1 2 4 8 16 31"));
  CHECK(row_sums(exp_pascal_like_family(2, 7)) == seq("1 2 6 20 76 312 1384"));
  CHECK(diagonal_sums(pascal_like_family(0, 10)) == seq("1 1 2 3 5 8 13 21 34 55"));
}

TEST_CASE("Eulerian triangle") {
  const auto e = eulerian_triangle(7);
  CHECK(row(e, 0) == seq("1"));
  CHECK(row(e, 3) == seq("1 11 11 1"));
  CHECK(row(e, 4) == seq("1 26 66 26 1"));
  CHECK(row(e, 6) == seq("1 120 1191 2416 1191 120 1"));
}

TEST_CASE("bivariate generating functions") {
  using YS = TruncatedSeries<YPolynomial>;
  const auto y = YPolynomial::y();
  const auto h = bivariate_gf(pascal_like_spec(Rational(1), 8), 8);
  CHECK(h == YS::one(8) / YS(std::vector<YPolynomial>{1, -(y + 1), -y}, 8));
  CHECK(h[6] == YPolynomial{1, 11, 41, 63, 41, 11, 1});

  const auto g = bivariate_gf(ordinary_gamma_spec(Rational(3), 8), 8);
  CHECK(g == YS::one(8) / YS(std::vector<YPolynomial>{1, -1, y.scaled(-3)}, 8));

  const RiordanSpec id(RiordanKind::Ordinary, RationalSeries::one(6), RationalSeries::x(6));
  CHECK(bivariate_gf(id, 6) == YS::one(6) / YS(std::vector<YPolynomial>{1, -y}, 6));

  CHECK_THROWS_AS(bivariate_gf(exp_pascal_like_spec(Rational(1), 6), 6), UnsupportedKind);
  const auto egf = exponential_bivariate_gf(exp_pascal_like_spec(Rational(1), 6), 6);
  CHECK(triangle_from_gf(egf_to_ogf(egf), 7) == exp_pascal_like_family(1, 7));
}

TEST_CASE("entry closed forms") {
  for (long r = -3; r <= 3; ++r) {
    const auto h = pascal_like_family(r, 10);
    for (long n = 0; n < 10; ++n) {
      for (long k = 0; k <= n; ++k) {
        CHECK(pascal_like_entry_sum_r(r, n, k) == h.at(n, k));
        CHECK(pascal_like_entry_sum_r_plus_1(r, n, k) == h.at(n, k));
      }
    }
  }
  CHECK(exp_pascal_like_entry(1, 4, 2) == Rational(21));
  CHECK(exp_pascal_like_entry_without_binomial(1, 4, 2) == Rational(15));
}
