#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pascalgamma/gamma.hpp"
#include "pascalgamma/riordan.hpp"
#include "pascalgamma/transforms.hpp"

using namespace pascalgamma;
using testing::gam;
using testing::seq;
using testing::tri;
using YS = TruncatedSeries<YPolynomial>;

namespace {

YS random_yseries(std::mt19937& gen, std::size_t order) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<YPolynomial> c;
  for (std::size_t i = 0; i <= order; ++i) {
    c.push_back(i == 0 ? YPolynomial(1) : YPolynomial{d(gen), d(gen), d(gen)});
  }
  return YS(c, order);
}

}  // namespace

TEST_CASE("INVERT transform") {
  const auto y = YPolynomial::y();
  for (long r : {-2L, 1L, 3L}) {
    const auto gamma = YS::one(10) / YS(std::vector<YPolynomial>{1, -1, y.scaled(-r)}, 10);
    const auto h = YS::one(10) / YS(std::vector<YPolynomial>{1, -(y + 1), y.scaled(-r)}, 10);
    CHECK(invert_transform(gamma, -y) == h);
  }
  std::mt19937 gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_yseries(gen, 12);
    CHECK(invert_transform(s, YPolynomial()) == s);
    const YPolynomial a{1, -2, 3};
    CHECK(invert_transform(invert_transform(s, a), -a) == s);
  }
}

TEST_CASE("binomial transform") {
  const auto y = YPolynomial::y();
  std::mt19937 gen(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_yseries(gen, 10);
    CHECK(binomial_transform(s, YPolynomial()) == s);
    CHECK(binomial_transform(binomial_transform(s, -y), y) == s);
  }
  for (long r = -2; r <= 2; ++r) {
    CHECK(binomial_transform(narayana_gamma_gf(r, 10), y) == narayana_gf(r, 10));
    CHECK(binomial_transform(reverted_gamma_gf(r, 10), -y) == reverted_family_gf(r, 10));
  }
}

TEST_CASE("triangle reversion") {
  const auto n = revert_triangle(pascal_like_family(-1, 7), 7);
  CHECK(n.rows[6] == seq("1 21 105 175 105 21 1"));
  CHECK(n == alternate_row_signs(narayana_numbers(7)));
  CHECK(revert_triangle(pascal_like_family(0, 7), 7) == alternate_row_signs(pascal_like_family(0, 7)));
  CHECK(revert_triangle(pascal_like_family(1, 7), 7).rows[6] == seq("1 -9 -15 -15 -15 -9 1"));
  CHECK(reverted_family_gf(1, 6)[6] == YPolynomial{1, -9, -15, -15, -15, -9, 1});
  const auto y = YPolynomial::y();
  CHECK(reverted_family_gf(0, 8) == YS::one(8) / YS(std::vector<YPolynomial>{1, y + 1}, 8));
  for (long r = -3; r <= 3; ++r) {
    const auto h = pascal_like_family(r, 12);
    CHECK(revert_triangle(revert_triangle(h, 12), 12) == h);
    CHECK(triangle_from_gf(reverted_family_gf(r, 11), 12) == revert_triangle(h, 12));
  }
}

TEST_CASE("reversion of gamma-matrices") {
  CHECK(revert_gamma(gam("1; 1; 1 1; 1 2; 1 3 1; 1 4 3; 1 5 6 1"), 7) ==
        gam("1; -1; 1 -1; -1 3; 1 -6 2; -1 10 -10; 1 -15 30 -5"));
}

TEST_CASE("r-Narayana triangles") {
  CHECK(narayana_triangle(1, 7).rows[6] == seq("1 21 105 175 105 21 1"));
  CHECK(narayana_triangle(0, 7) == pascal_like_family(0, 7));
  CHECK(narayana_triangle(-1, 7).rows[6] == seq("1 -9 -15 -15 -15 -9 1"));
  CHECK(narayana_triangle(1, 12) == narayana_numbers(12));
  for (long r = -3; r <= 3; ++r) {
    CHECK(triangle_from_gf(narayana_gf(r, 9), 10) == narayana_triangle(r, 10));
    CHECK(gamma_from_gf(narayana_gamma_gf(r, 9), 10) == extract_gamma_solve(narayana_triangle(r, 10)));
  }
}

TEST_CASE("exponential gamma egf") {
  for (long r : {1L, 2L, -3L}) {
    CHECK(gamma_from_gf(egf_to_ogf(exponential_gamma_egf(r, 9)), 10) ==
          extract_gamma_solve(exp_pascal_like_family(r, 10)));
  }
}
