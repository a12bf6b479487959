#include "pascalgamma/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pascalgamma/document.hpp"
#include "pascalgamma/families.hpp"
#include "pascalgamma/gamma.hpp"
#include "pascalgamma/jacobi.hpp"
#include "pascalgamma/oeis.hpp"
#include "pascalgamma/riordan.hpp"
#include "pascalgamma/transforms.hpp"
#include "pascalgamma/yrational.hpp"

namespace pascalgamma {

namespace {

using YSeries = TruncatedSeries<YPolynomial>;
using QySeries = TruncatedSeries<YRationalFunction>;

// "1; 1 1; 1 3 1" -> rows.
std::vector<std::vector<Rational>> parse_rows(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string s(text);
  std::istringstream in(s);
  std::string row_text;
  while (std::getline(in, row_text, ';')) {
    std::istringstream cells(row_text);
    std::string cell;
    auto& row = rows.emplace_back();
    while (cells >> cell) row.push_back(Rational::parse(cell));
  }
  return rows;
}

Triangle T(std::string_view text) { return Triangle(parse_rows(text)); }
GammaMatrix G(std::string_view text) { return GammaMatrix(parse_rows(text)); }

template <class Rows>
std::string render(const Rows& rows) {
  std::string out;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (n > 0) out += "; ";
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      if (k > 0) out += ' ';
      out += rows[n][k].to_string();
    }
  }
  return out;
}

std::string same(const Triangle& got, const Triangle& want, const std::string& what) {
  if (got == want) return {};
  return what + ": got [" + render(got.rows) + "] expected [" + render(want.rows) + "]";
}

std::string same(const GammaMatrix& got, const GammaMatrix& want, const std::string& what) {
  if (got == want) return {};
  return what + ": got [" + render(got.rows) + "] expected [" + render(want.rows) + "]";
}

std::string same_seq(const std::vector<Rational>& got, const std::vector<long>& want,
                     const std::string& what) {
  std::vector<Rational> w(want.begin(), want.end());
  if (got == w) return {};
  std::string g;
  for (const auto& v : got) g += v.to_string() + " ";
  return what + ": got " + g;
}

template <class S>
std::string same_series(const S& got, const S& want, const std::string& what) {
  if (got == want) return {};
  for (std::size_t i = 0; i <= std::min(got.order(), want.order()); ++i) {
    if (!(got[i] == want[i])) {
      return what + ": first difference at x^" + std::to_string(i) + ": " +
             got[i].to_string() + " vs " + want[i].to_string();
    }
  }
  return what + ": orders differ";
}

// Concatenates failure messages.
struct Collector {
  std::string failures;
  void operator()(const std::string& msg) {
    if (msg.empty()) return;
    if (!failures.empty()) failures += " | ";
    failures += msg;
  }
};

std::string three_methods(const Triangle& h, const GammaMatrix& want, const std::string& what) {
  Collector c;
  c(same(extract_gamma_solve(h), want, what + " (solve)"));
  c(same(extract_gamma_zeilberger(h), want, what + " (zeilberger)"));
  c(same(extract_gamma_alphabeta(h), want, what + " (alphabeta)"));
  return c.failures;
}

std::vector<std::string> render_rows(const BasicTriangle<YPolynomial>& t, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& v : t.rows.at(n)) out.push_back(v.to_string("r"));
  return out;
}

std::string same_symbolic(const BasicTriangle<YPolynomial>& t,
                          const std::vector<std::vector<std::string>>& want,
                          const std::string& what) {
  for (std::size_t n = 0; n < want.size(); ++n) {
    const auto got = render_rows(t, n);
    if (got != want[n]) {
      std::string g;
      for (const auto& s : got) g += "[" + s + "]";
      return what + ": row " + std::to_string(n) + " got " + g;
    }
  }
  return {};
}

const char* kOnes = "1; 1 1; 1 1 1; 1 1 1 1; 1 1 1 1 1; 1 1 1 1 1 1; 1 1 1 1 1 1 1";
const char* kBinomial = "1; 1 1; 1 2 1; 1 3 3 1; 1 4 6 4 1; 1 5 10 10 5 1; 1 6 15 20 15 6 1";
const char* kDelannoy =
    "1; 1 1; 1 3 1; 1 5 5 1; 1 7 13 7 1; 1 9 25 25 9 1; 1 11 41 63 41 11 1";
const char* kDelannoyGamma = "1; 1; 1 1; 1 2; 1 3 1; 1 4 3; 1 5 6 1";
const char* kOnesGamma = "1; 1; 1 -1; 1 -2; 1 -3 1; 1 -4 3; 1 -5 6 -1";
const char* kDeltaGamma = "1; 1; 1 0; 1 0; 1 0 0; 1 0 0; 1 0 0 0";
const char* kNarayana =
    "1; 1 1; 1 3 1; 1 6 6 1; 1 10 20 10 1; 1 15 50 50 15 1; 1 21 105 175 105 21 1";
const char* kNarayanaGamma = "1; 1; 1 1; 1 3; 1 6 2; 1 10 10; 1 15 30 5";

GammaMatrix random_gamma(std::mt19937& gen, std::size_t rows, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].push_back(1);
    for (std::size_t k = 1; k <= n / 2; ++k) out[n].push_back(dist(gen));
  }
  return GammaMatrix(std::move(out));
}

Triangle random_palindromic(std::mt19937& gen, std::size_t rows, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].assign(n + 1, Rational(1));
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const Rational v(dist(gen));
      out[n][k] = v;
      out[n][n - k] = v;
    }
    if (n >= 2 && n % 2 == 0) out[n][n / 2] = dist(gen);
  }
  return Triangle(std::move(out));
}

QySeries to_field(const YSeries& s) {
  return s.map([](const YPolynomial& p) { return YRationalFunction(p); });
}

// ---------------------------------------------------------------------------
// Criterion 1: printed matrices.

std::string check_binomial_gamma() {
  Collector c;
  const GammaMatrix delta = G(kDeltaGamma);
  c(same(expand_gamma(delta, 7), T(kBinomial), "expand(delta)"));
  c(three_methods(T(kBinomial), delta, "gamma(binomial)"));
  return c.failures;
}

std::string check_second_gamma_display() {
  const GammaMatrix g = G("1; 1; 1 1; 1 0; 1 0 1; 1 0 0; 1 0 0 1");
  return same(expand_gamma(g, 6), T("1; 1 1; 1 3 1; 1 3 3 1; 1 4 7 4 1; 1 5 10 10 5 1"),
              "expand(second display)");
}

std::string check_stretched_x2() {
  Collector c;
  const RiordanSpec spec(RiordanKind::Stretched, geometric_series(Rational(1), 6),
                         RationalSeries::monomial(1, 2, 6));
  const Triangle stretched = ordinary_triangle(spec, 7);
  c(same(stretched,
         T("1; 1 0; 1 1 0; 1 1 0 0; 1 1 1 0 0; 1 1 1 0 0 0; 1 1 1 1 0 0 0"),
         "stretched (1/(1-x), x^2)"));
  c(same(expand_gamma(gamma_from_stretched(stretched), 7),
         T("1; 1 1; 1 3 1; 1 4 4 1; 1 5 9 5 1; 1 6 14 14 6 1; 1 7 20 29 20 7 1"),
         "Pascal-like triangle of (1/(1-x), x^2)"));
  return c.failures;
}

std::string check_delannoy() {
  Collector c;
  const Triangle gamma_array = ordinary_triangle(ordinary_gamma_spec(Rational(1), 6), 7);
  c(same(gamma_array, T("1; 1 0; 1 1 0; 1 2 0 0; 1 3 1 0 0; 1 4 3 0 0 0; 1 5 6 1 0 0 0"),
         "stretched (1/(1-x), x^2/(1-x))"));
  c(same(expand_gamma(gamma_from_stretched(gamma_array), 7), T(kDelannoy), "expand"));
  c(same(pascal_like_family(1, 7), T(kDelannoy), "Delannoy A008288"));
  c(three_methods(T(kDelannoy), G(kDelannoyGamma), "gamma(Delannoy)"));
  return c.failures;
}

std::string check_eulerian() {
  Collector c;
  c(same(eulerian_triangle(7),
         T("1; 1 1; 1 4 1; 1 11 11 1; 1 26 66 26 1; 1 57 302 302 57 1; "
           "1 120 1191 2416 1191 120 1"),
         "Eulerian A008292"));
  c(three_methods(eulerian_triangle(7),
                  G("1; 1; 1 2; 1 8; 1 22 16; 1 52 136; 1 114 720 272"), "A101280"));
  return c.failures;
}

std::string check_all_ones() {
  Collector c;
  const RiordanSpec spec(RiordanKind::Ordinary, geometric_series(Rational(1), 6),
                         RationalSeries::x(6));
  c(same(ordinary_triangle(spec, 7), T(kOnes), "(1/(1-x), x)"));
  c(three_methods(T(kOnes), G(kOnesGamma), "gamma(all ones)"));
  for (long n = 0; n <= 14; ++n) {
    for (long k = 0; k <= n; ++k) {
      BigInt acc = 0;
      for (long i = 0; i <= n / 2; ++i) {
        acc += binom(n - 2 * i, k - i) * binom(n - i, i) * sign_pow(i);
      }
      if (acc != 1) {
        c("identity sum_i binom(n-2i,k-i) binom(n-i,i) (-1)^i = 1 fails at n=" +
          std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return c.failures;
}

std::string check_stretched_gamma_r1() {
  Collector c;
  const auto fam = stretched_gamma_family(Rational(1), 7);
  c(same(fam.gamma, G("1; 1; 1 1; 1 3; 1 5 1; 1 7 5; 1 9 13 1"), "gamma r=1"));
  c(same(fam.triangle,
         T("1; 1 1; 1 3 1; 1 6 6 1; 1 9 17 9 1; 1 12 36 36 12 1; 1 15 64 101 64 15 1"),
         "triangle r=1"));
  c(same_seq(row_sums(fam.triangle), {1, 2, 5, 14, 37, 98, 261}, "row sums A077938"));
  c(same_seq(diagonal_sums(fam.triangle), {1, 1, 2, 4, 8, 16, 31}, "diagonal sums A001591"));
  const auto big = stretched_gamma_family(Rational(1), 15).triangle;
  const auto one = RationalSeries::one(14);
  const auto rows_gf = one / RationalSeries(std::vector<Rational>{1, -2, -1, -2}, 14);
  const auto diag_gf = one / RationalSeries(std::vector<Rational>{1, -1, -1, -1, -1, -1}, 14);
  c(same_series(RationalSeries(row_sums(big), 14), rows_gf, "row sums vs 1/(1-2x-x^2-2x^3)"));
  c(same_series(RationalSeries(diagonal_sums(big), 14), diag_gf,
                "diagonal sums vs pentanacci gf"));
  return c.failures;
}

std::string check_prop10_symbolic() {
  Collector c;
  const auto r = YPolynomial::y();
  const auto fam = general_stretched_gamma_family(one_plus_rx_over_one_minus_x(r, 12), 15);
  c(same_symbolic(fam.triangle,
                  {{"1"},
                   {"1", "1"},
                   {"1", "3", "1"},
                   {"1", "5 + r", "5 + r", "1"},
                   {"1", "7 + 2*r", "13 + 4*r", "7 + 2*r", "1"},
                   {"1", "9 + 3*r", "25 + 11*r", "25 + 11*r", "9 + 3*r", "1"},
                   {"1", "11 + 4*r", "41 + 22*r + r^2", "63 + 36*r + 2*r^2", "41 + 22*r + r^2",
                    "11 + 4*r", "1"}},
                  "symbolic stretched-gamma rows"));
  const auto one = YSeries::one(14);
  const auto rows_gf = one / YSeries(std::vector<YPolynomial>{1, -2, -1, r.scaled(-2)}, 14);
  const auto diag_gf =
      one / YSeries(std::vector<YPolynomial>{1, -1, -1, -1, -r, -r}, 14);
  c(same_series(YSeries(row_sums(fam.triangle), 14), rows_gf, "row sums vs 1/(1-2x-x^2-2rx^3)"));
  c(same_series(YSeries(diagonal_sums(fam.triangle), 14), diag_gf,
                "diagonal sums vs generalized pentanacci gf"));
  return c.failures;
}

std::string check_reverted_triangles() {
  Collector c;
  const std::vector<std::pair<long, const char*>> h = {{-1, kOnes}, {0, kBinomial}, {1, kDelannoy}};
  const std::vector<const char*> reverted = {
      "1; -1 -1; 1 3 1; -1 -6 -6 -1; 1 10 20 10 1; -1 -15 -50 -50 -15 -1; 1 21 105 175 105 21 1",
      "1; -1 -1; 1 2 1; -1 -3 -3 -1; 1 4 6 4 1; -1 -5 -10 -10 -5 -1; 1 6 15 20 15 6 1",
      "1; -1 -1; 1 1 1; -1 0 0 -1; 1 -2 -4 -2 1; -1 5 10 10 5 -1; 1 -9 -15 -15 -15 -9 1"};
  const std::vector<const char*> gammas = {kOnesGamma, kDeltaGamma, kDelannoyGamma};
  const std::vector<const char*> reverted_gammas = {
      "1; -1; 1 1; -1 -3; 1 6 2; -1 -10 -10; 1 15 30 5",
      "1; -1; 1 0; -1 0; 1 0 0; -1 0 0; 1 0 0 0",
      "1; -1; 1 -1; -1 3; 1 -6 2; -1 10 -10; 1 -15 30 -5"};
  for (std::size_t i = 0; i < h.size(); ++i) {
    const long r = h[i].first;
    const std::string tag = " r=" + std::to_string(r);
    const Triangle fam = pascal_like_family(r, 7);
    c(same(fam, T(h[i].second), "family" + tag));
    const Triangle rev = revert_triangle(fam, 7);
    c(same(rev, T(reverted[i]), "reverted" + tag));
    c(same(triangle_from_gf(reverted_family_gf(r, 6), 7), T(reverted[i]), "reverted gf" + tag));
    c(three_methods(fam, G(gammas[i]), "gamma" + tag));
    c(three_methods(rev, G(reverted_gammas[i]), "reverted gamma" + tag));
    c(same(revert_gamma(G(gammas[i]), 7), G(reverted_gammas[i]), "reversion of gamma" + tag));
  }
  if (!(revert_triangle(pascal_like_family(-1, 7), 7) == alternate_row_signs(T(kNarayana)))) {
    c("reverted all-ones triangle is not (-1)^n Narayana");
  }
  return c.failures;
}

std::string check_r_narayana() {
  Collector c;
  const std::vector<long> rs = {-1, 0, 1};
  const std::vector<const char*> signed_rows = {
      "1; -1 -1; 1 3 1; -1 -5 -5 -1; 1 7 13 7 1; -1 -9 -25 -25 -9 -1; 1 11 41 63 41 11 1",
      "1; -1 -1; 1 2 1; -1 -3 -3 -1; 1 4 6 4 1; -1 -5 -10 -10 -5 -1; 1 6 15 20 15 6 1",
      "1; -1 -1; 1 1 1; -1 -1 -1 -1; 1 1 1 1 1; -1 -1 -1 -1 -1 -1; 1 1 1 1 1 1 1"};
  const std::vector<const char*> narayana = {
      "1; 1 1; 1 1 1; 1 0 0 1; 1 -2 -4 -2 1; 1 -5 -10 -10 -5 1; 1 -9 -15 -15 -15 -9 1",
      kBinomial, kNarayana};
  const std::vector<const char*> gammas = {
      "1; 1; 1 -1; 1 -3; 1 -6 2; 1 -10 10; 1 -15 30 -5", kDeltaGamma, kNarayanaGamma};
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string tag = " r=" + std::to_string(rs[i]);
    const Triangle s = signed_pascal_like_family(rs[i], 7);
    c(same(s, T(signed_rows[i]), "signed family" + tag));
    const Triangle nar = narayana_triangle(rs[i], 7);
    c(same(nar, T(narayana[i]), "r-Narayana" + tag));
    c(same(triangle_from_gf(narayana_gf(rs[i], 6), 7), T(narayana[i]), "r-Narayana gf" + tag));
    c(three_methods(nar, G(gammas[i]), "r-Narayana gamma" + tag));
    c(same(gamma_from_gf(narayana_gamma_gf(rs[i], 6), 7), G(gammas[i]),
           "r-Narayana gamma gf" + tag));
  }
  c(same(narayana_triangle(1, 12), narayana_numbers(12), "A001263 closed form"));
  const auto r = YPolynomial::y();
  const auto sym = tabulate_gamma<YPolynomial>(
      7, [&](long n, long k) { return gamma_closed_narayana(r, n, k); });
  const std::vector<std::vector<std::string>> want = {
      {"1"}, {"1"}, {"1", "r"}, {"1", "3*r"}, {"1", "6*r", "2*r^2"},
      {"1", "10*r", "10*r^2"}, {"1", "15*r", "30*r^2", "5*r^3"}};
  for (std::size_t n = 0; n < want.size(); ++n) {
    std::vector<std::string> got;
    for (const auto& v : sym.rows[n]) got.push_back(v.to_string("r"));
    if (got != want[n]) c("symbolic r-Narayana gamma row " + std::to_string(n));
  }
  return c.failures;
}

std::string check_exponential_family() {
  Collector c;
  const auto sym = exp_pascal_like_family(YPolynomial::y(), 7);
  c(same_symbolic(sym,
                  {{"1"},
                   {"1", "1"},
                   {"1", "2 + r", "1"},
                   {"1", "3 + 3*r", "3 + 3*r", "1"},
                   {"1", "4 + 6*r", "6 + 12*r + 3*r^2", "4 + 6*r", "1"},
                   {"1", "5 + 10*r", "10 + 30*r + 15*r^2", "10 + 30*r + 15*r^2", "5 + 10*r", "1"},
                   {"1", "6 + 15*r", "15 + 60*r + 45*r^2", "20 + 90*r + 90*r^2 + 15*r^3",
                    "15 + 60*r + 45*r^2", "6 + 15*r", "1"}},
                  "exponential family symbolic rows"));
  const Triangle a100862 =
      T("1; 1 1; 1 3 1; 1 6 6 1; 1 10 21 10 1; 1 15 55 55 15 1; 1 21 120 215 120 21 1");
  const GammaMatrix a100861 = G("1; 1; 1 1; 1 3; 1 6 3; 1 10 15; 1 15 45 15");
  c(same(exp_pascal_like_family(1, 7), a100862, "A100862"));
  c(three_methods(a100862, a100861, "A100861"));
  c(same(*family_closed_gamma("exponential", 1, 7), a100861, "A100861 closed form"));
  const Triangle r2 =
      T("1; 1 1; 1 4 1; 1 9 9 1; 1 16 42 16 1; 1 25 130 130 25 1; 1 36 315 680 315 36 1");
  const GammaMatrix a059344 = G("1; 1; 1 2; 1 6; 1 12 12; 1 20 60; 1 30 180 120");
  c(same(exp_pascal_like_family(2, 7), r2, "r=2 exponential family"));
  c(three_methods(r2, a059344, "A059344"));
  c(same_seq(row_sums(r2), {1, 2, 6, 20, 76, 312, 1384}, "A000898 row sums"));
  // gamma egf e^{x(1 + r x y/2)} scaled by n! gives the gamma rows.
  c(same(gamma_from_gf(egf_to_ogf(exponential_gamma_egf(1, 6)), 7), a100861,
         "gamma egf e^{x(1+xy/2)}"));
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 2: three-way agreement.

std::vector<std::pair<std::string, Triangle>> family_triangles(std::size_t rows) {
  std::vector<std::pair<std::string, Triangle>> out;
  for (const auto& fam : {"ordinary", "signed", "exponential", "stretched-gamma", "narayana",
                          "reverted"}) {
    for (long r = -3; r <= 3; ++r) {
      out.emplace_back(std::string(fam) + " r=" + std::to_string(r),
                       family_triangle(fam, r, rows));
    }
  }
  out.emplace_back("eulerian", eulerian_triangle(rows));
  out.emplace_back("narayana numbers", narayana_numbers(rows));
  return out;
}

std::string agree(const Triangle& h, const std::string& what) {
  const auto a = extract_gamma_solve(h);
  Collector c;
  c(same(extract_gamma_zeilberger(h), a, what + " zeilberger vs solve"));
  c(same(extract_gamma_alphabeta(h), a, what + " alphabeta vs solve"));
  return c.failures;
}

std::string check_three_methods_families() {
  Collector c;
  for (const auto& [name, h] : family_triangles(17)) c(agree(h, name));
  return c.failures;
}

std::string check_three_methods_random() {
  Collector c;
  std::mt19937 gen(7U);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = expand_gamma(random_gamma(gen, 17, -9, 9), 17);
    if (classify_symmetry(h) != Symmetry::PascalLike) c("random triangle not Pascal-like");
    c(agree(h, "random #" + std::to_string(trial)));
  }
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 3: round trips.

std::string check_gamma_round_trips() {
  Collector c;
  std::mt19937 gen(11U);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_gamma(gen, 17, -20, 20);
    c(same(extract_gamma_solve(expand_gamma(g, 17)), g,
           "extract(expand) random #" + std::to_string(trial)));
  }
  for (const auto& [name, h] : family_triangles(17)) {
    c(same(expand_gamma(extract_gamma_solve(h), 17), h, "expand(extract) " + name));
  }
  return c.failures;
}

std::string check_revert_involution() {
  Collector c;
  for (const auto& fam : {"ordinary", "signed", "exponential", "stretched-gamma", "narayana"}) {
    for (long r = -3; r <= 3; ++r) {
      const auto h = family_triangle(fam, r, 15);
      c(same(revert_triangle(revert_triangle(h, 15), 15), h,
             std::string("revert twice ") + fam + " r=" + std::to_string(r)));
    }
  }
  return c.failures;
}

std::string check_jacobi_round_trip() {
  Collector c;
  constexpr std::size_t depth = 6;
  for (const auto& name : {"ordinary", "reverted", "reverted-gamma", "narayana", "narayana-gamma",
                           "exponential", "exponential-gamma"}) {
    for (long r : {-2L, -1L, 1L, 2L}) {
      const auto gf = to_field(family_gf(name, r, 2 * depth));
      const auto cf = jacobi_extract(gf, depth);
      c(same_series(jacobi_evaluate(cf, 2 * depth), gf,
                    std::string("evaluate(extract) ") + name + " r=" + std::to_string(r)));
    }
  }
  std::mt19937 gen(5U);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    BasicJacobiCF<Rational> cf;
    for (std::size_t i = 0; i < depth; ++i) {
      cf.a.emplace_back(BigInt(num(gen)), BigInt(den(gen)));
      int b = 0;
      while (b == 0) b = num(gen);
      cf.b.emplace_back(BigInt(b), BigInt(den(gen)));
    }
    const auto series = jacobi_evaluate(cf, 2 * depth);
    if (!(jacobi_extract(series, depth) == cf)) {
      c("extract(evaluate) random CF #" + std::to_string(trial));
    }
    c(same_series(jacobi_evaluate(jacobi_extract(series, depth), 2 * depth), series,
                  "evaluate(extract) random series #" + std::to_string(trial)));
  }
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 4: closed forms.

template <class Fn>
std::string compare_gamma(const GammaMatrix& got, Fn&& closed, const std::string& what) {
  for (std::size_t n = 0; n < got.n_rows(); ++n) {
    for (std::size_t k = 0; k <= n / 2; ++k) {
      const Rational want = closed(static_cast<long>(n), static_cast<long>(k));
      if (!(got.rows[n][k] == want)) {
        return what + " at (" + std::to_string(n) + "," + std::to_string(k) + "): got " +
               got.rows[n][k].to_string() + " expected " + want.to_string();
      }
    }
  }
  return {};
}

std::string check_prop4_sums() {
  Collector c;
  for (long r = -3; r <= 3; ++r) {
    const auto h = pascal_like_family(r, 15);
    for (long n = 0; n <= 14; ++n) {
      for (long k = 0; k <= n; ++k) {
        const auto& v = h.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
        if (!(pascal_like_entry_sum_r(r, n, k) == v) ||
            !(pascal_like_entry_sum_r_plus_1(r, n, k) == v)) {
          c("two-sum entry formulas at r=" + std::to_string(r) + " (" + std::to_string(n) + "," +
            std::to_string(k) + ")");
        }
      }
    }
  }
  return c.failures;
}

std::string check_gamma_closed_forms() {
  Collector c;
  for (long r = -3; r <= 3; ++r) {
    const Rational q(r);
    const std::string tag = " r=" + std::to_string(r);
    c(compare_gamma(extract_gamma_solve(pascal_like_family(r, 15)),
                    [&](long n, long k) { return gamma_closed_ordinary(q, n, k); },
                    "ordinary gamma closed form" + tag));
    c(compare_gamma(extract_gamma_solve(signed_pascal_like_family(r, 15)),
                    [&](long n, long k) { return gamma_closed_signed(q, n, k); },
                    "signed family gamma" + tag));
    const auto rev = revert_triangle(pascal_like_family(r, 15), 15);
    c(compare_gamma(extract_gamma_solve(rev),
                    [&](long n, long k) { return gamma_closed_reverted(q, n, k); },
                    "reverted gamma closed form" + tag));
    for (long n = 0; n <= 14; ++n) {
      for (long i = 0; i <= n; ++i) {
        if (!(reverted_family_entry(q, n, i) ==
              rev.at(static_cast<std::size_t>(n), static_cast<std::size_t>(i)))) {
          c("reverted entry closed form at" + tag + " (" + std::to_string(n) + "," + std::to_string(i) + ")");
        }
      }
    }
    c(compare_gamma(extract_gamma_solve(narayana_triangle(r, 15)),
                    [&](long n, long k) { return gamma_closed_narayana(q, n, k); },
                    "r-Narayana gamma" + tag));
    const auto ex = exp_pascal_like_family(r, 15);
    c(compare_gamma(extract_gamma_solve(ex),
                    [&](long n, long k) { return gamma_closed_exponential(q, n, k); },
                    "exponential gamma" + tag));
    for (long n = 0; n <= 14; ++n) {
      for (long k = 0; k <= n; ++k) {
        if (!(exp_pascal_like_entry(q, n, k) ==
              ex.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)))) {
          c("corrected exponential closed form at" + tag + " (" + std::to_string(n) + "," +
            std::to_string(k) + ")");
        }
      }
    }
  }
  return c.failures;
}

std::string check_missing_binomial() {
  const Rational printed = exp_pascal_like_entry_without_binomial(1, 4, 2);
  const Rational corrected = exp_pascal_like_entry(1, 4, 2);
  const Rational actual = exp_pascal_like_family(1, 5).at(4, 2);
  if (printed == Rational(15) && corrected == Rational(21) && actual == Rational(21)) return {};
  return "formula without binom(k,j) gives " + printed.to_string() + ", corrected " +
         corrected.to_string() + ", array " + actual.to_string() + " (expected 15, 21, 21)";
}

// ---------------------------------------------------------------------------
// Criterion 5: J-fractions.

using CfEntry = std::function<YRationalFunction(long r, std::size_t n)>;

std::string check_cf_stream(const std::string& name, CfEntry a, CfEntry b) {
  Collector c;
  constexpr std::size_t depth = 6;
  for (long r : {-2L, -1L, 1L, 2L, 3L}) {
    const auto cf = jacobi_extract(to_field(family_gf(name, r, 2 * depth)), depth);
    const std::string tag = name + " r=" + std::to_string(r);
    if (cf.a.size() != depth || cf.b.size() != depth || cf.finite) {
      c(tag + ": unexpected J-fraction shape");
      continue;
    }
    for (std::size_t n = 0; n < depth; ++n) {
      if (!(cf.a[n] == a(r, n))) c(tag + ": a_" + std::to_string(n) + " = " + cf.a[n].to_string());
      if (!(cf.b[n] == b(r, n))) c(tag + ": b_" + std::to_string(n) + " = " + cf.b[n].to_string());
    }
  }
  return c.failures;
}

YRationalFunction ry(long r, long mult) {
  return YRationalFunction(YPolynomial::y().scaled(Rational(r * mult)));
}

std::string check_cf_reverted() {
  Collector c;
  const YRationalFunction minus_y1(YPolynomial{-1, -1});
  c(check_cf_stream("reverted", [&](long, std::size_t) { return minus_y1; },
                    [](long r, std::size_t) { return ry(r, -1); }));
  c(check_cf_stream("reverted-gamma", [](long, std::size_t) { return YRationalFunction(-1); },
                    [](long r, std::size_t) { return ry(r, -1); }));
  return c.failures;
}

std::string check_cf_narayana() {
  Collector c;
  const YRationalFunction y1(YPolynomial{1, 1});
  c(check_cf_stream("narayana", [&](long, std::size_t) { return y1; },
                    [](long r, std::size_t) { return ry(r, 1); }));
  c(check_cf_stream("narayana-gamma", [](long, std::size_t) { return YRationalFunction(1); },
                    [](long r, std::size_t) { return ry(r, 1); }));
  return c.failures;
}

std::string check_cf_exponential() {
  Collector c;
  const YRationalFunction y1(YPolynomial{1, 1});
  c(check_cf_stream("exponential", [&](long, std::size_t) { return y1; },
                    [](long r, std::size_t n) { return ry(r, static_cast<long>(n) + 1); }));
  c(check_cf_stream("exponential-gamma", [](long, std::size_t) { return YRationalFunction(1); },
                    [](long r, std::size_t n) { return ry(r, static_cast<long>(n) + 1); }));
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 6: transform identities.

std::string check_invert_relation() {
  Collector c;
  const auto y = YPolynomial::y();
  for (long r = -2; r <= 2; ++r) {
    const std::string tag = " r=" + std::to_string(r);
    const auto gamma = ordinary_gamma_gf(r, 12);
    const auto h = bivariate_gf(pascal_like_spec(Rational(r), 12), 12);
    c(same_series(invert_transform(gamma, -y), h, "INVERT: gamma/(1 - yx gamma) = h" + tag));
    c(same_series(invert_transform(h, y), gamma, "INVERT(-y) undoes it" + tag));
  }
  return c.failures;
}

std::string check_binomial_relations() {
  Collector c;
  const auto y = YPolynomial::y();
  for (long r = -2; r <= 2; ++r) {
    const std::string tag = " r=" + std::to_string(r);
    const auto hs = reverted_family_gf(r, 12);
    const auto gs = reverted_gamma_gf(r, 12);
    c(same_series(binomial_transform(gs, -y), hs, "reverted: h* = (-y)-th transform of g*" + tag));
    c(same_series(binomial_transform(hs, y), gs, "reverted: g* = y-th transform of h*" + tag));
    const auto hn = narayana_gf(r, 12);
    const auto gn = narayana_gamma_gf(r, 12);
    c(same_series(binomial_transform(gn, y), hn, "Narayana: h* = y-th transform of g*" + tag));
    c(same_series(binomial_transform(hn, -y), gn, "Narayana: g* = (-y)-th transform of h*" + tag));
    // Shift law on the J-fractions.
    BasicJacobiCF<YPolynomial> gcf;
    for (int i = 0; i < 6; ++i) {
      gcf.a.push_back(-1);
      gcf.b.push_back(y.scaled(-r));
    }
    if (r != 0) {
      c(same_series(jacobi_evaluate(binomial_transform_cf(gcf, -y), 12), hs,
                    "J-fraction shift a -> a - y" + tag));
    }
  }
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 7: integrality.

std::string check_integrality() {
  Collector c;
  std::mt19937 gen(3U);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_palindromic(gen, 17, -50, 50);
    if (classify_symmetry(h) != Symmetry::PascalLike) {
      c("generator produced a non-Pascal-like triangle");
      continue;
    }
    if (!is_integral(extract_gamma_solve(h)) || !is_integral(extract_gamma_zeilberger(h)) ||
        !is_integral(extract_gamma_alphabeta(h))) {
      c("non-integral gamma for random triangle #" + std::to_string(trial));
    }
  }
  return c.failures;
}

// ---------------------------------------------------------------------------
// Criterion 8: serialization and fixtures.

std::string check_oeis_fixtures() {
  Collector c;
  const auto anums = bundled_anums();
  if (anums.size() != 14) c("expected 14 bundled fixtures, found " + std::to_string(anums.size()));
  for (const auto& anum : anums) {
    const auto* src = find_oeis_source(anum);
    if (!src) {
      c("no generator for " + anum);
      continue;
    }
    const auto fx = *bundled_fixture(anum);
    const std::size_t prefix = fx.terms.size() - src->skip;
    const auto cmp = compare_prefix(fx, src->generate(prefix), prefix, src->skip);
    if (!cmp.match) c(anum + ": " + cmp.detail);
  }
  return c.failures;
}

std::string check_serialization() {
  Collector c;
  std::mt19937 gen(13U);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> rows(9);
    for (std::size_t n = 0; n < rows.size(); ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        Rational v(BigInt(num(gen)), BigInt(den(gen)));
        if (trial % 2 == 0) v *= Rational(BigInt("123456789012345678901234567890"));
        rows[n].push_back(v);
      }
    }
    const auto doc = make_document("triangle", {{"rows", "9"}}, rows, {{"source", "random"}});
    for (auto fmt : {Format::Json, Format::Csv, Format::Plain}) {
      const std::string text = serialize(doc, fmt);
      const auto back = fmt == Format::Json ? parse_json(text)
                                            : make_document("triangle", {{"rows", "9"}},
                                                            parse_delimited(text, fmt),
                                                            {{"source", "random"}});
      if (document_values(back) != rows) c("round trip lost values");
      if (serialize(back, fmt) != text) c("round trip not byte-exact");
    }
  }
  return c.failures;
}

std::vector<Check> reference_suite() {
  return {
      {1, "binomial-gamma", check_binomial_gamma},
      {1, "second-gamma-display", check_second_gamma_display},
      {1, "stretched-x2", check_stretched_x2},
      {1, "delannoy", check_delannoy},
      {1, "eulerian-A101280", check_eulerian},
      {1, "all-ones", check_all_ones},
      {1, "stretched-gamma-r1-sums", check_stretched_gamma_r1},
      {1, "stretched-gamma-symbolic", check_prop10_symbolic},
      {1, "reverted-triangles", check_reverted_triangles},
      {1, "r-narayana", check_r_narayana},
      {1, "exponential-family", check_exponential_family},
      {2, "three-methods-families", check_three_methods_families},
      {2, "three-methods-random", check_three_methods_random},
      {3, "gamma-round-trips", check_gamma_round_trips},
      {3, "revert-involution", check_revert_involution},
      {3, "jacobi-round-trip", check_jacobi_round_trip},
      {4, "entry-two-sums", check_prop4_sums},
      {4, "gamma-closed-forms", check_gamma_closed_forms},
      {4, "exponential-missing-binomial", check_missing_binomial},
      {5, "jfraction-reverted", check_cf_reverted},
      {5, "jfraction-narayana", check_cf_narayana},
      {5, "jfraction-exponential", check_cf_exponential},
      {6, "invert-relation", check_invert_relation},
      {6, "binomial-transform-relations", check_binomial_relations},
      {7, "gamma-integrality", check_integrality},
      {8, "oeis-fixtures", check_oeis_fixtures},
      {8, "serialization-round-trip", check_serialization},
  };
}

// ---------------------------------------------------------------------------

std::vector<BigInt> integers(const std::vector<Rational>& v, std::size_t count) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < count && i < v.size(); ++i) out.push_back(v[i].numerator());
  return out;
}

template <class Rows>
std::vector<BigInt> flatten(const Rows& rows, std::size_t count) {
  std::vector<BigInt> out;
  for (const auto& row : rows) {
    for (const auto& v : row) {
      if (out.size() == count) return out;
      out.push_back(v.numerator());
    }
  }
  return out;
}

// Rows needed so a triangle (or gamma-matrix) flattening has `count` terms.
std::size_t rows_for(std::size_t count, bool gamma) {
  std::size_t rows = 0;
  std::size_t total = 0;
  while (total < count) {
    total += gamma ? rows / 2 + 1 : rows + 1;
    ++rows;
  }
  return std::max<std::size_t>(rows, 1);
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper"}; }

std::vector<Check> suite_checks(std::string_view suite) {
  if (suite == "paper") return reference_suite();
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    std::optional<int> criterion) {
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    if (criterion && check.criterion != *criterion) continue;
    CheckResult res{check.criterion, check.name, false, {}};
    try {
      res.detail = check.run();
      res.passed = res.detail.empty();
    } catch (const std::exception& e) {
      res.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

const std::vector<OeisSource>& oeis_sources() {
  static const std::vector<OeisSource> sources = {
      {"A000108", "Catalan numbers: catalan_series", 0,
       [](std::size_t n) {
         const auto c = catalan_series<Rational>(n == 0 ? 0 : n - 1);
         return integers(std::vector<Rational>(c.coefficients().begin(), c.coefficients().end()), n);
       }},
      {"A000898", "row sums of the exponential family, r=2", 0,
       [](std::size_t n) { return integers(row_sums(exp_pascal_like_family(2, n)), n); }},
      {"A001263", "r-Narayana triangle, r=1", 0,
       [](std::size_t n) { return flatten(narayana_triangle(1, rows_for(n, false)).rows, n); }},
      {"A001591", "diagonal sums of the stretched-gamma family, r=1", 4,
       [](std::size_t n) {
         return integers(diagonal_sums(stretched_gamma_family(Rational(1), n).triangle), n);
       }},
      {"A007318", "ordinary family, r=0", 0,
       [](std::size_t n) { return flatten(pascal_like_family(0, rows_for(n, false)).rows, n); }},
      {"A008288", "ordinary family, r=1 (Delannoy)", 0,
       [](std::size_t n) { return flatten(pascal_like_family(1, rows_for(n, false)).rows, n); }},
      {"A008292", "Eulerian triangle", 0,
       [](std::size_t n) { return flatten(eulerian_triangle(rows_for(n, false)).rows, n); }},
      {"A055151", "gamma-matrix of the Narayana triangle", 0,
       [](std::size_t n) {
         return flatten(extract_gamma_solve(narayana_triangle(1, rows_for(n, true))).rows, n);
       }},
      {"A059344", "gamma-matrix of the exponential family, r=2", 0,
       [](std::size_t n) {
         return flatten(extract_gamma_solve(exp_pascal_like_family(2, rows_for(n, true))).rows, n);
       }},
      {"A077938", "row sums of the stretched-gamma family, r=1", 0,
       [](std::size_t n) {
         return integers(row_sums(stretched_gamma_family(Rational(1), n).triangle), n);
       }},
      {"A100861", "gamma-matrix of the exponential family, r=1", 0,
       [](std::size_t n) {
         return flatten(extract_gamma_solve(exp_pascal_like_family(1, rows_for(n, true))).rows, n);
       }},
      {"A100862", "exponential family, r=1", 0,
       [](std::size_t n) { return flatten(exp_pascal_like_family(1, rows_for(n, false)).rows, n); }},
      {"A101280", "gamma-matrix of the Eulerian triangle", 0,
       [](std::size_t n) {
         return flatten(extract_gamma_alphabeta(eulerian_triangle(rows_for(n, true))).rows, n);
       }},
      {"A271875", "Riordan array (1, x/c(x))", 0,
       [](std::size_t n) {
         const std::size_t rows = rows_for(n, false);
         std::vector<std::vector<Rational>> t(rows);
         for (std::size_t i = 0; i < rows; ++i) {
           for (std::size_t k = 0; k <= i; ++k) {
             t[i].push_back(beta_entry(static_cast<long>(i), static_cast<long>(k)));
           }
         }
         return flatten(t, n);
       }},
  };
  return sources;
}

const OeisSource* find_oeis_source(std::string_view anum) {
  for (const auto& s : oeis_sources()) {
    if (s.anum == anum) return &s;
  }
  return nullptr;
}

}  // namespace pascalgamma
