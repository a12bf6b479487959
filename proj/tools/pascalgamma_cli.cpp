// pascalgamma command-line front end.
//
// Exit codes: 0 ok, 1 verify/compare failure, 2 usage, 3 method mismatch,
// 4 non-palindromic input, 5 insufficient depth, 6 missing fixture,
// 7 network failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pascalgamma/document.hpp"
#include "pascalgamma/families.hpp"
#include "pascalgamma/gamma.hpp"
#include "pascalgamma/jacobi.hpp"
#include "pascalgamma/oeis.hpp"
#include "pascalgamma/transforms.hpp"
#include "pascalgamma/verify.hpp"
#include "pascalgamma/yrational.hpp"

namespace pg = pascalgamma;

namespace {

enum Exit {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kMismatch = 3,
  kNotPalindromic = 4,
  kDepth = 5,
  kNoFixture = 6,
  kNetwork = 7,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

pg::Rational parse_r(const std::string& text) {
  try {
    return pg::Rational::parse(text);
  } catch (const pg::ParseError&) {
    throw UsageError("--r must be an integer or fraction, got '" + text + "'");
  }
}

// "y", "-y", "3", "2*y", "-1/2*y", "1 + y" style polynomials in y.
pg::YPolynomial parse_ypoly(std::string text) {
  std::erase(text, ' ');
  if (text.empty()) throw UsageError("empty polynomial");
  pg::YPolynomial out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of("+-", pos + 1);
    std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? text.size() : end;
    int sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      sign = term[0] == '-' ? -1 : 1;
      term.erase(0, 1);
    }
    long power = 0;
    std::string coeff = term;
    if (const auto y = term.find('y'); y != std::string::npos) {
      power = 1;
      if (y + 1 < term.size()) {
        if (term[y + 1] != '^') throw UsageError("bad polynomial term '" + term + "'");
        power = std::stol(term.substr(y + 2));
      }
      coeff = term.substr(0, y);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      if (coeff.empty()) coeff = "1";
    }
    try {
      out = out + pg::YPolynomial::monomial(pg::Rational::parse(coeff) * pg::Rational(sign), power);
    } catch (const pg::ParseError&) {
      throw UsageError("bad polynomial term '" + term + "'");
    }
  }
  return out;
}

std::map<std::string, std::string> params_of(const std::string& family, const std::string& r,
                                             std::size_t rows) {
  return {{"family", family}, {"r", r}, {"rows", std::to_string(rows)}};
}

void emit(const pg::TriangleDocument& doc, const std::string& format) {
  std::cout << pg::serialize(doc, pg::parse_format(format));
}

// Runs-length encoded stream "v ×k, w, ...".
template <class V>
std::string stream(const std::vector<V>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (!out.empty()) out += ", ";
    out += values[i].to_string();
    if (j - i > 1) out += " ×" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "(none)" : out;
}

template <class R>
void print_cf(const pg::BasicJacobiCF<R>& cf) {
  std::cout << "a: " << stream(cf.a) << " ; b: " << stream(cf.b);
  if (cf.finite) std::cout << " ; finite";
  std::cout << "\n";
}

template <class R>
void print_series(const pg::TruncatedSeries<R>& s) {
  for (std::size_t i = 0; i <= s.order(); ++i) std::cout << i << ": " << s[i].to_string() << "\n";
}

pg::Triangle load_triangle(const std::string& input, const std::string& family,
                           const std::string& r, std::size_t rows) {
  if (!input.empty()) return pg::document_triangle(pg::parse_any(read_input(input)));
  if (family.empty()) throw UsageError("need --input or a family");
  return pg::family_triangle(family, parse_r(r), rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pascal-like triangles, gamma-matrices and Jacobi continued fractions"};
  app.require_subcommand(1);

  // triangle
  std::string family;
  std::string r = "1";
  std::size_t rows = 7;
  std::string format = "plain";
  auto* triangle = app.add_subcommand("triangle", "Print a family triangle");
  triangle->add_option("--family", family, "ordinary, signed, exponential, stretched-gamma, "
                                           "narayana, reverted or eulerian")->required();
  triangle->add_option("--r", r, "Family parameter");
  triangle->add_option("--rows", rows, "Number of rows");
  triangle->add_option("--format", format, "json, csv or plain");

  // gamma
  std::string input;
  std::string builtin;
  std::string method = "solve";
  auto* gamma = app.add_subcommand("gamma", "Compute the gamma-matrix of a triangle");
  auto* gin = gamma->add_option("--input", input, "Triangle document (file or '-')");
  gamma->add_option("--builtin", builtin, "Family name instead of --input")->excludes(gin);
  gamma->add_option("--r", r, "Family parameter");
  gamma->add_option("--rows", rows, "Number of rows");
  gamma->add_option("--method", method, "solve, zeilberger, alphabeta, closed or all");
  gamma->add_option("--format", format, "json, csv or plain");

  // revert
  auto* revert = app.add_subcommand("revert", "Revert a triangle");
  auto* rin = revert->add_option("--input", input, "Triangle document (file or '-')");
  revert->add_option("--family", family, "Family name instead of --input")->excludes(rin);
  revert->add_option("--r", r, "Family parameter");
  revert->add_option("--rows", rows, "Number of rows");
  revert->add_option("--format", format, "json, csv or plain");

  // jacobi
  std::string y = "symbolic";
  std::size_t depth = 5;
  std::optional<std::size_t> evaluate;
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi continued fraction of a family gf");
  jacobi->add_option("--family", family, "Generating-function family")->required();
  jacobi->add_option("--r", r, "Family parameter");
  jacobi->add_option("--y", y, "'symbolic' or a rational value for y");
  jacobi->add_option("--depth", depth, "Number of levels");
  jacobi->add_option("--evaluate", evaluate, "Re-expand the fraction through x^N");

  // transform
  std::string kind;
  std::string param = "y";
  auto* transform = app.add_subcommand("transform", "INVERT or binomial transform of a family gf");
  transform->add_option("--kind", kind, "invert or binomial")->required()
      ->check(CLI::IsMember({"invert", "binomial"}));
  transform->add_option("--family", family, "Generating-function family")->required();
  transform->add_option("--r", r, "Family parameter");
  transform->add_option("--param", param, "Transform parameter, a polynomial in y");
  transform->add_option("--rows", rows, "Number of rows");
  transform->add_option("--format", format, "json, csv or plain");

  // verify
  std::string suite = "paper";
  std::optional<int> criterion;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name");
  verify->add_option("--criterion", criterion, "Only checks for this criterion");

  // oeis-compare
  std::string anum;
  std::optional<std::size_t> prefix;
  std::optional<std::size_t> skip;
  std::string terms;
  std::string terms_file;
  bool fetch = false;
  std::string base_url = "https://oeis.org";
  auto* compare = app.add_subcommand("oeis-compare", "Compare a sequence with an OEIS fixture");
  compare->add_option("--anum", anum, "A-number, e.g. A077938")->required();
  compare->add_option("--prefix", prefix, "Number of terms to compare");
  compare->add_option("--skip", skip, "Fixture terms to skip before comparing");
  auto* tflag = compare->add_option("--terms", terms, "Comma-separated sequence to compare");
  compare->add_option("--file", terms_file, "File with the sequence (whitespace/comma separated)")
      ->excludes(tflag);
  compare->add_flag("--fetch", fetch, "Fetch the b-file (cached) instead of the bundled copy");
  compare->add_option("--oeis-base-url", base_url)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*triangle) {
      const auto t = pg::family_triangle(family, parse_r(r), rows);
      emit(pg::make_document("triangle", params_of(family, r, rows), t.rows), format);
      return kOk;
    }

    if (*gamma) {
      const auto h = load_triangle(input, builtin, r, rows);
      const auto meta = input.empty() ? params_of(builtin, r, rows)
                                      : std::map<std::string, std::string>{{"input", input}};
      std::optional<pg::GammaMatrix> closed;
      if (method == "closed" || method == "all") {
        if (input.empty()) closed = pg::family_closed_gamma(builtin, parse_r(r), rows);
        if (!closed && method == "closed") throw UsageError("no closed form for this input");
      }
      pg::GammaMatrix result;
      if (method == "solve") {
        result = pg::extract_gamma_solve(h);
      } else if (method == "zeilberger") {
        result = pg::extract_gamma_zeilberger(h);
      } else if (method == "alphabeta") {
        result = pg::extract_gamma_alphabeta(h);
      } else if (method == "closed") {
        pg::detail::require_palindromic(h);
        result = *closed;
      } else if (method == "all") {
        result = pg::extract_gamma_solve(h);
        std::vector<std::pair<std::string, pg::GammaMatrix>> others = {
            {"zeilberger", pg::extract_gamma_zeilberger(h)},
            {"alphabeta", pg::extract_gamma_alphabeta(h)}};
        if (closed) others.emplace_back("closed", *closed);
        for (const auto& [name, other] : others) {
          if (!(other == result)) {
            std::cerr << "error: method " << name << " disagrees with solve\n";
            return kMismatch;
          }
        }
      } else {
        throw UsageError("unknown method '" + method + "'");
      }
      emit(pg::make_document("gamma", meta, result.rows), format);
      return kOk;
    }

    if (*revert) {
      const auto h = load_triangle(input, family, r, rows);
      const auto out = pg::revert_triangle(h, h.n_rows());
      const auto meta = input.empty() ? params_of(family, r, rows)
                                      : std::map<std::string, std::string>{{"input", input}};
      emit(pg::make_document("triangle", meta, out.rows), format);
      return kOk;
    }

    if (*jacobi) {
      if (depth == 0) throw UsageError("--depth must be positive");
      const auto gf = pg::family_gf(family, parse_r(r), 2 * depth - 1);
      if (y == "symbolic") {
        const auto cf = pg::jacobi_extract(
            gf.map([](const pg::YPolynomial& p) { return pg::YRationalFunction(p); }), depth);
        print_cf(cf);
        if (evaluate) print_series(pg::jacobi_evaluate(cf, *evaluate));
      } else {
        const auto y0 = parse_r(y);
        const auto cf = pg::jacobi_extract(
            gf.map([&](const pg::YPolynomial& p) { return p.evaluate(y0); }), depth);
        print_cf(cf);
        if (evaluate) print_series(pg::jacobi_evaluate(cf, *evaluate));
      }
      return kOk;
    }

    if (*transform) {
      if (rows == 0) throw UsageError("--rows must be positive");
      const auto gf = pg::family_gf(family, parse_r(r), rows - 1);
      const auto p = parse_ypoly(param);
      const auto out = kind == "invert" ? pg::invert_transform(gf, p)
                                        : pg::binomial_transform(gf, p);
      auto meta = params_of(family, r, rows);
      meta["transform"] = kind;
      meta["param"] = p.to_string();
      emit(pg::make_document("triangle", meta, pg::triangle_from_gf(out, rows).rows), format);
      return kOk;
    }

    if (*verify) {
      const auto results = pg::run_checks(pg::suite_checks(suite), criterion);
      std::vector<std::string> failed;
      for (const auto& res : results) {
        std::cout << (res.passed ? "PASS" : "FAIL") << " [" << res.criterion << "] " << res.name;
        if (!res.passed) {
          std::cout << ": " << res.detail;
          failed.push_back(res.name);
        }
        std::cout << "\n";
      }
      if (results.empty()) {
        std::cerr << "error: no checks selected\n";
        return kUsage;
      }
      if (!failed.empty()) {
        std::cout << "failed:";
        for (const auto& name : failed) std::cout << " " << name;
        std::cout << "\n";
        return kFailure;
      }
      std::cout << results.size() << " checks passed\n";
      return kOk;
    }

    if (*compare) {
      if (!pg::is_valid_anum(anum)) throw UsageError("malformed A-number '" + anum + "'");
      pg::OeisFixture fixture;
      if (fetch) {
        fixture = pg::fetch_fixture(anum, pg::oeis_cache_root(), base_url);
      } else if (auto bundled = pg::bundled_fixture(anum)) {
        fixture = *bundled;
      } else {
        std::cerr << "error: no bundled fixture for " << anum << " (use --fetch)\n";
        return kNoFixture;
      }

      const auto* source = pg::find_oeis_source(anum);
      std::vector<pg::BigInt> seq;
      std::size_t offset = skip.value_or(0);
      std::string text = terms;
      if (!terms_file.empty()) text = read_input(terms_file);
      if (!terms.empty() || !terms_file.empty()) {
        std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
          try {
            seq.emplace_back(tok);
          } catch (const std::invalid_argument&) {
            throw UsageError("bad term '" + tok + "'");
          }
        }
      } else {
        if (!source) throw UsageError("no built-in generator for " + anum + "; pass --terms");
        if (!skip) offset = source->skip;
      }
      if (offset > fixture.terms.size()) throw UsageError("--skip exceeds the fixture length");
      std::size_t n = fixture.terms.size() - offset;
      if (!seq.empty()) n = std::min(n, seq.size());
      if (prefix) n = *prefix;
      if (seq.empty() && source) seq = source->generate(n);

      const auto cmp = pg::compare_prefix(fixture, seq, n, offset);
      if (cmp.match) {
        std::cout << anum << ": match (" << cmp.compared << " terms)\n";
        return kOk;
      }
      std::cout << anum << ": mismatch";
      if (cmp.divergence_index) std::cout << " at index " << *cmp.divergence_index;
      std::cout << ": " << cmp.detail << "\n";
      return kFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pg::UnknownFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pg::NotReciprocal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotPalindromic;
  } catch (const pg::InsufficientDepth& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDepth;
  } catch (const pg::NetworkError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNetwork;
  } catch (const pg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
