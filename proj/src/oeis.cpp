#include "pascalgamma/oeis.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace pascalgamma {

namespace detail {
struct EmbeddedBfile {
  const char* anum;
  const char* text;
};
// Generated from data/oeis by CMake.
extern const EmbeddedBfile kEmbeddedBfiles[];
extern const std::size_t kEmbeddedBfileCount;
}  // namespace detail

bool is_valid_anum(std::string_view anum) {
  static const std::regex pattern("A[0-9]{6}");
  return std::regex_match(anum.begin(), anum.end(), pattern);
}

OeisFixture parse_bfile(std::string_view text, std::string anum, FixtureSource source) {
  if (!is_valid_anum(anum)) throw ParseError("malformed A-number '" + anum + "'");
  OeisFixture fx;
  fx.anum = std::move(anum);
  fx.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<long> next;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index_text;
    std::string value_text;
    if (!(fields >> index_text >> value_text)) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    }
    long index = 0;
    try {
      index = std::stol(index_text);
    } catch (const std::exception&) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": bad index");
    }
    const Rational value = Rational::parse(value_text);
    if (!value.is_integer()) throw ParseError("b-file terms must be integers");
    if (next && index != *next) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": index " +
                       std::to_string(index) + " breaks the run at " + std::to_string(*next));
    }
    if (!next) fx.offset = index;
    next = index + 1;
    fx.terms.push_back(value.numerator());
  }
  if (fx.terms.empty()) throw ParseError("b-file for " + fx.anum + " has no terms");
  return fx;
}

std::string to_bfile(const OeisFixture& fixture) {
  std::string out = "# " + fixture.anum + "\n";
  for (std::size_t i = 0; i < fixture.terms.size(); ++i) {
    out += std::to_string(fixture.offset + static_cast<long>(i)) + " " +
           fixture.terms[i].get_str() + "\n";
  }
  return out;
}

std::vector<std::string> bundled_anums() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kEmbeddedBfileCount; ++i) {
    out.emplace_back(detail::kEmbeddedBfiles[i].anum);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OeisFixture> bundled_fixture(std::string_view anum) {
  for (std::size_t i = 0; i < detail::kEmbeddedBfileCount; ++i) {
    if (anum == detail::kEmbeddedBfiles[i].anum) {
      return parse_bfile(detail::kEmbeddedBfiles[i].text, std::string(anum),
                         FixtureSource::Bundled);
    }
  }
  return std::nullopt;
}

std::filesystem::path oeis_cache_root() {
  if (const char* env = std::getenv("PASCALGAMMA_OEIS_CACHE"); env && *env) return env;
  return ".oeis-cache";
}

PrefixComparison compare_prefix(const OeisFixture& fixture, const std::vector<BigInt>& sequence,
                                std::size_t prefix_len, std::size_t skip) {
  PrefixComparison cmp;
  if (skip + prefix_len > fixture.terms.size()) {
    cmp.detail = fixture.anum + " fixture has only " + std::to_string(fixture.terms.size()) +
                 " terms";
    return cmp;
  }
  for (std::size_t i = 0; i < prefix_len; ++i) {
    const long index = fixture.offset + static_cast<long>(skip + i);
    if (i >= sequence.size()) {
      cmp.divergence_index = index;
      cmp.detail = "sequence ends before index " + std::to_string(index);
      return cmp;
    }
    if (sequence[i] != fixture.terms[skip + i]) {
      cmp.divergence_index = index;
      cmp.detail = "index " + std::to_string(index) + ": expected " +
                   fixture.terms[skip + i].get_str() + ", got " + sequence[i].get_str();
      return cmp;
    }
    ++cmp.compared;
  }
  cmp.match = true;
  return cmp;
}

}  // namespace pascalgamma
