#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/rational.hpp"

namespace pascalgamma {

struct NetworkError : Error { using Error::Error; };

enum class FixtureSource { Bundled, Fetched };

struct OeisFixture {
  std::string anum;
  long offset = 0;  // index of the first term
  std::vector<BigInt> terms;
  FixtureSource source = FixtureSource::Bundled;
};

/// "A" followed by exactly six digits.
bool is_valid_anum(std::string_view anum);

/// Parses b-file text: "index value" lines, '#' comments and blank lines
/// ignored; indices must be consecutive. Throws ParseError.
OeisFixture parse_bfile(std::string_view text, std::string anum, FixtureSource source);

std::string to_bfile(const OeisFixture& fixture);

/// A-numbers with a fixture compiled into the library, sorted.
std::vector<std::string> bundled_anums();
std::optional<OeisFixture> bundled_fixture(std::string_view anum);

/// Cache directory: $PASCALGAMMA_OEIS_CACHE or ./.oeis-cache.
std::filesystem::path oeis_cache_root();

/// Returns the cached b-file or downloads <base_url>/<anum>/b<digits>.txt
/// into the cache (under a lock file). Throws NetworkError on failure.
OeisFixture fetch_fixture(std::string_view anum, const std::filesystem::path& cache_root,
                          std::string_view base_url = "https://oeis.org");

struct PrefixComparison {
  bool match = false;
  std::size_t compared = 0;
  /// b-file index of the first differing term, if any.
  std::optional<long> divergence_index;
  std::string detail;
};

/// Compares `sequence` with the fixture terms starting `skip` terms in,
/// over the first prefix_len terms.
PrefixComparison compare_prefix(const OeisFixture& fixture, const std::vector<BigInt>& sequence,
                                std::size_t prefix_len, std::size_t skip = 0);

}  // namespace pascalgamma
