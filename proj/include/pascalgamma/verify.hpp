#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgamma/rational.hpp"

namespace pascalgamma {

/// A named check; returns an empty string on success or a failure detail.
struct Check {
  int criterion;
  std::string name;
  std::function<std::string()> run;
};

struct CheckResult {
  int criterion;
  std::string name;
  bool passed;
  std::string detail;
};

/// Suites: "paper" (every check). Throws std::invalid_argument otherwise.
std::vector<Check> suite_checks(std::string_view suite);

std::vector<std::string> suite_names();

/// Runs checks, converting thrown exceptions into failures.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    std::optional<int> criterion = std::nullopt);

/// Library-side generator for a bundled OEIS sequence.
struct OeisSource {
  std::string anum;
  std::string description;
  /// Leading fixture terms the generator does not produce.
  std::size_t skip;
  std::function<std::vector<BigInt>(std::size_t count)> generate;
};

const std::vector<OeisSource>& oeis_sources();
const OeisSource* find_oeis_source(std::string_view anum);

}  // namespace pascalgamma
