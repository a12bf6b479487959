// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "pascalgamma/oeis.hpp"
#include "pascalgamma/verify.hpp"

namespace pg = pascalgamma;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "printed matrices reproduce exactly"},
    {2, "solve = zeilberger = alphabeta"},
    {3, "round trips"},
    {4, "closed forms match the engine"},
    {5, "J-fraction streams over Q(y)"},
    {6, "transform identities"},
    {7, "gamma integrality"},
    {8, "CLI contract and serialization"},
};

std::vector<std::string> cli_contract() {
  std::vector<std::string> failures;
  const auto verify = testing::run_cli("verify --suite paper");
  if (verify.code != 0) failures.push_back("`verify --suite paper` exited " + std::to_string(verify.code));
  for (const auto& anum : pg::bundled_anums()) {
    const auto r = testing::run_cli("oeis-compare --anum " + anum);
    if (r.code != 0) failures.push_back("oeis-compare " + anum + ": " + testing::last_line(r.out));
  }
  const auto corrupted = testing::run_cli("oeis-compare --anum A077938 --terms 1,2,5,14,38");
  if (corrupted.code == 0) failures.push_back("corrupted sequence was accepted");
  return failures;
}

}  // namespace

int main() {
  const auto checks = pg::suite_checks("paper");
  bool all_passed = true;
  for (const auto& [criterion, title] : kTitles) {
    std::vector<std::string> failures;
    for (const auto& res : pg::run_checks(checks, criterion)) {
      if (!res.passed) failures.push_back(res.name + ": " + res.detail);
    }
    if (criterion == 8) {
      for (auto& f : cli_contract()) failures.push_back(std::move(f));
    }
    const bool ok = failures.empty();
    all_passed = all_passed && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << title << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
  }
  return all_passed ? 0 : 1;
}
