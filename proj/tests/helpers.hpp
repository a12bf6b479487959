#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgamma/rational.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/triangle.hpp"

namespace testing {

using pascalgamma::Rational;

// "1; 1 1; 1 2 1"
inline std::vector<std::vector<Rational>> rows_of(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string row;
  while (std::getline(in, row, ';')) {
    std::istringstream cells(row);
    std::string cell;
    auto& out = rows.emplace_back();
    while (cells >> cell) out.push_back(Rational::parse(cell));
  }
  return rows;
}

inline pascalgamma::Triangle tri(std::string_view text) { return pascalgamma::Triangle(rows_of(text)); }
inline pascalgamma::GammaMatrix gam(std::string_view text) {
  return pascalgamma::GammaMatrix(rows_of(text));
}

inline std::vector<Rational> seq(std::string_view text) { return rows_of(text).at(0); }

inline pascalgamma::RationalSeries series(std::string_view coeffs, std::size_t order) {
  return pascalgamma::RationalSeries(seq(coeffs), order);
}

inline std::vector<Rational> row(const pascalgamma::Triangle& t, std::size_t n) {
  return t.rows.at(n);
}

}  // namespace testing
