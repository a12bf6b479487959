#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/rational.hpp"
#include "pascalgamma/ring.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/ypolynomial.hpp"

namespace pascalgamma {

enum class Symmetry { PascalLike, SignedPascalLike, Asymmetric };

std::string to_string(Symmetry s);

/// Lower-triangular array; row n holds entries k = 0..n.
template <CoefficientRing R>
struct BasicTriangle {
  std::vector<std::vector<R>> rows;

  BasicTriangle() = default;
  /// Throws InvalidSpec unless row n has n + 1 entries.
  explicit BasicTriangle(std::vector<std::vector<R>> r) : rows(std::move(r)) {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      if (rows[n].size() != n + 1) {
        throw InvalidSpec("triangle row " + std::to_string(n) + " has " +
                          std::to_string(rows[n].size()) + " entries, expected " +
                          std::to_string(n + 1));
      }
    }
  }

  std::size_t n_rows() const { return rows.size(); }
  const R& at(std::size_t n, std::size_t k) const { return rows.at(n).at(k); }
  const std::vector<R>& row(std::size_t n) const { return rows.at(n); }

  friend bool operator==(const BasicTriangle&, const BasicTriangle&) = default;
};

using Triangle = BasicTriangle<Rational>;

/// gamma-vectors stacked by row; row n holds entries i = 0..floor(n/2).
template <CoefficientRing R>
struct BasicGammaMatrix {
  std::vector<std::vector<R>> rows;

  BasicGammaMatrix() = default;
  explicit BasicGammaMatrix(std::vector<std::vector<R>> r) : rows(std::move(r)) {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      if (rows[n].size() != n / 2 + 1) {
        throw InvalidSpec("gamma row " + std::to_string(n) + " has " +
                          std::to_string(rows[n].size()) + " entries, expected " +
                          std::to_string(n / 2 + 1));
      }
    }
  }

  std::size_t n_rows() const { return rows.size(); }
  const R& at(std::size_t n, std::size_t k) const { return rows.at(n).at(k); }

  friend bool operator==(const BasicGammaMatrix&, const BasicGammaMatrix&) = default;
};

using GammaMatrix = BasicGammaMatrix<Rational>;

/// True when row n reads the same backwards.
template <CoefficientRing R>
bool is_palindromic(const std::vector<R>& row) {
  for (std::size_t k = 0, j = row.size(); k < j--; ++k) {
    if (!(row[k] == row[j])) return false;
  }
  return true;
}

/// First non-palindromic row, or n_rows() if there is none.
template <CoefficientRing R>
std::size_t first_non_palindromic_row(const BasicTriangle<R>& t) {
  for (std::size_t n = 0; n < t.n_rows(); ++n) {
    if (!is_palindromic(t.rows[n])) return n;
  }
  return t.n_rows();
}

template <CoefficientRing R>
Symmetry classify_symmetry(const BasicTriangle<R>& t) {
  if (first_non_palindromic_row(t) != t.n_rows()) return Symmetry::Asymmetric;
  bool unit = true;
  bool signed_unit = true;
  for (std::size_t n = 0; n < t.n_rows(); ++n) {
    const R& border = t.rows[n][0];
    const R one = R::one();
    if (!(border == one)) unit = false;
    if (!(border == (n % 2 == 0 ? one : -one))) signed_unit = false;
  }
  if (unit) return Symmetry::PascalLike;
  if (signed_unit) return Symmetry::SignedPascalLike;
  return Symmetry::Asymmetric;
}

template <CoefficientRing R>
std::vector<R> row_sums(const BasicTriangle<R>& t) {
  std::vector<R> out;
  for (const auto& row : t.rows) {
    R acc = R::zero();
    for (const auto& v : row) acc = acc + v;
    out.push_back(acc);
  }
  return out;
}

/// Diagonal sum n = sum over k <= n - k of T[n-k][k].
template <CoefficientRing R>
std::vector<R> diagonal_sums(const BasicTriangle<R>& t) {
  std::vector<R> out;
  for (std::size_t n = 0; n < t.n_rows(); ++n) {
    R acc = R::zero();
    for (std::size_t k = 0; 2 * k <= n; ++k) acc = acc + t.rows[n - k][k];
    out.push_back(acc);
  }
  return out;
}

/// Bivariate generating function sum_n (row-n polynomial in y) x^n.
TruncatedSeries<YPolynomial> triangle_gf(const Triangle& t);

/// Reads rows 0..rows-1 of a bivariate gf as a triangle. Throws InvalidSpec
/// if [x^n] has degree above n in y, OrderTooLow if the gf is too short.
Triangle triangle_from_gf(const TruncatedSeries<YPolynomial>& gf, std::size_t rows);

/// Same reading for a gamma gf (degree of [x^n] at most floor(n/2)).
GammaMatrix gamma_from_gf(const TruncatedSeries<YPolynomial>& gf, std::size_t rows);

TruncatedSeries<YPolynomial> gamma_gf(const GammaMatrix& g);

/// Multiplies row n by (-1)^n.
Triangle alternate_row_signs(const Triangle& t);
GammaMatrix alternate_row_signs(const GammaMatrix& g);

/// Every entry has denominator 1.
bool is_integral(const Triangle& t);
bool is_integral(const GammaMatrix& g);

Triangle truncate_rows(const Triangle& t, std::size_t rows);

}  // namespace pascalgamma
