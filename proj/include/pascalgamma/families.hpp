#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascalgamma/errors.hpp"
#include "pascalgamma/rational.hpp"
#include "pascalgamma/series.hpp"
#include "pascalgamma/triangle.hpp"
#include "pascalgamma/ypolynomial.hpp"

namespace pascalgamma {

struct UnknownFamily : Error { using Error::Error; };

/// Triangle families reachable by name:
///   ordinary         (1/(1-x), x(1+rx)/(1-x))
///   signed           (1/(1+x), -x(1+rx)/(1+x))
///   exponential      [e^x, x(1+rx/2)]
///   stretched-gamma  generated by (1/(1-x), x^2(1+rx)/(1-x))
///   narayana         r-Narayana triangle
///   reverted         reversion of `ordinary`
///   eulerian         A008292 (r ignored)
const std::vector<std::string>& triangle_family_names();
Triangle family_triangle(std::string_view family, const Rational& r, std::size_t rows);

/// gamma-matrix from the family's closed form (nullopt for eulerian).
std::optional<GammaMatrix> family_closed_gamma(std::string_view family, const Rational& r,
                                               std::size_t rows);

/// Ordinary bivariate generating functions by name: each triangle family
/// and "<family>-gamma" for its gamma-matrix (not eulerian).
const std::vector<std::string>& gf_family_names();
TruncatedSeries<YPolynomial> family_gf(std::string_view name, const Rational& r,
                                       std::size_t order);

}  // namespace pascalgamma
