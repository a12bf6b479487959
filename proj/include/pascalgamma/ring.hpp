#pragma once

#include <concepts>
#include <optional>

#include "pascalgamma/rational.hpp"

namespace pascalgamma {

/// Exact commutative coefficient ring that contains the rationals.
/// `inverse()` returns nullopt for non-units.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R a, const R b, const Rational q) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<std::optional<R>>;
  { R::zero() } -> std::same_as<R>;
  { R::one() } -> std::same_as<R>;
  R(q);
};

}  // namespace pascalgamma
