#pragma once

#include <concepts>
#include <string>
#include <type_traits>

#include "hypsec/exactalg/finite_field.hpp"
#include "hypsec/exactalg/rational.hpp"

namespace hypsec {

/// Exact field element. Constants are derived from an existing element
/// ("like"), since finite-field elements carry their field.
template <class F>
concept FieldElement = std::regular<F> && requires(const F a, const F b, long n) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.zero_like() } -> std::same_as<F>;
  { a.one_like() } -> std::same_as<F>;
  { a.from_int(n) } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
  { a < b } -> std::same_as<bool>;
};

template <class F>
inline constexpr bool is_finite_field_v = std::is_same_v<F, Gf>;

/// Characteristic of the field an element belongs to (0 for the rationals).
inline std::uint64_t characteristic_of(const Rational&) { return 0; }
inline std::uint64_t characteristic_of(const Gf& a) { return a.field().characteristic(); }

/// Throws unless the field has characteristic 0 or at least 5.
template <FieldElement F>
void require_supported_characteristic(const F& like) {
  const auto c = characteristic_of(like);
  if (c != 0 && c < 5) throw std::invalid_argument("characteristic restriction: p must be >= 5");
}

}  // namespace hypsec
