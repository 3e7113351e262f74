#pragma once

#include <vector>

#include "hypsec/exactalg/unipoly.hpp"

namespace hypsec {

/// Distinct roots lying in the coefficient field, sorted ascending.
/// Rationals: rational root test over the divisors of the cleared
/// coefficients. Finite fields: gcd with t^q - t followed by equal-degree
/// splitting with deterministic shifts.
std::vector<Rational> roots_in_field(const UniPoly<Rational>& f);
std::vector<Gf> roots_in_field(const UniPoly<Gf>& f);

}  // namespace hypsec
