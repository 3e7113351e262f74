#pragma once

#include <cstdint>
#include <vector>

#include "hypsec/multipoly/hompoly.hpp"

namespace hypsec {

/// Largest field the enumerator accepts.
inline constexpr std::uint64_t kMaxEnumerationOrder = std::uint64_t{1} << 24;

/// Common zeros in P2(field) of homogeneous polynomials with coefficients
/// in the prime subfield of `field` (or in `field` itself). Points are
/// normalized (first nonzero coordinate 1) and sorted lexicographically by
/// encoding.
///
/// Works chart by chart: on (1, y, z) and (0, 1, z) the restrictions are
/// univariate in z and their gcd carries the common roots, so only lines
/// where every generator vanishes identically are listed in full.
std::vector<Vec3<Gf>> rational_points(const std::vector<HomPoly<Gf>>& gens, const FiniteField& field);

/// Number of common zeros; same algorithm without materializing the points.
std::uint64_t count_rational_points(const std::vector<HomPoly<Gf>>& gens, const FiniteField& field);

/// Rational gens cannot be enumerated; always throws
/// "enumeration requires finite field".
std::vector<Vec3<Rational>> rational_points(const std::vector<HomPoly<Rational>>& gens);

}  // namespace hypsec
