#pragma once

#include <optional>
#include <vector>

#include "hypsec/multipoly/hompoly.hpp"
#include "hypsec/sections/section.hpp"

namespace hypsec {

/// The 2x2 minors of the matrix with rows (X, Y, Z) and (f1, f2, f3):
/// q12 = X f2 - Y f1, q13 = X f3 - Z f1, q23 = Y f3 - Z f2.
template <FieldElement F>
struct MinorTriple {
  HomPoly<F> q12;
  HomPoly<F> q13;
  HomPoly<F> q23;

  std::vector<HomPoly<F>> generators() const { return {q12, q13, q23}; }
  friend bool operator==(const MinorTriple&, const MinorTriple&) = default;
};

/// Throws "zero section" for multiples of the identity.
template <FieldElement F>
MinorTriple<F> minors_ideal(const SectionMatrix<F>& s);

/// Same minors, no zero-section check (used by tests of the identities).
template <FieldElement F>
MinorTriple<F> raw_minors(const Matrix3<F>& a);

/// X q23 - Y q13 + Z q12, identically zero for genuine minors.
template <FieldElement F>
HomPoly<F> syzygy_residual(const MinorTriple<F>& m);

/// Dimension of the span of the three quadrics.
template <FieldElement F>
int minor_span_rank(const MinorTriple<F>& m);

/// The linear form (leading coefficient 1) dividing every nonzero minor, if
/// any. Over F_p the candidates are searched among all p^2 + p + 1 lines;
/// over Q the divisibility conditions are solved as a linear system.
/// Throws "zero section" when all minors vanish.
template <FieldElement F>
std::optional<Vec3<F>> common_linear_factor(const MinorTriple<F>& m);

/// Linear-system route: two independent quadrics share a linear factor iff
/// u q = v q' has a nonzero solution in linear forms u, v. Works over any
/// field.
template <FieldElement F>
std::optional<Vec3<F>> common_linear_factor_by_syzygy(const MinorTriple<F>& m);

/// Trial division against every line of P2 over the prime field.
std::optional<Vec3<Gf>> common_linear_factor_by_search(const MinorTriple<Gf>& m);

}  // namespace hypsec
