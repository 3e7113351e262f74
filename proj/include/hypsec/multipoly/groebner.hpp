#pragma once

#include <vector>

#include "hypsec/multipoly/hompoly.hpp"

namespace hypsec {

/// Full normal form of f modulo the polynomials in g (top and tail
/// reduction, grevlex).
template <FieldElement F>
HomPoly<F> normal_form(const HomPoly<F>& f, const std::vector<HomPoly<F>>& g);

/// Reduced Groebner basis (grevlex, X > Y > Z) of the ideal generated by
/// homogeneous gens. Elements are monic and sorted by increasing leading
/// monomial, so the result depends only on the ideal. Throws on an empty
/// generator list and when an S-polynomial would exceed kMaxDegree.
template <FieldElement F>
std::vector<HomPoly<F>> groebner(const std::vector<HomPoly<F>>& gens);

/// dim_k (R/I)_d for d = 0..d_max, counting standard monomials of gb.
template <FieldElement F>
std::vector<int> hilbert_function(const std::vector<HomPoly<F>>& gb, int d_max);

}  // namespace hypsec
