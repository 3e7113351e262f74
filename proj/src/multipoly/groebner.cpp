#include "hypsec/multipoly/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace hypsec {

std::string Monomial::to_string() const {
  std::string out;
  auto put = [&out](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('X', x);
  put('Y', y);
  put('Z', z);
  return out;
}

template <FieldElement F>
HomPoly<F> normal_form(const HomPoly<F>& f, const std::vector<HomPoly<F>>& g) {
  HomPoly<F> r = f;
  // Reducing a term only touches smaller monomials, so one sweep in
  // decreasing order reaches the normal form.
  for (int i = 0; i < mono::count(r.degree()); ++i) {
    const F c = r.coeff_at(i);
    if (c.is_zero()) continue;
    const Monomial m = mono::at(r.degree(), i);
    for (const auto& h : g) {
      if (h.is_zero() || h.degree() > r.degree()) continue;
      const Monomial lm = h.leading_monomial();
      if (!mono::divides(lm, m)) continue;
      r = r - h.shifted(mono::quotient(m, lm), c / h.leading_coeff());
      break;
    }
  }
  return r;
}

namespace {

template <FieldElement F>
bool lm_less(const HomPoly<F>& a, const HomPoly<F>& b) {
  return mono::compare(a.leading_monomial(), b.leading_monomial()) < 0;
}

}  // namespace

template <FieldElement F>
std::vector<HomPoly<F>> groebner(const std::vector<HomPoly<F>>& gens) {
  if (gens.empty()) throw std::invalid_argument("groebner basis of an empty generator list");
  std::vector<HomPoly<F>> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    HomPoly<F> r = normal_form(g.monic(), basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }

  // Pairs processed by increasing lcm degree.
  struct Pair {
    std::size_t i, j;
    int degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial a = basis[i].leading_monomial();
      const Monomial b = basis[j].leading_monomial();
      if (mono::coprime(a, b)) continue;  // product criterion
      pairs.push_back({i, j, mono::lcm(a, b).degree()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : (a.j != b.j ? a.j < b.j : a.i < b.i);
    });
    const Pair pr = *it;
    pairs.erase(it);
    if (pr.degree > kMaxDegree) throw std::domain_error("polynomial degree cap exceeded");
    const auto& gi = basis[pr.i];
    const auto& gj = basis[pr.j];
    const Monomial l = mono::lcm(gi.leading_monomial(), gj.leading_monomial());
    const F one = gi.like().one_like();
    HomPoly<F> s = gi.shifted(mono::quotient(l, gi.leading_monomial()), one) -
                   gj.shifted(mono::quotient(l, gj.leading_monomial()), one);
    s = normal_form(s, basis);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::sort(basis.begin(), basis.end(), lm_less<F>);
  std::vector<HomPoly<F>> minimal;
  for (const auto& g : basis) {
    const Monomial lm = g.leading_monomial();
    bool redundant = false;
    for (const auto& h : minimal) redundant = redundant || mono::divides(h.leading_monomial(), lm);
    if (!redundant) minimal.push_back(g);
  }
  std::vector<HomPoly<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<HomPoly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // The leading term is irreducible by the others; only the tail changes.
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), lm_less<F>);
  return reduced;
}

template <FieldElement F>
std::vector<int> hilbert_function(const std::vector<HomPoly<F>>& gb, int d_max) {
  std::vector<Monomial> leads;
  for (const auto& g : gb)
    if (!g.is_zero()) leads.push_back(g.leading_monomial());
  std::vector<int> hf;
  for (int d = 0; d <= d_max; ++d) {
    int standard = 0;
    for (int a = 0; a <= d; ++a) {
      for (int b = 0; a + b <= d; ++b) {
        const Monomial m{a, b, d - a - b};
        bool divisible = false;
        for (const auto& l : leads) divisible = divisible || mono::divides(l, m);
        if (!divisible) ++standard;
      }
    }
    hf.push_back(standard);
  }
  return hf;
}

#define HYPSEC_INSTANTIATE(F)                                                             \
  template HomPoly<F> normal_form(const HomPoly<F>&, const std::vector<HomPoly<F>>&);   \
  template std::vector<HomPoly<F>> groebner(const std::vector<HomPoly<F>>&);            \
  template std::vector<int> hilbert_function(const std::vector<HomPoly<F>>&, int);
HYPSEC_INSTANTIATE(Rational)
HYPSEC_INSTANTIATE(Gf)
#undef HYPSEC_INSTANTIATE

}  // namespace hypsec
