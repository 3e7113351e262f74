#include "hypsec/multipoly/points.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hypsec/exactalg/unipoly.hpp"

namespace hypsec {

namespace {

// A generator restricted to a chart: coefficient of y^b z^c.
struct ChartPoly {
  int degree = 0;
  std::vector<std::vector<Gf>> by_z;  // by_z[c][b]
};

HomPoly<Gf> lift(const HomPoly<Gf>& g, const FiniteField& field) {
  const FiniteField& src = g.like().field();
  if (&src == &field) return g;
  if (src.characteristic() != field.characteristic() || src.degree() != 1)
    throw std::invalid_argument("generators must be defined over the prime field of the target field");
  return g.map([&field](const Gf& c) { return field.embed(c); });
}

template <class Visit>
void enumerate(const std::vector<HomPoly<Gf>>& raw_gens, const FiniteField& field, Visit&& visit) {
  if (field.order() > kMaxEnumerationOrder) throw std::invalid_argument("field too large for point enumeration");
  std::vector<HomPoly<Gf>> gens;
  for (const auto& g : raw_gens)
    if (!g.is_zero()) gens.push_back(lift(g, field));

  const std::uint64_t q = field.order();
  const Gf zero = field.zero(), one = field.one();

  // Chart X = 1: monomials X^a Y^b Z^c contribute y^b z^c.
  std::vector<ChartPoly> affine;
  int max_deg = 0;
  for (const auto& g : gens) {
    ChartPoly cp;
    cp.degree = g.degree();
    max_deg = std::max(max_deg, g.degree());
    cp.by_z.assign(g.degree() + 1, std::vector<Gf>(g.degree() + 1, zero));
    for (int i = 0; i < mono::count(g.degree()); ++i) {
      const Monomial m = mono::at(g.degree(), i);
      cp.by_z[m.z][m.y] = g.coeff_at(i);
    }
    affine.push_back(std::move(cp));
  }

  // Visits every root in z of the common gcd of the given univariate
  // restrictions; all z when every restriction vanishes.
  auto solve_z = [&](const std::vector<UniPoly<Gf>>& unis, auto&& emit) {
    std::optional<UniPoly<Gf>> h;
    for (const auto& u : unis) {
      if (u.is_zero()) continue;
      h = h ? gcd_monic(*h, u) : u.monic();
    }
    if (!h) {
      for (std::uint64_t z = 0; z < q; ++z) emit(field.element(z));
      return;
    }
    if (h->degree() == 0) return;
    if (h->degree() == 1) {
      emit(-h->coeff(0));
      return;
    }
    for (std::uint64_t z = 0; z < q; ++z)
      if (h->eval(field.element(z)).is_zero()) emit(field.element(z));
  };

  // (0, 0, 1)
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.coeff({0, 0, g.degree()}).is_zero();
  if (all_zero) visit(Vec3<Gf>{zero, zero, one});

  // (0, 1, z): monomials with no X, i.e. Y^b Z^c with b + c = d.
  {
    std::vector<UniPoly<Gf>> unis;
    for (const auto& g : gens) {
      std::vector<Gf> c(g.degree() + 1, zero);
      for (int k = 0; k <= g.degree(); ++k) c[k] = g.coeff({0, g.degree() - k, k});
      unis.emplace_back(std::move(c));
    }
    solve_z(unis, [&](const Gf& z) { visit(Vec3<Gf>{zero, one, z}); });
  }

  // (1, y, z)
  std::vector<Gf> ypow(max_deg + 1, one);
  std::vector<UniPoly<Gf>> unis;
  for (std::uint64_t yi = 0; yi < q; ++yi) {
    const Gf y = field.element(yi);
    for (int b = 1; b <= max_deg; ++b) ypow[b] = ypow[b - 1] * y;
    unis.clear();
    for (const auto& cp : affine) {
      std::vector<Gf> c(cp.degree + 1, zero);
      for (int z = 0; z <= cp.degree; ++z) {
        Gf acc = zero;
        for (int b = 0; b + z <= cp.degree; ++b) acc += cp.by_z[z][b] * ypow[b];
        c[z] = acc;
      }
      unis.emplace_back(std::move(c));
    }
    solve_z(unis, [&](const Gf& z) { visit(Vec3<Gf>{one, y, z}); });
  }
}

}  // namespace

std::vector<Vec3<Gf>> rational_points(const std::vector<HomPoly<Gf>>& gens, const FiniteField& field) {
  std::vector<Vec3<Gf>> pts;
  enumerate(gens, field, [&pts](const Vec3<Gf>& p) { pts.push_back(p); });
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t count_rational_points(const std::vector<HomPoly<Gf>>& gens, const FiniteField& field) {
  std::uint64_t n = 0;
  enumerate(gens, field, [&n](const Vec3<Gf>&) { ++n; });
  return n;
}

std::vector<Vec3<Rational>> rational_points(const std::vector<HomPoly<Rational>>&) {
  throw std::invalid_argument("enumeration requires finite field");
}

}  // namespace hypsec
