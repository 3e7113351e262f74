#include "hypsec/classify/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypsec/exactalg/roots.hpp"
#include "hypsec/sections/section.hpp"

namespace hypsec {

std::string_view type_description(ZeroSchemeType t) {
  switch (t) {
    case ZeroSchemeType::A_ThreeDistinctPoints: return "three distinct points";
    case ZeroSchemeType::B_TwoPointsOneDouble: return "two points, one of them double";
    case ZeroSchemeType::C_OneTriplePoint: return "one triple point";
    case ZeroSchemeType::D_LinePlusPoint: return "a line and a point off the line";
    case ZeroSchemeType::E_LineEmbeddedPoint: return "a line with an embedded point";
  }
  return "";
}

std::string_view singularity_name(Singularity s) {
  switch (s) {
    case Singularity::SmoothDelPezzo: return "smooth_del_pezzo";
    case Singularity::OnePointMult2: return "one_point_mult2";
    case Singularity::OnePointMult3: return "one_point_mult3";
  }
  return "";
}

namespace {

template <FieldElement F>
Matrix3<F> shift(const Matrix3<F>& a, const F& lambda) {
  return a - lambda * Matrix3<F>::identity(a.like());
}

// The unique eigendirection of a rank-2 matrix.
template <FieldElement F>
Vec3<F> kernel_point(const Matrix3<F>& m) {
  const auto k = kernel(m);
  if (k.size() != 1) throw std::logic_error("expected a one-dimensional kernel");
  return normalize_projective(k.front());
}

template <FieldElement F>
Vec3<F> first_nonzero_row(const Matrix3<F>& m) {
  for (int i = 0; i < 3; ++i)
    if (!is_zero_vec(m.row(i))) return normalize_projective(m.row(i));
  throw std::logic_error("zero matrix");
}

template <FieldElement F>
Vec3<F> first_nonzero_col(const Matrix3<F>& m) {
  for (int j = 0; j < 3; ++j)
    if (!is_zero_vec(m.col(j))) return normalize_projective(m.col(j));
  throw std::logic_error("zero matrix");
}

// Inverse of a modulo an irreducible f.
template <FieldElement F>
UniPoly<F> inverse_mod(const UniPoly<F>& a, const UniPoly<F>& f) {
  UniPoly<F> r0 = f, r1 = a % f;
  UniPoly<F> s0(f.prototype()), s1(std::vector<F>{f.prototype().one_like()});
  while (!r1.is_zero()) {
    auto [quo, rem] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    UniPoly<F> s2 = s0 - quo * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("not invertible modulo the factor");
  return (r0.coeff(0).inverse() * s0) % f;
}

// A kernel vector of A - rI over F[r]/(f), from a nonzero column of the
// adjugate.
template <FieldElement F>
std::array<UniPoly<F>, 3> generic_eigenvector(const Matrix3<F>& a, const UniPoly<F>& f) {
  const F one = a.like().one_like();
  std::array<UniPoly<F>, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[3 * i + j] = i == j ? UniPoly<F>(std::vector<F>{a(i, j), -one}) : UniPoly<F>(std::vector<F>{a(i, j)});
  auto at = [&m](int i, int j) -> const UniPoly<F>& { return m[3 * i + j]; };
  for (int j = 0; j < 3; ++j) {
    // Column j of adj(M): entry i is the cofactor of (j, i), taken cyclically.
    std::array<UniPoly<F>, 3> v;
    bool nonzero = false;
    for (int i = 0; i < 3; ++i) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      v[i] = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) % f;
      nonzero = nonzero || !v[i].is_zero();
    }
    if (!nonzero) continue;
    for (auto& c : v) {
      if (c.is_zero()) continue;
      const UniPoly<F> inv = inverse_mod(c, f);
      for (auto& d : v) d = (d * inv) % f;
      break;
    }
    return v;
  }
  throw std::logic_error("adjugate vanishes at a simple eigenvalue");
}

template <FieldElement F>
void add_pattern(ZeroSchemeReport<F>& r, int multiplicity, int degree, int copies) {
  for (int i = 0; i < copies; ++i) r.charpoly_pattern.push_back({multiplicity, degree});
}

}  // namespace

template <FieldElement F>
std::string GaloisOrbit<F>::to_string() const {
  return "(" + point[0].to_string("r") + " : " + point[1].to_string("r") + " : " + point[2].to_string("r") +
         "), r a root of " + minimal_polynomial.to_string("t");
}

template <FieldElement F>
int ZeroSchemeReport<F>::isolated_length() const {
  int n = 0;
  for (const auto& p : points) n += p.multiplicity;
  for (const auto& o : galois_orbits) n += o.minimal_polynomial.degree();
  return n;
}

template <FieldElement F>
ZeroSchemeReport<F> classify_section(const SectionMatrix<F>& s) {
  require_supported_characteristic(s.like());
  s.require_nonzero();
  const Matrix3<F>& a = s.matrix();
  ZeroSchemeReport<F> r;
  r.charpoly = charpoly(a);
  const UniPoly<F> g = gcd_monic(r.charpoly, r.charpoly.derivative());
  const F three = a.like().from_int(3);

  switch (g.degree()) {
    case 0: {
      r.type = ZeroSchemeType::A_ThreeDistinctPoints;
      UniPoly<F> rest = r.charpoly;
      for (const F& lambda : roots_in_field(r.charpoly)) {
        r.points.push_back({kernel_point(shift(a, lambda)), 1});
        rest = rest / UniPoly<F>::linear_root(lambda);
      }
      add_pattern(r, 1, 1, static_cast<int>(r.points.size()));
      if (rest.degree() >= 2) {
        // No roots left in the field and degree <= 3: irreducible.
        add_pattern(r, 1, rest.degree(), rest.degree());
        r.galois_orbits.push_back({rest, generic_eigenvector(a, rest)});
      }
      std::sort(r.points.begin(), r.points.end(),
                [](const auto& x, const auto& y) { return x.point < y.point; });
      break;
    }
    case 1: {
      const F lambda = -g.coeff(0);
      const F mu = a.trace() - lambda - lambda;
      const Matrix3<F> n = shift(a, lambda);
      const Vec3<F> simple = kernel_point(shift(a, mu));
      add_pattern(r, 2, 1, 1);
      add_pattern(r, 1, 1, 1);
      if (rank3(n) == 2) {
        r.type = ZeroSchemeType::B_TwoPointsOneDouble;
        r.points = {{kernel_point(n), 2}, {simple, 1}};
      } else {
        r.type = ZeroSchemeType::D_LinePlusPoint;
        r.line = first_nonzero_row(n);
        r.points = {{simple, 1}};
      }
      break;
    }
    case 2: {
      const F lambda = a.trace() / three;
      const Matrix3<F> n = shift(a, lambda);
      add_pattern(r, 3, 1, 1);
      const int rk = rank3(n);
      if (rk == 2) {
        r.type = ZeroSchemeType::C_OneTriplePoint;
        r.points = {{kernel_point(n), 3}};
      } else if (rk == 1) {
        r.type = ZeroSchemeType::E_LineEmbeddedPoint;
        r.line = first_nonzero_row(n);
        r.embedded_point = first_nonzero_col(n);
      } else {
        throw std::logic_error("nilpotent part vanished for a nonzero section");
      }
      break;
    }
    default: throw std::logic_error("unexpected gcd degree");
  }
  return r;
}

std::string HyperplaneVerdict::sentence() const {
  if (kind == VerdictKind::UnionOfTwoCubics) return "union of two surfaces of degree 3 in P6";
  std::string s = "irreducible surface of degree 6 in P6, ";
  switch (*singularity) {
    case Singularity::SmoothDelPezzo: return s + "non-singular Del Pezzo surface";
    case Singularity::OnePointMult2: return s + "singular at one point of multiplicity 2";
    case Singularity::OnePointMult3: return s + "singular at one point of multiplicity 3";
  }
  return s;
}

template <FieldElement F>
HyperplaneVerdict verdict(const ZeroSchemeReport<F>& r) {
  HyperplaneVerdict v;
  v.type = r.type;
  v.degree = 6;
  SurfaceComponent w0;
  w0.name = "W0";
  for (const auto& p : r.points) w0.centers.push_back(point_string(p.point));
  for (const auto& o : r.galois_orbits) w0.centers.push_back(o.to_string());
  switch (r.type) {
    case ZeroSchemeType::A_ThreeDistinctPoints:
    case ZeroSchemeType::B_TwoPointsOneDouble:
    case ZeroSchemeType::C_OneTriplePoint: {
      v.kind = VerdictKind::Irreducible;
      v.singularity = r.type == ZeroSchemeType::A_ThreeDistinctPoints ? Singularity::SmoothDelPezzo
                      : r.type == ZeroSchemeType::B_TwoPointsOneDouble ? Singularity::OnePointMult2
                                                                        : Singularity::OnePointMult3;
      w0.center_length = r.isolated_length();
      const int support = static_cast<int>(r.points.size()) + [&r] {
        int n = 0;
        for (const auto& o : r.galois_orbits) n += o.minimal_polynomial.degree();
        return n;
      }();
      w0.description = "blow-up of P2 along a length-" + std::to_string(w0.center_length) + " scheme supported at " +
                       std::to_string(support) + (support == 1 ? " point" : " points");
      w0.degree = 6;
      v.components.push_back(std::move(w0));
      break;
    }
    case ZeroSchemeType::D_LinePlusPoint:
    case ZeroSchemeType::E_LineEmbeddedPoint: {
      v.kind = VerdictKind::UnionOfTwoCubics;
      if (r.type == ZeroSchemeType::E_LineEmbeddedPoint) w0.centers = {point_string(*r.embedded_point)};
      w0.center_length = 1;
      w0.description = r.type == ZeroSchemeType::D_LinePlusPoint ? "blow-up of P2 at one point off the line"
                                                                   : "blow-up of P2 at the embedded point";
      w0.degree = 3;
      SurfaceComponent w1;
      w1.name = "W1";
      w1.line = render_linear_form(*r.line);
      w1.description = "P(T|l) over the line " + w1.line + " = 0, a ruled cubic since T|l = O(1) + O(2)";
      w1.degree = 3;
      v.components.push_back(std::move(w0));
      v.components.push_back(std::move(w1));
      break;
    }
  }
  return v;
}

template <FieldElement F>
bool conjugate_check(const SectionMatrix<F>& s, const Matrix3<F>& p) {
  const Matrix3<F> p_inv = p.inverse();
  const SectionMatrix<F> conj(p * s.matrix() * p_inv);
  const auto r0 = classify_section(s);
  const auto r1 = classify_section(conj);
  if (r0.type != r1.type || r0.charpoly != r1.charpoly) return false;

  auto moved_point = [&p](const Vec3<F>& v) { return normalize_projective(p.apply(v)); };
  // A line l (row vector) through v maps to l P^-1 through P v.
  auto moved_line = [&p_inv](const Vec3<F>& l) { return normalize_projective(p_inv.transpose().apply(l)); };

  std::vector<PointWithMultiplicity<F>> expected;
  for (const auto& pt : r0.points) expected.push_back({moved_point(pt.point), pt.multiplicity});
  auto by_point = [](const auto& x, const auto& y) { return x.point < y.point; };
  std::sort(expected.begin(), expected.end(), by_point);
  auto actual = r1.points;
  std::sort(actual.begin(), actual.end(), by_point);
  if (expected != actual) return false;
  if (r0.line.has_value() != r1.line.has_value()) return false;
  if (r0.line && moved_line(*r0.line) != *r1.line) return false;
  if (r0.embedded_point.has_value() != r1.embedded_point.has_value()) return false;
  if (r0.embedded_point && moved_point(*r0.embedded_point) != *r1.embedded_point) return false;
  if (r0.galois_orbits.size() != r1.galois_orbits.size()) return false;
  for (std::size_t i = 0; i < r0.galois_orbits.size(); ++i)
    if (r0.galois_orbits[i].minimal_polynomial != r1.galois_orbits[i].minimal_polynomial) return false;
  return true;
}

namespace {

bool divisible(const mpz_class& n, std::uint64_t p) {
  return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

// Nonzero numerators that must survive reduction; denominators are covered
// separately.
std::vector<mpz_class> structure_constants(const SectionMatrix<Rational>& s) {
  const Matrix3<Rational>& a = s.matrix();
  const UniPoly<Rational> cp = charpoly(a);
  const UniPoly<Rational> g = gcd_monic(cp, cp.derivative());
  std::vector<mpz_class> out;
  auto rank_witness = [&out](const Matrix3<Rational>& m) {
    const int rk = rank3(m);
    if (rk == 1 || rk == 3) {
      // Rank 1: any nonzero entry; rank 3 does not occur here.
      for (const auto& x : m.entries())
        if (!x.is_zero()) {
          out.push_back(x.num());
          return;
        }
    }
    // Rank 2: any nonzero 2x2 minor (an adjugate entry).
    const Matrix3<Rational> adj = m.adjugate();
    for (const auto& x : adj.entries())
      if (!x.is_zero()) {
        out.push_back(x.num());
        return;
      }
  };
  switch (g.degree()) {
    case 0: {
      const Rational c2 = cp.coeff(2), c1 = cp.coeff(1), c0 = cp.coeff(0);
      const Rational disc = c2 * c2 * c1 * c1 - Rational(4) * c1 * c1 * c1 - Rational(4) * c2 * c2 * c2 * c0 -
                            Rational(27) * c0 * c0 + Rational(18) * c2 * c1 * c0;
      out.push_back(disc.num());
      break;
    }
    case 1: {
      const Rational lambda = -g.coeff(0);
      const Rational mu = a.trace() - lambda - lambda;
      out.push_back((lambda - mu).num());
      out.push_back(lambda.den());
      rank_witness(a - lambda * Matrix3<Rational>::identity(lambda));
      break;
    }
    default: {
      const Rational lambda = a.trace() / Rational(3);
      rank_witness(a - lambda * Matrix3<Rational>::identity(lambda));
      break;
    }
  }
  for (const auto& x : a.entries()) out.push_back(x.den());
  return out;
}

}  // namespace

std::vector<std::uint64_t> good_reduction_primes(const SectionMatrix<Rational>& s, int count, std::uint64_t start) {
  s.require_nonzero();
  const auto constants = structure_constants(s);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(start, 5); static_cast<int>(primes.size()) < count; ++p) {
    if (!is_prime(p)) continue;
    bool good = true;
    for (const auto& c : constants) good = good && !divisible(c, p);
    if (good) primes.push_back(p);
  }
  return primes;
}

#define HYPSEC_INSTANTIATE(F)                                                \
  template struct GaloisOrbit<F>;                                            \
  template struct ZeroSchemeReport<F>;                                       \
  template ZeroSchemeReport<F> classify_section(const SectionMatrix<F>&);   \
  template HyperplaneVerdict verdict(const ZeroSchemeReport<F>&);            \
  template bool conjugate_check(const SectionMatrix<F>&, const Matrix3<F>&);
HYPSEC_INSTANTIATE(Rational)
HYPSEC_INSTANTIATE(Gf)
#undef HYPSEC_INSTANTIATE

}  // namespace hypsec
