#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypsec/exactalg/matrix3.hpp"
#include "hypsec/exactalg/unipoly.hpp"
#include "hypsec/sections/section.hpp"
#include "hypsec/zero_scheme_type.hpp"

namespace hypsec {

/// One root of the characteristic polynomial: its multiplicity and the
/// degree of the field it is defined over.
struct RootPattern {
  int multiplicity = 1;
  int degree = 1;
  friend auto operator<=>(const RootPattern&, const RootPattern&) = default;
};

template <FieldElement F>
struct PointWithMultiplicity {
  Vec3<F> point;
  int multiplicity = 1;
  friend bool operator==(const PointWithMultiplicity&, const PointWithMultiplicity&) = default;
};

/// Conjugate zeros defined over the root field of an irreducible factor:
/// `point` has coordinates in F[r]/(minimal_polynomial(r)), normalized so
/// the first nonzero coordinate is 1.
template <FieldElement F>
struct GaloisOrbit {
  UniPoly<F> minimal_polynomial;
  std::array<UniPoly<F>, 3> point;

  std::string to_string() const;
};

template <FieldElement F>
struct ZeroSchemeReport {
  ZeroSchemeType type = ZeroSchemeType::A_ThreeDistinctPoints;
  UniPoly<F> charpoly;
  std::vector<RootPattern> charpoly_pattern;
  /// Points defined over the base field. Types a-c list every rational zero
  /// with its local length; type d lists the point off the line.
  std::vector<PointWithMultiplicity<F>> points;
  std::vector<GaloisOrbit<F>> galois_orbits;
  std::optional<Vec3<F>> line;  // coefficients (a, b, c) of aX + bY + cZ
  std::optional<Vec3<F>> embedded_point;

  /// Sum of local lengths of the isolated part, counting each Galois orbit
  /// with its size.
  int isolated_length() const;
};

/// Decides the shape of the zero scheme from the eigenstructure of the
/// matrix. With p(t) = det(tI - A) and g = gcd(p, p'):
///   deg g = 0: three eigendirections (type a);
///   deg g = 1: p = (t - l)^2 (t - m); rank(A - l) = 2 gives b, 1 gives d;
///   deg g = 2: p = (t - l)^3; rank(A - l) = 2 gives c, 1 gives e.
/// Throws "zero section" for multiples of the identity.
template <FieldElement F>
ZeroSchemeReport<F> classify_section(const SectionMatrix<F>& s);

enum class VerdictKind { Irreducible, UnionOfTwoCubics };
enum class Singularity { SmoothDelPezzo, OnePointMult2, OnePointMult3 };

struct SurfaceComponent {
  std::string name;  // "W0" or "W1"
  std::string description;
  int degree = 0;
  std::vector<std::string> centers;  // W0: points blown up
  int center_length = 0;             // W0: length of the blown-up scheme
  std::string line;                  // W1: base line
};

struct HyperplaneVerdict {
  ZeroSchemeType type = ZeroSchemeType::A_ThreeDistinctPoints;
  VerdictKind kind = VerdictKind::Irreducible;
  std::optional<Singularity> singularity;
  int degree = 6;
  std::vector<SurfaceComponent> components;

  /// One line, e.g. "irreducible surface of degree 6 in P6, non-singular
  /// Del Pezzo surface".
  std::string sentence() const;
};

template <FieldElement F>
HyperplaneVerdict verdict(const ZeroSchemeReport<F>& r);

/// Classifies A and P A P^-1 and checks that the types agree and that the
/// witnesses move with P: points by P, lines by P^-T. Throws on singular P.
template <FieldElement F>
bool conjugate_check(const SectionMatrix<F>& a, const Matrix3<F>& p);

/// Primes p >= start at which reduction mod p preserves everything the
/// classifier looks at: no denominator vanishes, the discriminant (type a)
/// or the eigenvalue gap stays nonzero, and a nonzero maximal minor of
/// A - lI survives. Returns the first `count` such primes.
std::vector<std::uint64_t> good_reduction_primes(const SectionMatrix<Rational>& s, int count,
                                                 std::uint64_t start = 5);

std::string_view singularity_name(Singularity s);

}  // namespace hypsec
