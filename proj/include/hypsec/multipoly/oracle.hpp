#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypsec/multipoly/minors.hpp"
#include "hypsec/zero_scheme_type.hpp"

namespace hypsec {

/// F_p, F_{p^2} and F_{p^3}, built once and shared by repeated oracle runs.
struct OracleFields {
  const FiniteField* levels[3] = {nullptr, nullptr, nullptr};

  static OracleFields for_prime(std::uint64_t p);
  const FiniteField& base() const { return *levels[0]; }
  const FiniteField& level(int k) const { return *levels[k - 1]; }
};

/// Invariants of the minor ideal computed without looking at eigenvalues.
struct IdealOracleReport {
  std::uint64_t p = 0;
  MinorTriple<Gf> minors;
  std::vector<HomPoly<Gf>> groebner_basis;
  std::vector<int> hf;  // d = 0..d_max
  std::optional<Vec3<Gf>> line_factor;
  std::array<std::uint64_t, 3> point_counts{};  // |V(F_{p^k})|, k = 1, 2, 3
  std::vector<Vec3<Gf>> base_points;             // V(F_p)
  std::optional<ZeroSchemeType> deduced_type;    // empty = inconsistent
  std::string inconsistency;

  /// Distinct geometric points when V is finite: every point of a length-3
  /// scheme is defined over F_{p^2} or F_{p^3}, and these meet in F_p.
  std::uint64_t geometric_points() const { return point_counts[1] + point_counts[2] - point_counts[0]; }
};

/// Deduces the type from the Hilbert function (d = 0..>=4), the presence of
/// a line factor and the point counts over F_{p^k}. Returns nullopt and a
/// reason when the invariants fit none of the five shapes.
std::optional<ZeroSchemeType> deduce_type(const std::vector<int>& hf, bool has_line_factor,
                                          const std::array<std::uint64_t, 3>& counts, std::uint64_t p,
                                          std::string* why = nullptr);

/// Requires a nonzero section over a prime field F_p with p >= 5 and
/// d_max >= 4.
IdealOracleReport oracle_classify(const SectionMatrix<Gf>& s, const OracleFields& fields, int d_max = 5);
IdealOracleReport oracle_classify(const SectionMatrix<Gf>& s, int d_max = 5);
/// Reduces a rational section modulo p first.
IdealOracleReport oracle_classify(const SectionMatrix<Rational>& s, std::uint64_t p, int d_max = 5);

/// Oracle for a rational section: Groebner basis, Hilbert function and line
/// factor over Q, plus full finite-field oracle runs at the given primes.
struct RationalOracleReport {
  MinorTriple<Rational> minors;
  std::vector<HomPoly<Rational>> groebner_basis;
  std::vector<int> hf;
  std::optional<Vec3<Rational>> line_factor;
  std::vector<IdealOracleReport> reductions;
  /// Type agreed on by every reduction and consistent with hf and the line
  /// factor over Q; empty otherwise.
  std::optional<ZeroSchemeType> deduced_type;
};

RationalOracleReport oracle_classify_rational(const SectionMatrix<Rational>& s, std::span<const std::uint64_t> primes,
                                              int d_max = 5);

}  // namespace hypsec
