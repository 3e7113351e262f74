#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypsec/exactalg/finite_field.hpp"
#include "hypsec/sections/section.hpp"
#include "hypsec/zero_scheme_type.hpp"

namespace hypsec {

/// An incident pair (point a, line b) of P2(F_q) x P2*(F_q), both normalized.
struct FlagPoint {
  Vec3<Gf> a;
  Vec3<Gf> b;
};

/// Normalized points of P2 over a prime field, in encoding order.
std::vector<Vec3<Gf>> projective_points(const FiniteField& field);

/// All incident pairs, found by testing every (point, line) pair.
std::vector<FlagPoint> enumerate_flags(const FiniteField& field);

/// sum_ij A_ij a_i b_j. Throws when the pair is not incident.
Gf evaluate_section_at_flag(const SectionMatrix<Gf>& s, const FlagPoint& f);

/// Number of flags where the section vanishes. The serial version is the
/// reference for the OpenMP one.
std::uint64_t count_section_zeros_serial(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags);
std::uint64_t count_section_zeros_parallel(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags);

struct CountReport {
  std::uint64_t q = 0;
  std::uint64_t total_flag = 0;
  std::uint64_t section_count = 0;
  std::uint64_t N = 0;  // |V(F_q)| from the minors
  std::uint64_t predicted = 0;
  bool match = false;
};

/// Enumerates the flags over the section's (prime) field and compares the
/// zero count with q^2 + q + 1 + q N.
CountReport count_hyperplane_section(const SectionMatrix<Gf>& s, bool parallel = false);
CountReport count_hyperplane_section(const SectionMatrix<Rational>& s, std::uint64_t q, bool parallel = false);
/// Same with precomputed flags and N.
CountReport count_hyperplane_section(const SectionMatrix<Gf>& s, const std::vector<FlagPoint>& flags, std::uint64_t n,
                                     bool parallel = false);

struct SweepFailure {
  std::uint64_t index = 0;  // position in the enumeration or the sample
  std::string hyperplane;   // P7 coordinates
  std::string section;
  std::string reason;
};

struct SweepSummary {
  std::uint64_t q = 0;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::uint64_t classes = 0;
  std::array<std::uint64_t, 5> tallies{};
  std::uint64_t inconsistent = 0;
  std::vector<SweepFailure> failures;  // sorted by index

  bool all_types_present() const;
};

struct SweepOptions {
  std::uint64_t q = 5;
  std::optional<std::uint64_t> sample;  // empty: exhaustive
  std::uint64_t seed = 42;
  int d_max = 5;
  bool parallel = true;
};

/// Runs classify_section, the ideal oracle and the flag count on every
/// nonzero section class over F_q (exhaustive, q in {5, 7}) or on `sample`
/// distinct classes drawn from a seeded generator. Records every
/// disagreement.
SweepSummary sweep_verify(const SweepOptions& opt);

/// The hyperplane coordinates of class `index` in the exhaustive order:
/// grouped by the position of the leading 1, remaining coordinates in
/// base-q order.
std::array<std::uint64_t, 8> exhaustive_class(std::uint64_t q, std::uint64_t index);
std::uint64_t exhaustive_class_count(std::uint64_t q);

/// The classes visited by a sampled sweep, in order.
std::vector<std::array<std::uint64_t, 8>> sample_classes(std::uint64_t q, std::uint64_t count, std::uint64_t seed);

/// Points of P2(F_q) predicted from the eigenstructure report: isolated
/// rational points, plus q + 1 for a line.
template <class Report>
std::uint64_t predicted_rational_points(const Report& r, std::uint64_t q) {
  std::uint64_t n = r.points.size();
  if (r.line) n += q + 1;
  return n;
}

}  // namespace hypsec
