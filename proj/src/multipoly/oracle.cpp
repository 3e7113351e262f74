#include "hypsec/multipoly/oracle.hpp"

#include <stdexcept>

#include "hypsec/multipoly/groebner.hpp"
#include "hypsec/multipoly/points.hpp"

namespace hypsec {

OracleFields OracleFields::for_prime(std::uint64_t p) {
  OracleFields f;
  for (int k = 1; k <= 3; ++k) f.levels[k - 1] = &build_ext_field(p, k);
  return f;
}

std::optional<ZeroSchemeType> deduce_type(const std::vector<int>& hf, bool has_line_factor,
                                          const std::array<std::uint64_t, 3>& counts, std::uint64_t p,
                                          std::string* why) {
  auto fail = [why](const std::string& reason) -> std::optional<ZeroSchemeType> {
    if (why) *why = reason;
    return std::nullopt;
  };
  if (hf.size() < 5) throw std::invalid_argument("Hilbert function needs degrees 0..4");
  if (hf[0] != 1 || hf[1] != 3) return fail("hf(0), hf(1) differ from 1, 3");
  bool constant = true, linear = true;
  for (std::size_t d = 2; d < hf.size(); ++d) {
    constant = constant && hf[d] == 3;
    linear = linear && hf[d] == static_cast<int>(d) + 2;
  }
  if (constant == linear) return fail("Hilbert function matches neither 3 nor d+2");
  if (constant != !has_line_factor) return fail("line factor disagrees with the Hilbert function");

  if (constant) {
    const std::uint64_t geometric = counts[1] + counts[2] - counts[0];
    switch (geometric) {
      case 3: return ZeroSchemeType::A_ThreeDistinctPoints;
      case 2: return ZeroSchemeType::B_TwoPointsOneDouble;
      case 1: return ZeroSchemeType::C_OneTriplePoint;
      default: return fail("finite zero scheme with " + std::to_string(geometric) + " geometric points");
    }
  }
  std::uint64_t qk = 1;
  int extra[3];
  for (int k = 0; k < 3; ++k) {
    qk *= p;
    const std::uint64_t line_points = qk + 1;
    if (counts[k] < line_points) return fail("fewer points than the line component");
    const std::uint64_t e = counts[k] - line_points;
    if (e > 1) return fail("more than one point off the line");
    extra[k] = static_cast<int>(e);
  }
  if (extra[0] != extra[1] || extra[1] != extra[2]) return fail("off-line point not defined over F_p");
  return extra[0] == 1 ? ZeroSchemeType::D_LinePlusPoint : ZeroSchemeType::E_LineEmbeddedPoint;
}

IdealOracleReport oracle_classify(const SectionMatrix<Gf>& s, const OracleFields& fields, int d_max) {
  if (d_max < 4) throw std::invalid_argument("d_max must be at least 4");
  const FiniteField& base = s.like().field();
  if (&base != &fields.base()) throw std::invalid_argument("section is not defined over the oracle's base field");
  IdealOracleReport r;
  r.p = base.characteristic();
  r.minors = minors_ideal(s);
  const auto gens = r.minors.generators();
  r.groebner_basis = groebner(gens);
  r.hf = hilbert_function(r.groebner_basis, d_max);
  r.line_factor = common_linear_factor(r.minors);
  r.base_points = rational_points(gens, fields.level(1));
  r.point_counts[0] = r.base_points.size();
  for (int k = 2; k <= 3; ++k) r.point_counts[k - 1] = count_rational_points(gens, fields.level(k));
  r.deduced_type = deduce_type(r.hf, r.line_factor.has_value(), r.point_counts, r.p, &r.inconsistency);
  return r;
}

IdealOracleReport oracle_classify(const SectionMatrix<Gf>& s, int d_max) {
  const FiniteField& base = s.like().field();
  if (base.degree() != 1) throw std::invalid_argument("oracle expects a section over a prime field");
  return oracle_classify(s, OracleFields::for_prime(base.characteristic()), d_max);
}

IdealOracleReport oracle_classify(const SectionMatrix<Rational>& s, std::uint64_t p, int d_max) {
  const OracleFields fields = OracleFields::for_prime(p);
  return oracle_classify(reduce_section(s, fields.base()), fields, d_max);
}

RationalOracleReport oracle_classify_rational(const SectionMatrix<Rational>& s, std::span<const std::uint64_t> primes,
                                              int d_max) {
  if (d_max < 4) throw std::invalid_argument("d_max must be at least 4");
  if (primes.empty()) throw std::invalid_argument("at least one prime is required");
  RationalOracleReport r;
  r.minors = minors_ideal(s);
  r.groebner_basis = groebner(r.minors.generators());
  r.hf = hilbert_function(r.groebner_basis, d_max);
  r.line_factor = common_linear_factor(r.minors);
  for (auto p : primes) r.reductions.push_back(oracle_classify(s, p, d_max));

  std::optional<ZeroSchemeType> agreed = r.reductions.front().deduced_type;
  for (const auto& red : r.reductions) {
    if (red.deduced_type != agreed || red.hf != r.hf || red.line_factor.has_value() != r.line_factor.has_value())
      agreed.reset();
  }
  r.deduced_type = agreed;
  return r;
}

}  // namespace hypsec
