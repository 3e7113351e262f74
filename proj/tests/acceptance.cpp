// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypsec/classify/classify.hpp"
#include "hypsec/flagcount/flagcount.hpp"
#include "hypsec/multipoly/minors.hpp"
#include "hypsec/multipoly/oracle.hpp"
#include "hypsec/sections/hyperplane.hpp"
#include "test_support.hpp"

namespace hypsec {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

template <class F>
std::set<Vec3<F>> point_set(const ZeroSchemeReport<F>& r) {
  std::set<Vec3<F>> out;
  for (const auto& p : r.points) out.insert(normalize_projective(p.point));
  return out;
}

// The exhaustive F5 sweep is shared by criteria 2-4; it runs once, serially.
struct F5Sweep {
  SweepSummary summary;
  double seconds = 0;
};

const F5Sweep& f5_sweep() {
  static const F5Sweep sweep = [] {
    SweepOptions opt;
    opt.q = 5;
    opt.parallel = false;
    const auto t0 = Clock::now();
    F5Sweep s{sweep_verify(opt), 0};
    s.seconds = seconds_since(t0);
    return s;
  }();
  return sweep;
}

const SweepSummary& f7_sample() {
  static const SweepSummary summary = [] {
    SweepOptions opt;
    opt.q = 7;
    opt.sample = 10000;
    opt.seed = 42;
    return sweep_verify(opt);
  }();
  return summary;
}

std::uint64_t failures_with_prefix(const SweepSummary& s, const std::vector<std::string>& prefixes) {
  return std::count_if(s.failures.begin(), s.failures.end(), [&](const SweepFailure& f) {
    return std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) { return f.reason.rfind(p, 0) == 0; });
  });
}

std::string tallies_text(const SweepSummary& s) {
  std::string out;
  for (int k = 0; k < 5; ++k)
    out += std::string(k ? " " : "") + std::string(type_letter(kAllZeroSchemeTypes[k])) + "=" +
           std::to_string(s.tallies[k]);
  return out;
}

Outcome worked_examples() {
  Outcome o;
  const Vec3<Rational> e1 = test::qvec(1, 0, 0), e2 = test::qvec(0, 1, 0), e3 = test::qvec(0, 0, 1);
  double worst_ms = 0;
  auto timed = [&](const char* text) {
    const auto s = parse_section(text);
    auto report = classify_section(s);
    for (int i = 0; i < 20; ++i) {
      const auto t0 = Clock::now();
      report = classify_section(s);
      worst_ms = std::max(worst_ms, seconds_since(t0) * 1e3);
    }
    return report;
  };

  const auto a = timed("X, 2Y, 3Z");
  o.require(a.type == ZeroSchemeType::A_ThreeDistinctPoints, "(X,2Y,3Z) not type a");
  o.require(point_set(a) == std::set<Vec3<Rational>>{e1, e2, e3}, "(X,2Y,3Z) points wrong");
  o.require(!a.line, "(X,2Y,3Z) has a line");

  const auto d = timed("X, 0, Z");
  o.require(d.type == ZeroSchemeType::D_LinePlusPoint, "(X,0,Z) not type d");
  o.require(d.line && normalize_projective(*d.line) == e2, "(X,0,Z) line is not Y = 0");
  o.require(point_set(d) == std::set<Vec3<Rational>>{e2}, "(X,0,Z) point is not (0,1,0)");

  const auto e = timed("Y, 0, 0");
  o.require(e.type == ZeroSchemeType::E_LineEmbeddedPoint, "(Y,0,0) not type e");
  o.require(e.line && normalize_projective(*e.line) == e2, "(Y,0,0) line is not Y = 0");

  o.require(worst_ms < 1.0, "slowest classification " + std::to_string(worst_ms) + " ms");
  if (o.pass) o.detail = "slowest classification " + std::to_string(worst_ms) + " ms";
  return o;
}

Outcome exhaustive_partition() {
  Outcome o;
  const auto& [s, secs] = f5_sweep();
  const std::array<std::uint64_t, 5> frozen = {74375, 18600, 3720, 775, 186};
  std::uint64_t total = 0;
  for (auto t : s.tallies) total += t;
  o.require(total == exhaustive_class_count(5) && total == s.classes, "tallies do not cover every class");
  o.require(s.inconsistent == 0, std::to_string(s.inconsistent) + " inconsistent");
  o.require(failures_with_prefix(s, {"exception"}) == 0, "exceptions during the sweep");
  o.require(s.all_types_present(), "a type is missing");
  o.require(s.tallies == frozen, "tallies differ from the frozen values");
  o.require(secs <= 60.0, "took " + std::to_string(secs) + " s");
  o.detail = (o.detail.empty() ? "" : o.detail + "; ") + std::to_string(s.classes) + " classes, " + tallies_text(s) +
             ", serial " + std::to_string(secs) + " s";
  return o;
}

Outcome classifier_oracle_equivalence() {
  Outcome o;
  const std::vector<std::string> type_failures = {"classifier says", "oracle inconsistent", "exception"};
  const auto f5 = failures_with_prefix(f5_sweep().summary, type_failures);
  const auto f7 = failures_with_prefix(f7_sample(), type_failures);
  o.require(f5 == 0, std::to_string(f5) + " F5 disagreements");
  o.require(f7 == 0, std::to_string(f7) + " F7 disagreements");
  o.require(f7_sample().classes == 10000, "F7 sample size");

  std::mt19937_64 rng(42);
  int q_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = test::random_section([&] { return test::random_rational_matrix(rng, 3); }, rng);
    const auto primes = good_reduction_primes(s, 3);
    const auto oracle = oracle_classify_rational(s, primes);
    const auto type = classify_section(s).type;
    bool ok = oracle.deduced_type == type && oracle.reductions.size() == 3;
    for (const auto& r : oracle.reductions) ok = ok && r.deduced_type == type;
    if (!ok) ++q_bad;
  }
  o.require(q_bad == 0, std::to_string(q_bad) + " of 1000 rational sections disagree");
  if (o.pass) o.detail = "F5 97656/97656, F7 10000/10000, Q 1000/1000 at 3 primes each";
  return o;
}

Outcome count_identity() {
  Outcome o;
  const std::vector<std::string> count_failures = {"flag count", "classifier implies", "exception"};
  const auto f5 = failures_with_prefix(f5_sweep().summary, count_failures);
  const auto f7 = failures_with_prefix(f7_sample(), count_failures);
  o.require(f5 == 0, std::to_string(f5) + " F5 count mismatches");
  o.require(f7 == 0, std::to_string(f7) + " F7 count mismatches");
  for (std::uint64_t q : {5u, 7u, 11u}) {
    const auto a = count_hyperplane_section(parse_section("X, 2Y, 3Z"), q, true);
    const auto d = count_hyperplane_section(parse_section("X, 0, Z"), q, true);
    o.require(a.match && a.section_count == q * q + 4 * q + 1, "split type a at q=" + std::to_string(q));
    o.require(d.match && d.section_count == (q + 1) * (2 * q + 1), "type d at q=" + std::to_string(q));
    if (q == 7) {
      o.require(a.section_count == 78, "type a at q=7 is " + std::to_string(a.section_count));
      o.require(d.section_count == 120, "type d at q=7 is " + std::to_string(d.section_count));
    }
  }
  if (o.pass) o.detail = "F5 exhaustive and F7 sample exact; q=7 witnesses 78 and 120";
  return o;
}

template <class F>
void check_minor_invariants(const SectionMatrix<F>& s, const F& lambda, int& bad_syzygy, int& bad_shift,
                            int& bad_rank) {
  const auto m = minors_ideal(s);
  if (!syzygy_residual(m).is_zero()) ++bad_syzygy;
  const auto shifted = minors_ideal(SectionMatrix<F>(s.matrix() + lambda * Matrix3<F>::identity(lambda)));
  if (!(shifted == m)) ++bad_shift;
  if (minor_span_rank(m) < 2) ++bad_rank;
}

Outcome minor_invariants() {
  Outcome o;
  int bad_syzygy = 0, bad_shift = 0, bad_rank = 0;
  std::mt19937_64 rng(42);
  const FiniteField& f7 = build_ext_field(7, 1);
  for (int i = 0; i < 10000; ++i) {
    const auto sq = test::random_section([&] { return test::random_rational_matrix(rng); }, rng);
    check_minor_invariants(sq, test::random_small_rational(rng), bad_syzygy, bad_shift, bad_rank);
    const auto sf = test::random_section([&] { return test::random_gf_matrix(f7, rng); }, rng);
    check_minor_invariants(sf, test::random_gf(f7, rng), bad_syzygy, bad_shift, bad_rank);
  }
  const FiniteField& f5 = build_ext_field(5, 1);
  for (std::uint64_t i = 0; i < exhaustive_class_count(5); ++i) {
    const auto c = exhaustive_class(5, i);
    std::array<Gf, 8> h;
    for (int k = 0; k < 8; ++k) h[k] = f5.element(c[k]);
    const auto s = hyperplane_to_section(HyperplaneP7<Gf>(h));
    if (minor_span_rank(raw_minors(s.matrix())) < 2) ++bad_rank;
  }
  o.require(bad_syzygy == 0, std::to_string(bad_syzygy) + " syzygy failures");
  o.require(bad_shift == 0, std::to_string(bad_shift) + " shift failures");
  o.require(bad_rank == 0, std::to_string(bad_rank) + " sections with span rank < 2");
  if (o.pass) o.detail = "10000 sections over Q and over F7, span rank on all F5 classes";
  return o;
}

Outcome hilbert_dichotomy() {
  Outcome o;
  const std::vector<int> finite = {1, 3, 3, 3, 3, 3}, with_line = {1, 3, 4, 5, 6, 7};
  const std::vector<std::pair<const char*, ZeroSchemeType>> witnesses = {
      {"X, 2Y, 3Z", ZeroSchemeType::A_ThreeDistinctPoints}, {"Y, 0, Z", ZeroSchemeType::B_TwoPointsOneDouble},
      {"Y, Z, 0", ZeroSchemeType::C_OneTriplePoint},        {"X, 0, Z", ZeroSchemeType::D_LinePlusPoint},
      {"Y, 0, 0", ZeroSchemeType::E_LineEmbeddedPoint}};
  for (const auto& [text, type] : witnesses) {
    const auto s = parse_section(text);
    const auto primes = good_reduction_primes(s, 3);
    const auto oracle = oracle_classify_rational(s, primes, 5);
    const auto& expected = has_line(type) ? with_line : finite;
    o.require(oracle.hf == expected, std::string(text) + " hf over Q");
    for (const auto& r : oracle.reductions) o.require(r.hf == expected, std::string(text) + " hf mod p");
    o.require(classify_section(s).type == type && oracle.deduced_type == type, std::string(text) + " type");
  }
  if (o.pass) o.detail = "a/b/c give 1,3,3,3,3,3 and d/e give 1,3,4,5,6,7";
  return o;
}

template <class F>
bool round_trips(const SectionMatrix<F>& s) {
  const auto h = section_to_hyperplane(s);
  const auto back = hyperplane_to_section(h);
  const auto coords = trace_free_coords(s);
  const F lead = *std::find_if(coords.begin(), coords.end(), [](const F& x) { return !x.is_zero(); });
  return section_to_hyperplane(back) == h && lead * back.matrix() == s.trace_free().matrix() &&
         back.same_section(SectionMatrix<F>(lead.inverse() * s.matrix()));
}

Outcome correspondence() {
  Outcome o;
  std::mt19937_64 rng(42);
  const FiniteField& f7 = build_ext_field(7, 1);
  int bad_q = 0, bad_f = 0;
  for (int i = 0; i < 10000; ++i) {
    if (!round_trips(test::random_section([&] { return test::random_rational_matrix(rng); }, rng))) ++bad_q;
    if (!round_trips(test::random_section([&] { return test::random_gf_matrix(f7, rng); }, rng))) ++bad_f;
  }
  o.require(bad_q == 0, std::to_string(bad_q) + " rational round trips failed");
  o.require(bad_f == 0, std::to_string(bad_f) + " F7 round trips failed");

  const FiniteField& f5 = build_ext_field(5, 1);
  const auto flags = enumerate_flags(f5);
  const auto n = static_cast<std::int64_t>(exhaustive_class_count(5));
  std::uint64_t bad_shift = 0;
#pragma omp parallel for reduction(+ : bad_shift) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto c = exhaustive_class(5, i);
    std::array<Gf, 8> h;
    for (int k = 0; k < 8; ++k) h[k] = f5.element(c[k]);
    const auto s = hyperplane_to_section(HyperplaneP7<Gf>(h));
    const Gf lambda = f5.element(1 + i % 4);
    const SectionMatrix<Gf> shifted(s.matrix() + lambda * Matrix3<Gf>::identity(lambda));
    for (const auto& fl : flags)
      if (evaluate_section_at_flag(s, fl) != evaluate_section_at_flag(shifted, fl)) ++bad_shift;
  }
  o.require(bad_shift == 0, std::to_string(bad_shift) + " flag values moved under a shift");
  if (o.pass)
    o.detail = "10000 over Q and F7; " + std::to_string(n) + " F5 classes x " + std::to_string(flags.size()) + " flags";
  return o;
}

Outcome triple_point_examples() {
  Outcome o;
  using QPoly = HomPoly<Rational>;
  const QPoly X = QPoly::linear(test::qvec(1, 0, 0)), Y = QPoly::linear(test::qvec(0, 1, 0)),
              Z = QPoly::linear(test::qvec(0, 0, 1)), zero = Rational(0) * X;
  // q12 = X f2 - Y f1, q13 = X f3 - Z f1, q23 = Y f3 - Z f2.
  auto by_formula = [&](const QPoly& f1, const QPoly& f2, const QPoly& f3) {
    return MinorTriple<Rational>{X * f2 - Y * f1, X * f3 - Z * f1, Y * f3 - Z * f2};
  };
  const std::vector<std::pair<const char*, MinorTriple<Rational>>> cases = {
      {"Y, Z, 0", by_formula(Y, Z, zero)}, {"Z, Z + X, 0", by_formula(Z, Z + X, zero)}};
  for (const auto& [text, expected] : cases) {
    const auto s = parse_section(text);
    o.require(raw_minors(s.matrix()) == expected, std::string(text) + " minors differ from the formula");
    o.require(classify_section(s).type == ZeroSchemeType::C_OneTriplePoint, std::string(text) + " not type c");
    const auto primes = good_reduction_primes(s, 3);
    const auto oracle = oracle_classify_rational(s, primes, 5);
    o.require(oracle.hf == std::vector<int>{1, 3, 3, 3, 3, 3}, std::string(text) + " hf");
    o.require(!oracle.line_factor, std::string(text) + " has a line factor");
    o.require(oracle.deduced_type == ZeroSchemeType::C_OneTriplePoint, std::string(text) + " oracle type");
    for (const auto& r : oracle.reductions)
      o.require(r.point_counts == std::array<std::uint64_t, 3>{1, 1, 1},
                std::string(text) + " point counts mod " + std::to_string(r.p));
  }
  if (o.pass) o.detail = "(Y,Z,0) and (Z,Z+X,0) are type c: hf 1,3,3,3,3,3, one point over F_p, F_p^2, F_p^3";
  return o;
}

}  // namespace
}  // namespace hypsec

int main() {
  using namespace hypsec;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 worked examples", worked_examples},
      {"2 exhaustive F5 partition", exhaustive_partition},
      {"3 classifier-oracle equivalence", classifier_oracle_equivalence},
      {"4 flag count identity", count_identity},
      {"5 minor invariants", minor_invariants},
      {"6 Hilbert function dichotomy", hilbert_dichotomy},
      {"7 hyperplane correspondence", correspondence},
      {"8 triple-point examples", triple_point_examples},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
