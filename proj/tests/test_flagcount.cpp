#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hypsec/classify/classify.hpp"
#include "hypsec/flagcount/flagcount.hpp"
#include "hypsec/sections/hyperplane.hpp"
#include "test_support.hpp"

namespace hypsec {
namespace {

TEST(Flags, Cardinality) {
  for (std::uint64_t q : {5u, 7u, 11u}) {
    const FiniteField& f = build_ext_field(q, 1);
    EXPECT_EQ(projective_points(f).size(), q * q + q + 1);
    const auto flags = enumerate_flags(f);
    EXPECT_EQ(flags.size(), (q * q + q + 1) * (q + 1));
    for (const auto& fl : flags) {
      ASSERT_TRUE(dot(fl.a, fl.b).is_zero());
      ASSERT_EQ(normalize_projective(fl.a), fl.a);
      ASSERT_EQ(normalize_projective(fl.b), fl.b);
    }
  }
}

TEST(Flags, EvaluationExamples) {
  const FiniteField& f = build_ext_field(7, 1);
  const FlagPoint fl{test::fvec(f, 1, 0, 0), test::fvec(f, 0, 1, 0)};
  EXPECT_TRUE(evaluate_section_at_flag(SectionMatrix<Gf>(Matrix3<Gf>::identity(f.zero())), fl).is_zero());
  EXPECT_TRUE(evaluate_section_at_flag(SectionMatrix<Gf>(test::fmat(f, {0, 1, 0, 0, 0, 0, 0, 0, 0})), fl).is_one());
  EXPECT_TRUE(evaluate_section_at_flag(SectionMatrix<Gf>(test::fmat(f, {1, 0, 0, 0, 2, 0, 0, 0, 3})), fl).is_zero());
  const FlagPoint bad{test::fvec(f, 1, 0, 0), test::fvec(f, 1, 0, 0)};
  EXPECT_THROW(evaluate_section_at_flag(SectionMatrix<Gf>(Matrix3<Gf>::identity(f.zero())), bad),
               std::invalid_argument);
}

TEST(Flags, IdentityShiftLeavesEveryValueUnchanged) {
  std::mt19937_64 rng(73);
  const FiniteField& f = build_ext_field(5, 1);
  const auto flags = enumerate_flags(f);
  for (int i = 0; i < 100; ++i) {
    const SectionMatrix<Gf> s(test::random_gf_matrix(f, rng));
    const Gf lambda = test::random_gf(f, rng);
    const SectionMatrix<Gf> shifted(s.matrix() + lambda * Matrix3<Gf>::identity(lambda));
    for (const auto& fl : flags) ASSERT_EQ(evaluate_section_at_flag(s, fl), evaluate_section_at_flag(shifted, fl));
  }
}

TEST(Count, WitnessesAtQ7) {
  const auto a = count_hyperplane_section(parse_section("X, 2Y, 3Z"), 7);
  EXPECT_EQ(a.total_flag, 456u);
  EXPECT_EQ(a.N, 3u);
  EXPECT_EQ(a.section_count, 78u);
  EXPECT_EQ(a.section_count, 7u * 7 + 4 * 7 + 1);
  EXPECT_TRUE(a.match);

  const auto d = count_hyperplane_section(parse_section("X, 0, Z"), 7);
  EXPECT_EQ(d.N, 9u);
  EXPECT_EQ(d.section_count, 120u);
  EXPECT_EQ(d.section_count, (7u + 1) * (2 * 7 + 1));

  const auto e = count_hyperplane_section(parse_section("Y, 0, 0"), 7);
  EXPECT_EQ(e.N, 8u);
  EXPECT_EQ(e.section_count, 113u);
  EXPECT_TRUE(e.match);

  EXPECT_THROW(count_hyperplane_section(parse_section("X, Y, Z"), 7), std::invalid_argument);
  EXPECT_THROW(count_hyperplane_section(SectionMatrix<Gf>(test::fmat(build_ext_field(5, 2), {0, 1, 0, 0, 0, 0, 0, 0, 0}))),
               std::invalid_argument);
}

TEST(Count, IdentityAndSerialParallelAgreement) {
  std::mt19937_64 rng(79);
  for (std::uint64_t q : {5u, 7u, 11u, 13u}) {
    const FiniteField& f = build_ext_field(q, 1);
    const auto flags = enumerate_flags(f);
    for (int i = 0; i < 150; ++i) {
      const auto s = test::random_section([&] { return test::random_gf_matrix(f, rng); }, rng);
      const auto serial = count_hyperplane_section(s, false);
      EXPECT_TRUE(serial.match) << render_section(s);
      EXPECT_EQ(count_section_zeros_parallel(s, flags), count_section_zeros_serial(s, flags));
      EXPECT_EQ(predicted_rational_points(classify_section(s), q), serial.N) << render_section(s);
    }
  }
}

TEST(Count, SplitTypeFormulas) {
  for (std::uint64_t q : {5u, 7u, 11u}) {
    EXPECT_EQ(count_hyperplane_section(parse_section("X, 2Y, 3Z"), q).section_count, q * q + 4 * q + 1);
    EXPECT_EQ(count_hyperplane_section(parse_section("X, 0, Z"), q).section_count, (q + 1) * (2 * q + 1));
  }
}

TEST(Enumeration, ExhaustiveOrderIsABijection) {
  const std::uint64_t q = 5;
  EXPECT_EQ(exhaustive_class_count(q), 97656u);
  EXPECT_EQ(exhaustive_class_count(7), 960800u);
  std::set<std::array<std::uint64_t, 8>> seen;
  for (std::uint64_t i = 0; i < exhaustive_class_count(q); ++i) {
    const auto c = exhaustive_class(q, i);
    const auto lead = std::find_if(c.begin(), c.end(), [](std::uint64_t x) { return x != 0; });
    ASSERT_NE(lead, c.end());
    ASSERT_EQ(*lead, 1u);
    for (auto x : c) ASSERT_LT(x, q);
    seen.insert(c);
  }
  EXPECT_EQ(seen.size(), exhaustive_class_count(q));
  EXPECT_EQ(exhaustive_class(q, 0), (std::array<std::uint64_t, 8>{1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(exhaustive_class(q, exhaustive_class_count(q) - 1), (std::array<std::uint64_t, 8>{0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(exhaustive_class(q, exhaustive_class_count(q)), std::out_of_range);
}

TEST(Enumeration, SamplesAreDeterministicAndDistinct) {
  const auto a = sample_classes(7, 2000, 42), b = sample_classes(7, 2000, 42), c = sample_classes(7, 2000, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(std::set(a.begin(), a.end()).size(), a.size());
  EXPECT_THROW(sample_classes(5, 100000, 1), std::invalid_argument);
}

TEST(Sweep, SerialAndParallelAgree) {
  SweepOptions opt;
  opt.q = 7;
  opt.sample = 1500;
  opt.seed = 5;
  opt.parallel = false;
  const auto serial = sweep_verify(opt);
  opt.parallel = true;
  const auto parallel = sweep_verify(opt);
  EXPECT_EQ(serial.tallies, parallel.tallies);
  EXPECT_EQ(serial.failures.size(), 0u);
  EXPECT_EQ(parallel.failures.size(), 0u);
  EXPECT_EQ(serial.classes, 1500u);
}

TEST(Sweep, RejectsUnsupportedInput) {
  SweepOptions opt;
  opt.q = 11;
  EXPECT_THROW(sweep_verify(opt), std::invalid_argument);
  opt.q = 3;
  opt.sample = 10;
  EXPECT_THROW(sweep_verify(opt), std::invalid_argument);
}

TEST(Sweep, CanonicalWitnessesHitEveryType) {
  const FiniteField& f = build_ext_field(5, 1);
  std::set<ZeroSchemeType> types;
  for (const char* text : {"X, 2Y, 3Z", "Y, 0, Z", "Y, Z, 0", "X, 0, Z", "Y, 0, 0"}) {
    const auto s = reduce_section(parse_section(text), f);
    types.insert(classify_section(s).type);
    EXPECT_TRUE(count_hyperplane_section(s).match);
  }
  EXPECT_EQ(types.size(), 5u);
}

}  // namespace
}  // namespace hypsec
