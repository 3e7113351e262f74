#include <gtest/gtest.h>

#include <random>

#include "hypsec/sections/hyperplane.hpp"
#include "hypsec/sections/section.hpp"
#include "test_support.hpp"

namespace hypsec {
namespace {

using test::qmat;

std::array<Rational, 8> qcoords(std::initializer_list<long> c) {
  std::array<Rational, 8> out;
  int i = 0;
  for (long x : c) out[i++] = Rational(x);
  return out;
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_section("X, 2*Y, 3*Z").matrix(), qmat({1, 0, 0, 0, 2, 0, 0, 0, 3}));
  EXPECT_EQ(parse_section("X, 2Y, 3Z").matrix(), qmat({1, 0, 0, 0, 2, 0, 0, 0, 3}));
  EXPECT_EQ(parse_section("Y, 0, 0").matrix(), qmat({0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(parse_section("Y, Z+X, 0").matrix(), qmat({0, 1, 0, 1, 0, 1, 0, 0, 0}));
  auto expected = qmat({-1, -2, 0, -1, 0, 0, 0, 0, 0});
  expected(1, 2) = Rational(1, 2);
  EXPECT_EQ(parse_section(" -X + -2*Y , 1/2 Z - X,0 ").matrix(), expected);
  EXPECT_EQ(parse_section("X + X, 0, 0").matrix(), qmat({2, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(parse_section("0, 0, 0").is_zero_section());
}

struct BadInput {
  const char* text;
  const char* message;
  std::size_t position;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportMessageAndPosition) {
  const BadInput& b = GetParam();
  try {
    parse_section(b.text);
    FAIL() << "accepted " << b.text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(b.message), std::string::npos) << e.what();
    EXPECT_EQ(e.position(), b.position) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(Section, ParseErrors,
                         ::testing::Values(BadInput{"X, W, Z", "unknown variable 'W'", 3},
                                           BadInput{"X*Y, 0, 0", "nonlinear term", 0},
                                           BadInput{"X + 1, 0, 0", "constant term in linear form", 4},
                                           BadInput{"X, Y", "expected 3 linear forms", 4},
                                           BadInput{"X, Y, Z, X", "more than 3 linear forms", 7},
                                           BadInput{"X Y, 0, 0", "nonlinear term", 0},
                                           BadInput{"X; 0, 0", "expected '+' or '-'", 1},
                                           BadInput{"X, , Z", "expected term", 3},
                                           BadInput{"2*, 0, 0", "expected variable after '*'", 2},
                                           BadInput{"1/0 X, 0, 0", "zero denominator", 0}));

TEST(Render, LinearForms) {
  EXPECT_EQ(render_linear_form(test::qvec(0, 2, 0)), "2*Y");
  EXPECT_EQ(render_linear_form(test::qvec(-1, 0, 0)), "-X");
  EXPECT_EQ(render_linear_form(Vec3<Rational>{Rational(1, 2), Rational(0), Rational(-1)}), "1/2*X - Z");
  EXPECT_EQ(render_linear_form(test::qvec(0, 0, 0)), "0");
  EXPECT_EQ(render_section(parse_section("X, 2Y, 3Z")), "X, 2*Y, 3*Z");
}

TEST(Render, ParseOfRenderIsIdentity) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const SectionMatrix<Rational> s(test::random_rational_matrix(rng, 12));
    EXPECT_EQ(parse_section(render_section(s)), s) << render_section(s);
  }
}

TEST(Reduce, ModP) {
  const FiniteField& f7 = build_ext_field(7, 1);
  EXPECT_EQ(reduce_rational(Rational(1, 2), f7).value(), 4u);
  EXPECT_EQ(reduce_rational(Rational(-3), f7).value(), 4u);
  EXPECT_THROW(reduce_rational(Rational(1, 7), f7), std::invalid_argument);
  EXPECT_EQ(render_section(reduce_section(parse_section("X, -Y, 1/2 Z"), f7)), "X, 6*Y, 4*Z");
}

TEST(Hyperplane, BasisExamples) {
  EXPECT_EQ(hyperplane_to_section(HyperplaneP7<Rational>(qcoords({1, 0, 0, 0, 0, 0, 0, 0}))).matrix(),
            qmat({1, 0, 0, 0, 0, 0, 0, 0, -1}));
  EXPECT_EQ(hyperplane_to_section(HyperplaneP7<Rational>(qcoords({0, 0, 1, 0, 0, 0, 0, 0}))).matrix(),
            qmat({0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(section_to_hyperplane(parse_section("X + Y, Y, Z")).to_string(), "(0,0,1,0,0,0,0,0)");
  EXPECT_EQ(section_to_hyperplane(parse_section("0, X, 0")).to_string(), "(0,0,0,0,1,0,0,0)");
  EXPECT_EQ(section_to_hyperplane(parse_section("X, 2Y, 3Z")).to_string(), "(1,0,0,0,0,0,0,0)");
  EXPECT_EQ(parse_section("X, 2Y, 3Z").trace_free().matrix(), qmat({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(HyperplaneP7<Rational>(qcoords({0, 0, 0, 0, 0, 0, 0, 0})), std::invalid_argument);
  EXPECT_THROW(section_to_hyperplane(parse_section("3X, 3Y, 3Z")), std::invalid_argument);
}

// hyperplane_to_section(section_to_hyperplane(s)) is the trace-free
// representative divided by its leading coordinate.
template <FieldElement F>
void check_round_trip(const SectionMatrix<F>& s) {
  const auto h = section_to_hyperplane(s);
  const auto back = hyperplane_to_section(h);
  F lead = s.like();
  for (const auto& c : trace_free_coords(s))
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  EXPECT_EQ(SectionMatrix<F>(lead * back.matrix()), s.trace_free());
  EXPECT_TRUE(back.same_section(SectionMatrix<F>(lead.inverse() * s.matrix())));
  EXPECT_EQ(section_to_hyperplane(back), h);
  EXPECT_EQ(hyperplane_to_section(section_to_hyperplane(back)), back);
}

TEST(Hyperplane, RoundTripAndShiftInvarianceOverQ) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const auto s = test::random_section([&] { return test::random_rational_matrix(rng); }, rng);
    check_round_trip(s);
    const Rational lambda = test::random_small_rational(rng, 7);
    const SectionMatrix<Rational> shifted(s.matrix() + lambda * Matrix3<Rational>::identity(lambda));
    EXPECT_EQ(section_to_hyperplane(shifted), section_to_hyperplane(s));
  }
}

TEST(Hyperplane, RoundTripOverF7) {
  std::mt19937_64 rng(47);
  const FiniteField& f = build_ext_field(7, 1);
  for (int i = 0; i < 2000; ++i) {
    const auto s = test::random_section([&] { return test::random_gf_matrix(f, rng); }, rng);
    check_round_trip(s);
  }
}

TEST(SectionMatrix, Equivalence) {
  const auto a = parse_section("X + Y, Y, Z");
  const auto b = parse_section("Y + 4X, 4Y, 4Z");
  EXPECT_TRUE(a.same_section(b));
  EXPECT_FALSE(a.same_section(parse_section("Y, 0, Z")));
  EXPECT_TRUE(parse_section("5X, 5Y, 5Z").is_zero_section());
  EXPECT_THROW(parse_section("X, Y, Z").require_nonzero(), std::invalid_argument);
}

}  // namespace
}  // namespace hypsec
