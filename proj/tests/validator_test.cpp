#include "cubetess/validator.hpp"

#include <gtest/gtest.h>

#include "cubetess/error.hpp"
#include "cubetess/generators.hpp"

namespace cubetess {
namespace {

Cube square(Rational x, Rational y, Rational s) { return Cube{{std::move(x), std::move(y)}, std::move(s)}; }

TEST(Validate, PerfectGrid) {
  ValidationReport r = validate(perfect_grid(2, 2, 1));
  EXPECT_TRUE(r.is_valid);
  EXPECT_EQ(r.volume_sum, Rational(4));
  EXPECT_EQ(r.volume_target, Rational(4));
  EXPECT_TRUE(r.violations.empty());
}

TEST(Validate, TranslatedCubeOverlaps) {
  Tessellation t(2, 2, {square(0, 0, 1), square(Rational(1, 4), 1, 1), square(1, 0, 1), square(1, 1, 1)});
  ValidationReport r = validate(t);
  EXPECT_FALSE(r.is_valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], (Violation{ViolationKind::Overlap, {1, 3}}));
}

TEST(Validate, Undercover) {
  Tessellation t(2, 2, {square(0, 0, 1), square(1, 0, 1), square(0, 1, 1)});
  ValidationReport r = validate(t);
  EXPECT_FALSE(r.is_valid);
  EXPECT_EQ(r.volume_sum, Rational(3));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::VolumeMismatch);
}

TEST(Validate, ReportsEveryViolationInCanonicalOrder) {
  // cube 2 sticks out, cubes 0/1 and 0/3 overlap, volume is off
  Tessellation t(2, 2, {square(0, 0, 2), square(1, 1, 1), square(2, 0, 1), square(0, 0, 1)});
  ValidationReport r = validate(t);
  ASSERT_EQ(r.violations.size(), 4u);
  EXPECT_EQ(r.violations[0], (Violation{ViolationKind::OutOfBounds, {2}}));
  EXPECT_EQ(r.violations[1], (Violation{ViolationKind::Overlap, {0, 1}}));
  EXPECT_EQ(r.violations[2], (Violation{ViolationKind::Overlap, {0, 3}}));
  EXPECT_EQ(r.violations[3].kind, ViolationKind::VolumeMismatch);
}

TEST(Validate, SweepMatchesPlainPairLoop) {
  // overlapping grids offset by thirds exercise the sort-based prefilter
  std::vector<Cube> cubes;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      cubes.push_back(square(Rational(i * 2, 3), Rational(j, 2), Rational(1, 2) + Rational(i + j, 7)));
    }
  }
  Tessellation t(2, 4, cubes);
  std::vector<Violation> expected;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (std::size_t j = i + 1; j < cubes.size(); ++j) {
      if (interiors_overlap(cubes[i], cubes[j], 2)) expected.push_back({ViolationKind::Overlap, {i, j}});
    }
  }
  std::vector<Violation> got;
  for (const auto& v : validate(t).violations) {
    if (v.kind == ViolationKind::Overlap) got.push_back(v);
  }
  EXPECT_FALSE(expected.empty());
  EXPECT_EQ(got, expected);
}

TEST(HypothesisCheck, Examples) {
  EXPECT_TRUE(hypothesis_check(perfect_grid(2, 2, 1)).holds);

  HypothesisResult shell = hypothesis_check(shell_construction(2, 2));
  EXPECT_FALSE(shell.holds);
  EXPECT_EQ(shell.offending_side, Rational(1, 2));

  // n = 9, d = 2, a side of 3/4: (3/4 / 1/4)^2 = 9 is not > 9
  EXPECT_FALSE(below_ratio_power(Integer(9), Rational(3, 4), 2));
  EXPECT_TRUE(below_ratio_power(Integer(8), Rational(3, 4), 2));
  EXPECT_TRUE(below_ratio_power(Integer(9), Rational(76, 100), 2));
}

TEST(HypothesisCheck, RefinedGridFails) {
  Tessellation t = refine(perfect_grid(2, 2, 1), 0, perfect_grid(2, 2, 1));
  HypothesisResult h = hypothesis_check(t);
  EXPECT_FALSE(h.holds);
  EXPECT_EQ(h.offending_side, Rational(1, 2));
}

TEST(HypothesisCheck, NormalizesByLargestSide) {
  EXPECT_TRUE(hypothesis_check(perfect_grid(3, 2, Rational(5, 9))).holds);
  HypothesisResult h = hypothesis_check(merged_block_grid(2, 3, 2));
  EXPECT_FALSE(h.holds);
  EXPECT_EQ(h.offending_side, Rational(1, 2));
}

TEST(ConclusionCheck, Examples) {
  ConclusionResult a = conclusion_check(perfect_grid(3, 2, 1));
  EXPECT_TRUE(a.n_is_perfect_power);
  EXPECT_EQ(a.root_m, Integer(2));
  EXPECT_TRUE(a.all_sides_equal);

  ConclusionResult b = conclusion_check(shell_construction(2, 2));
  EXPECT_FALSE(b.n_is_perfect_power);
  EXPECT_FALSE(b.root_m);

  // 9 cubes of unequal sizes: a perfect square without congruence
  Tessellation nine = refine(merged_block_grid(2, 3, 2), 1, perfect_grid(2, 2, 1));
  ASSERT_EQ(nine.size(), 9u);
  ASSERT_TRUE(validate(nine).is_valid);
  ConclusionResult c = conclusion_check(nine);
  EXPECT_TRUE(c.n_is_perfect_power);
  EXPECT_EQ(c.root_m, Integer(3));
  EXPECT_FALSE(c.all_sides_equal);
}

TEST(StabilityOracle, Examples) {
  StabilityReport g = stability_oracle(perfect_grid(3, 3, 1));
  EXPECT_TRUE(g.hypothesis_holds);
  EXPECT_EQ(g.root_m, Integer(3));
  EXPECT_TRUE(g.all_sides_equal);
  EXPECT_FALSE(g.offending_side);

  StabilityReport s = stability_oracle(shell_construction(2, 2));
  EXPECT_EQ(s.n, 7u);
  EXPECT_FALSE(s.hypothesis_holds);
  EXPECT_FALSE(s.n_is_perfect_power);

  StabilityReport mb = stability_oracle(merged_block_grid(2, 3, 2));
  EXPECT_EQ(mb.n, 6u);
  EXPECT_FALSE(mb.hypothesis_holds);
  EXPECT_FALSE(mb.n_is_perfect_power);
  EXPECT_EQ(mb.s_max, Rational(2));
}

TEST(StabilityOracle, RejectsInvalidInput) {
  Tessellation t(2, 2, {square(0, 0, 1), square(1, 0, 1), square(0, 1, 1)});
  try {
    stability_oracle(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidInput);
  }
}

}  // namespace
}  // namespace cubetess
