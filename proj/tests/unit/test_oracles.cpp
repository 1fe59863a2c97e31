// Sanity checks of the test oracles themselves against published values.

#include <gtest/gtest.h>

#include "khr/fixtures.hpp"
#include "oracle.hpp"

using namespace khr;

TEST(Oracle, BarNatanTrefoil) {
  auto r = oracle::bar_natan_homology(fixture("trefoil_right").diagram(), true);
  std::map<std::pair<int, int>, std::size_t> expected{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 2}, 1}, {{9, 3}, 1}};
  EXPECT_EQ(r.free, expected);
  ASSERT_EQ(r.torsion.size(), 1u);
  EXPECT_EQ(r.torsion.begin()->first, (std::pair<int, int>{7, 3}));
}

TEST(Oracle, BarNatanFigureEight) {
  auto r = oracle::bar_natan_homology(fixture("figure8").diagram(), false);
  std::map<std::pair<int, int>, std::size_t> expected{{{-5, -2}, 1}, {{-1, -1}, 1}, {{-1, 0}, 1},
                                                      {{1, 0}, 1},   {{1, 1}, 1},   {{5, 2}, 1}};
  EXPECT_EQ(r.free, expected);
}

TEST(Oracle, LeeDeformationOfKnotIsTwoDimensional) {
  auto dims = oracle::bar_natan_deformed_dimensions(fixture("figure8").diagram(), 0, 1);
  EXPECT_EQ(dims, (std::map<int, std::size_t>{{0, 2}}));
}

TEST(Oracle, SmithHelpersAgree) {
  oracle::DenseZ m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(oracle::determinantal_invariant_factors(m), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(oracle::dense_smith_diagonal(m), (std::vector<Integer>{2, 6, 12}));
}

TEST(Oracle, HermiteIdempotentForDoubleRoot) {
  // Σ = {0^2, 1}: e(1) = X^2.
  auto e = oracle::hermite_idempotent({{Rational(0), 2}, {Rational(1), 1}}, 1);
  EXPECT_EQ(e, (std::vector<Rational>{0, 0, 1}));
}
