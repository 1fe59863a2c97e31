#include <gtest/gtest.h>

#include "khr/fixtures.hpp"
#include "khr/homology.hpp"
#include "khr/khcomplex.hpp"

using namespace khr;

TEST(Grading, RegradeIsAnInvolutionPair) {
  for (int q = -5; q <= 5; ++q)
    for (int t = -3; t <= 3; ++t)
      for (int w = -4; w <= 4; ++w) {
        Bidegree b{q, t};
        EXPECT_EQ(fr_to_std(regrade_fr(b, 2, w), 2, w), b);
      }
  EXPECT_EQ(regrade_fr({9, 3}, 2, 3), (Bidegree{3, 0}));
  EXPECT_EQ(framing_shift(2, 1), (Bidegree{-2, 1}));
  EXPECT_EQ(framing_shift(1, -1), (Bidegree{1, -1}));
  EXPECT_EQ(parse_grading("std"), Grading::Std);
  EXPECT_THROW(parse_grading("xyz"), ParseError);
}

TEST(Cube, UnknotChainGroup) {
  auto c = cube(fixture("unknot").diagram(), unknot_algebra(2));
  EXPECT_EQ(c.total_dimension(), 2u);
  EXPECT_EQ(c.t_min, 0);
  EXPECT_EQ(c.basis_at(0)[0].q, -1);
  EXPECT_EQ(c.basis_at(0)[1].q, 1);
}

TEST(Cube, DimensionsOfTrefoilCube) {
  PlanarDiagram d = fixture("trefoil_right").diagram();
  auto c = cube(d, unknot_algebra(2));
  EXPECT_EQ(c.t_min, 0);
  EXPECT_EQ(c.t_max(), 3);
  // Resolution circles per popcount: fr vertex 0 is the all-unoriented smoothing.
  std::size_t total = 0;
  for (int t = 0; t <= 3; ++t) total += c.basis_at(t).size();
  EXPECT_EQ(total, c.total_dimension());
  EXPECT_EQ(c.basis_at(3).size(), 4u);  // Seifert resolution: 2 circles
  EXPECT_TRUE(differential_squares_to_zero(c));
}

TEST(Cube, NegativeCrossingsStartBelowZero) {
  auto c = cube(fixture("trefoil_left").diagram(), unknot_algebra(2));
  EXPECT_EQ(c.t_min, -3);
  EXPECT_EQ(c.t_max(), 0);
}

TEST(Cube, RankOneKeepsOnlyOrientedResolution) {
  for (const auto& f : fixtures()) {
    auto c = cube(f.diagram(), unknot_algebra(1));
    EXPECT_EQ(c.total_dimension(), 1u) << f.name;
  }
}

TEST(Cube, HigherRankNeedsCrossingless) {
  EXPECT_THROW(cube(fixture("trefoil_right").diagram(), unknot_algebra(3)), UnsupportedError);
  auto c = cube(fixture("unlink2").diagram(), unknot_algebra(3));
  EXPECT_EQ(c.total_dimension(), 9u);
}

TEST(Cube, DeformedDifferentialLowersQ) {
  for (const auto& f : fixtures()) {
    if (f.crossings > 6) continue;
    auto c = deformed_complex(f.diagram(), DeformationMultiset::consecutive(2));
    EXPECT_TRUE(differential_squares_to_zero(c)) << f.name;
    for (int t = c.t_min; t < c.t_max(); ++t) {
      const auto& m = c.differential_at(t);
      for (int j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j]) EXPECT_LE(c.basis_at(t + 1)[r].q, c.basis_at(t)[j].q) << f.name;
    }
  }
}

TEST(Cube, EquivariantSpecializationMatchesDeformedCube) {
  PlanarDiagram d = fixture("hopf_pos").diagram();
  DeformationMultiset s = DeformationMultiset::parse("-1,2");
  auto sym = cube(d, equivariant_algebra(2));
  EXPECT_TRUE(differential_squares_to_zero(sym));
  auto values = equivariant_values(s);
  auto specialized = specialize(sym, values);
  auto direct = deformed_complex(d, s);
  ASSERT_EQ(specialized.differential.size(), direct.differential.size());
  for (std::size_t k = 0; k < specialized.differential.size(); ++k)
    EXPECT_EQ(specialized.differential[k].columns, direct.differential[k].columns);
}

TEST(Cube, EulerCharacteristicIsKunnethForSplitUnion) {
  PlanarDiagram a = fixture("trefoil_right").diagram(), b = fixture("unknot").diagram();
  auto ea = graded_euler_characteristic(cube(a, unknot_algebra(2)));
  auto eu = graded_euler_characteristic(cube(disjoint_union(a, b), unknot_algebra(2)));
  std::map<int, long> product;
  for (const auto& [q, c] : ea) {
    product[q - 1] += c;
    product[q + 1] += c;
  }
  std::vector<std::pair<int, long>> expected;
  for (const auto& [q, c] : product)
    if (c != 0) expected.emplace_back(q, c);
  EXPECT_EQ(eu, expected);
}

TEST(Cube, EulerCharacteristicMatchesHomology) {
  for (const auto& f : fixtures()) {
    if (f.crossings > 8) continue;
    auto c = cube(f.diagram(), unknot_algebra(2));
    auto chi = graded_euler_characteristic(c);
    std::map<int, long> from_h;
    for (const auto& [b, n] : rational_homology(c).free) from_h[b.q] += (b.t % 2 == 0 ? 1 : -1) * static_cast<long>(n);
    std::vector<std::pair<int, long>> expected;
    for (const auto& [q, v] : from_h)
      if (v != 0) expected.emplace_back(q, v);
    EXPECT_EQ(chi, expected) << f.name;
  }
}
