#include <gtest/gtest.h>

#include "khr/frobenius.hpp"
#include "oracle.hpp"

using namespace khr;

TEST(Deformation, ParsesMultiplicities) {
  DeformationMultiset s = DeformationMultiset::parse("0^2, 1, -1/2");
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.total(), 4);
  EXPECT_FALSE(s.all_simple());
  EXPECT_EQ(s.max_multiplicity(), 2);
  EXPECT_EQ(DeformationMultiset::parse(s.str()), s);
  EXPECT_THROW(DeformationMultiset::parse("0,0"), ValidationError);
  EXPECT_THROW(DeformationMultiset::parse("0^0"), ValidationError);
  EXPECT_THROW(DeformationMultiset::parse(""), ParseError);
  EXPECT_THROW(DeformationMultiset::parse("a"), ParseError);
}

TEST(Deformation, ElementarySymmetric) {
  auto e = DeformationMultiset::parse("1,2,3").elementary_symmetric();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], Rational(6));
  EXPECT_EQ(e[1], Rational(11));
  EXPECT_EQ(e[2], Rational(6));
}

TEST(Frobenius, UndeformedRankTwo) {
  auto a = unknot_algebra(2);
  EXPECT_EQ(a.degree(0), -1);
  EXPECT_EQ(a.degree(1), 1);
  // X * X = 0, counit picks the X coefficient.
  EXPECT_EQ(a.mult[1][1], (std::vector<Rational>{0, 0}));
  EXPECT_EQ(a.counit, (std::vector<Rational>{0, 1}));
  // Δ(1) = 1⊗X + X⊗1, Δ(X) = X⊗X
  EXPECT_EQ(a.comult[0][0][1], Rational(1));
  EXPECT_EQ(a.comult[0][1][0], Rational(1));
  EXPECT_EQ(a.comult[0][0][0], Rational(0));
  EXPECT_EQ(a.comult[1][1][1], Rational(1));
  EXPECT_TRUE(frobenius_axiom_failures(a).empty());
}

TEST(Frobenius, DeformedRankTwoComultiplication) {
  auto a = unknot_algebra(2, DeformationMultiset::parse("2,3"));  // X^2 = 5X - 6
  EXPECT_EQ(a.relation, (std::vector<Rational>{-6, 5}));
  EXPECT_EQ(a.comult[0][0][0], Rational(-5));
  EXPECT_EQ(a.comult[1][0][0], Rational(-6));
  EXPECT_EQ(a.comult[1][1][1], Rational(1));
  EXPECT_TRUE(frobenius_axiom_failures(a).empty());
}

TEST(Frobenius, AxiomsHoldAcrossModes) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(frobenius_axiom_failures(unknot_algebra(n)).empty()) << n;
    EXPECT_TRUE(frobenius_axiom_failures(equivariant_algebra(n)).empty()) << n;
  }
  EXPECT_TRUE(frobenius_axiom_failures(unknot_algebra(4, DeformationMultiset::parse("0^2,1,-7/3"))).empty());
  EXPECT_THROW(unknot_algebra(3, DeformationMultiset::parse("0,1")), ValidationError);
}

TEST(Frobenius, EquivariantSpecializesToDeformed) {
  for (const char* text : {"0,1", "0^2", "-1,1/2,3", "1^2,2"}) {
    DeformationMultiset s = DeformationMultiset::parse(text);
    auto values = equivariant_values(s);
    auto specialized = specialize(equivariant_algebra(s.total()), values);
    auto direct = unknot_algebra(s.total(), s);
    EXPECT_EQ(specialized.mult, direct.mult) << text;
    EXPECT_EQ(specialized.comult, direct.comult) << text;
    EXPECT_EQ(specialized.relation, direct.relation) << text;
  }
  std::vector<Rational> zeros(3, Rational(0));
  auto specialized = specialize(equivariant_algebra(3), zeros);
  EXPECT_EQ(specialized.mult, unknot_algebra(3).mult);
}

TEST(Frobenius, CrtIdempotentsMatchHermiteInterpolation) {
  for (const char* text : {"0,1", "0^2,1", "-1,1/2,3", "2^3,-1^2", "5"}) {
    DeformationMultiset s = DeformationMultiset::parse(text);
    std::vector<std::pair<Rational, int>> roots;
    for (const auto& e : s.entries()) roots.emplace_back(e.value, e.multiplicity);
    auto idem = crt_idempotents(s);
    ASSERT_EQ(idem.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
      EXPECT_EQ(idem[i], RatPoly(oracle::hermite_idempotent(roots, i))) << text << " entry " << i;
  }
}

TEST(Frobenius, TwistingScalars) {
  DeformationMultiset s = DeformationMultiset::parse("0^2,1,3");
  EXPECT_EQ(twisting_scalar(s, 0), Rational(3));    // (0-1)(0-3)
  EXPECT_EQ(twisting_scalar(s, 1), Rational(-2));   // (1-0)^2 (1-3)
  EXPECT_EQ(twisting_scalar(s, 2), Rational(18));   // (3-0)^2 (3-1)
}

TEST(Frobenius, SphereEvaluation) {
  DeformationMultiset s = DeformationMultiset::parse("0,1");
  EXPECT_EQ(sphere_evaluation(s, RatPoly(Rational(1))), Rational(0));
  EXPECT_EQ(sphere_evaluation(s, RatPoly::monomial(1, 1)), Rational(1));
  EXPECT_EQ(sphere_evaluation(s, RatPoly::monomial(1, 2)), Rational(1));  // X^2 = X
  // ε(e(λ_i)) = 1 / d_i for simple roots.
  auto idem = crt_idempotents(s);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(sphere_evaluation(s, idem[i]), 1 / twisting_scalar(s, i));
}
