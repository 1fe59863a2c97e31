// Randomized properties over closures of short braid words.

#include <gtest/gtest.h>

#include <random>

#include "khr/homology.hpp"
#include "khr/lasagna.hpp"
#include "oracle.hpp"

using namespace khr;

namespace {

using FreeMap = std::map<Bidegree, std::size_t>;

struct Braid {
  int width = 2;
  std::vector<int> word;
};

Braid random_braid(std::mt19937& rng, int max_width, int max_len) {
  std::uniform_int_distribution<int> width(2, max_width), len(1, max_len), coin(0, 1);
  Braid b;
  b.width = width(rng);
  std::uniform_int_distribution<int> gen(1, b.width - 1);
  int n = len(rng);
  for (int i = 0; i < n; ++i) b.word.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return b;
}

std::string describe(const Braid& b) {
  std::string s = "BR[" + std::to_string(b.width) + ";";
  for (int g : b.word) s += " " + std::to_string(g);
  return s + "]";
}

FreeMap homology(const PlanarDiagram& d, int rank = 2) { return rational_homology(cube(d, unknot_algebra(rank))).free; }

FreeMap shifted(const FreeMap& m, Bidegree by) {
  FreeMap out;
  for (const auto& [b, n] : m) out[{b.q + by.q, b.t + by.t}] = n;
  return out;
}

class BraidProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20261018u};
};

}  // namespace

TEST_F(BraidProperties, SecondReidemeisterMoveInvariance) {
  for (int trial = 0; trial < 25; ++trial) {
    Braid b = random_braid(rng, 3, 5);
    Braid c = b;
    std::uniform_int_distribution<int> pos(0, static_cast<int>(b.word.size())), gen(1, b.width - 1);
    int g = gen(rng);
    c.word.insert(c.word.begin() + pos(rng), {g, -g});
    EXPECT_EQ(homology(braid_closure(b.width, b.word)), homology(braid_closure(c.width, c.word)))
        << describe(b) << " vs " << describe(c);
  }
}

TEST_F(BraidProperties, ConjugationInvariance) {
  for (int trial = 0; trial < 25; ++trial) {
    Braid b = random_braid(rng, 4, 6);
    Braid c = b;
    std::rotate(c.word.begin(), c.word.begin() + 1, c.word.end());
    EXPECT_EQ(homology(braid_closure(b.width, b.word)), homology(braid_closure(c.width, c.word))) << describe(b);
  }
}

TEST_F(BraidProperties, StabilizationShiftsByFraming) {
  for (int trial = 0; trial < 20; ++trial) {
    Braid b = random_braid(rng, 3, 5);
    for (int sign : {+1, -1}) {
      Braid c = b;
      c.width += 1;
      c.word.push_back(sign * b.width);
      for (int rank : {1, 2})
        EXPECT_EQ(homology(braid_closure(c.width, c.word), rank),
                  shifted(homology(braid_closure(b.width, b.word), rank), framing_shift(rank, sign)))
            << describe(b) << " sign " << sign << " N=" << rank;
    }
  }
}

TEST_F(BraidProperties, MirrorReflectsBidegrees) {
  for (int trial = 0; trial < 20; ++trial) {
    Braid b = random_braid(rng, 3, 6);
    PlanarDiagram d = braid_closure(b.width, b.word);
    FreeMap h = homology(d), hm = homology(mirror(d)), reflected;
    for (const auto& [x, n] : h) reflected[{-x.q, -x.t}] = n;
    EXPECT_EQ(hm, reflected) << describe(b);
  }
}

TEST_F(BraidProperties, IntegralHomologyMatchesOracle) {
  for (int trial = 0; trial < 20; ++trial) {
    Braid b = random_braid(rng, 3, 6);
    PlanarDiagram d = braid_closure(b.width, b.word);
    int w = writhe(d);
    auto h = integral_homology(cube(d, unknot_algebra(2)));
    auto expected = oracle::bar_natan_homology(d, true);
    std::map<std::pair<int, int>, std::size_t> free;
    for (const auto& [x, n] : h.free_in(Grading::Std)) free[{x.q, x.t}] = n;
    std::map<std::pair<int, int>, std::vector<Integer>> torsion;
    for (const auto& tor : h.torsion) torsion[{tor.q + 2 * w, torsion_std_placement(tor.t, w)}] = tor.orders;
    EXPECT_EQ(free, expected.free) << describe(b);
    EXPECT_EQ(torsion, expected.torsion) << describe(b);
  }
}

TEST_F(BraidProperties, DeformedTotalIsTwoToTheComponents) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Braid b = random_braid(rng, 3, 6);
    PlanarDiagram d = braid_closure(b.width, b.word);
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    if (x == y) y += 1;
    DeformationMultiset s({{x, 1}, {y, 1}});
    auto c = deformed_complex(d, s);
    EXPECT_TRUE(differential_squares_to_zero(c)) << describe(b);
    auto h = filtered_homology(c);
    EXPECT_EQ(h.total_dimension(), std::size_t{1} << d.component_count()) << describe(b) << " " << s.str();
    EXPECT_TRUE(verify_decomposition(d, s).matched()) << describe(b) << " " << s.str();
  }
}

TEST_F(BraidProperties, ReversingEveryComponentPreservesHomology) {
  for (int trial = 0; trial < 15; ++trial) {
    Braid b = random_braid(rng, 3, 5);
    PlanarDiagram d = braid_closure(b.width, b.word);
    std::set<int> all;
    for (int i = 0; i < d.component_count(); ++i) all.insert(i);
    EXPECT_EQ(homology(reverse_components(d, all)), homology(d)) << describe(b);
  }
}

TEST_F(BraidProperties, NegativeKinkShift) {
  for (int trial = 0; trial < 15; ++trial) {
    Braid b = random_braid(rng, 3, 5);
    PlanarDiagram d = braid_closure(b.width, b.word);
    std::uniform_int_distribution<int> comp(0, d.component_count() - 1);
    PlanarDiagram k = add_kink(d, comp(rng), -1);
    EXPECT_EQ(homology(k), shifted(homology(d), {2, -1})) << describe(b);
  }
}
