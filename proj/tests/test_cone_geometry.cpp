#include <gtest/gtest.h>

#include <random>

#include "bhk/cone.hpp"
#include "bhk/errors.hpp"

using namespace bhk;

namespace {
RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}
}  // namespace

TEST(Cone, OrthantIsSelfDual) {
  Cone C = Cone::from_generators({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(C.facet_normals().size(), 3u);
  EXPECT_EQ(dual_cone(C), C);
}

TEST(Cone, DropsRedundantGenerators) {
  Cone C = Cone::from_generators({v({1, 0}), v({0, 1}), v({1, 1}), v({2, 0})});
  EXPECT_EQ(C.generators().size(), 2u);
  EXPECT_TRUE(C.contains(v({3, 1})));
  EXPECT_FALSE(C.contains(v({-1, 1})));
  EXPECT_TRUE(C.contains_interior(v({1, 1})));
  EXPECT_FALSE(C.contains_interior(v({1, 0})));
}

TEST(Cone, RejectsLowerDimensional) {
  EXPECT_THROW(Cone::from_generators({v({1, 0, 0}), v({0, 1, 0})}), InputError);
}

TEST(Cone, SimplexConeFacets) {
  Cone C = Cone::from_generators({v({-1, -1, 1}), v({2, -1, 1}), v({-1, 2, 1})});
  Cone D = dual_cone(C);
  std::vector<RatVector> expect{v({-1, -1, 1}), v({0, 1, 1}), v({1, 0, 1})};
  auto gens = D.generators();
  std::sort(gens.begin(), gens.end(), RatVectorLess{});
  std::sort(expect.begin(), expect.end(), RatVectorLess{});
  EXPECT_EQ(gens, expect);
  EXPECT_EQ(dual_cone(D), C);
}

TEST(Cone, DoubleDualOnRandomCones) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-3, 3);
  int tried = 0;
  while (tried < 100) {
    std::vector<RatVector> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(v({e(rng), e(rng), 4}));
    Cone C = [&] {
      try {
        return Cone::from_generators(gens);
      } catch (const InputError&) {
        return Cone();
      }
    }();
    if (C.rank() == 0) continue;
    ++tried;
    Cone D = dual_cone(C);
    EXPECT_EQ(dual_cone(D), C);
    for (const auto& g : C.generators())
      for (const auto& n : D.generators()) EXPECT_GE(dot(g, n), 0);
    for (const auto& g : gens) EXPECT_TRUE(C.contains(g));
  }
}

TEST(Slices, OrthantCountsAreBinomials) {
  Cone C = Cone::from_generators({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  RatMatrix I = RatMatrix::identity(3);
  for (long s = 0; s <= 6; ++s) EXPECT_EQ(slice_points(C, I, v({1, 1, 1}), Rat(s)).size(), std::size_t((s + 1) * (s + 2) / 2));
  EXPECT_TRUE(slice_points(C, I, v({1, 1, 1}), make_rat(1, 2)).empty());
}

TEST(Slices, SublatticeAndNonPositiveFunctional) {
  Cone C = Cone::from_generators({v({1, 0}), v({0, 1})});
  RatMatrix B(2, 2);
  B(0, 0) = 2;
  B(1, 1) = 1;
  auto pts = slice_points(C, B, v({1, 1}), Rat(4));
  EXPECT_EQ(pts.size(), 3u);  // (0,4), (2,2), (4,0)
  EXPECT_THROW(slice_points(C, RatMatrix::identity(2), v({1, 0}), Rat(1)), InputError);
}

TEST(Slices, PolytopePoints) {
  // x >= -1, y >= 0, x + y = 2.
  auto pts = polytope_points({{v({1, 0}), Rat(-1)}, {v({0, 1}), Rat(0)}}, v({1, 1}), Rat(2));
  EXPECT_EQ(pts.size(), 4u);
}
