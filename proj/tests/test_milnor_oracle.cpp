#include <gtest/gtest.h>

#include "bhk/errors.hpp"
#include "bhk/milnor.hpp"
#include "bhk/monomials.hpp"
#include "support.hpp"

using namespace bhk;
namespace ts = testing_support;

TEST(Monomials, CountsAgreeWithEnumeration) {
  std::vector<long> w{1, 2, 3};
  for (long t = 0; t <= 12; ++t) {
    auto all = monomials_of_weight(w, {0, 1, 2}, t);
    EXPECT_EQ(count_monomials_of_weight(w, {0, 1, 2}, t, 1000), all.size());
    for (const auto& m : all) EXPECT_EQ(m[0] + 2 * m[1] + 3 * m[2], t);
  }
  EXPECT_EQ(count_monomials_of_weight({1, 1, 1}, {0, 1, 2}, 30, 10), 11u);
  EXPECT_EQ(monomials_of_weight({1, 1, 1}, {0, 2}, 2).size(), 3u);
}

TEST(Milnor, FermatGradedDimsMatchOracle) {
  for (const std::vector<long>& a : std::vector<std::vector<long>>{{3, 3, 3}, {4, 4, 4, 4}, {2, 3, 6}, {5, 5, 5, 5, 5}}) {
    Potential P(ts::diag(a));
    MilnorDims m = milnor_dims(P);
    EXPECT_TRUE(m.nondegenerate());
    auto oracle = ts::fermat_milnor_oracle(a);
    std::size_t total = 0;
    for (const auto& [deg, dim] : oracle) {
      EXPECT_EQ(m.dim_at(deg), dim) << to_string(deg);
      total += dim;
    }
    EXPECT_EQ(m.total, total);
    std::size_t listed = 0;
    for (const auto& [deg, dim] : m.graded()) listed += dim;
    EXPECT_EQ(listed, total);
  }
}

TEST(Milnor, ChainAndLoopTotals) {
  for (const auto& A : {ts::matrix({{2, 1}, {0, 2}}), ts::matrix({{2, 1, 0}, {0, 2, 1}, {1, 0, 2}}),
                        ts::matrix({{3, 1, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}})}) {
    Potential P(A);
    MilnorDims m = milnor_dims(P);
    EXPECT_TRUE(m.nondegenerate());
    EXPECT_EQ(Rat(m.total), ts::milnor_total_oracle(ts::weights_oracle(A)));
  }
  EXPECT_EQ(milnor_dims(Potential(ts::matrix({{2, 1}, {0, 2}}))).total, 3u);
}

TEST(Milnor, LinearPotential) {
  MilnorDims m = milnor_dims(Potential(ts::matrix({{1}})));
  EXPECT_EQ(m.total, 0u);
  EXPECT_TRUE(m.nondegenerate());
}

TEST(Milnor, CubicDims) {
  MilnorDims m = milnor_dims(Potential(ts::diag({3, 3, 3})));
  EXPECT_EQ(m.dim_at(Rat(0)), 1u);
  EXPECT_EQ(m.dim_at(make_rat(1, 3)), 3u);
  EXPECT_EQ(m.dim_at(make_rat(2, 3)), 3u);
  EXPECT_EQ(m.dim_at(Rat(1)), 1u);
  EXPECT_EQ(m.socle, Rat(1));
}

TEST(Orbifold, FermatTablesMatchSectorOracle) {
  struct Case {
    std::vector<long> a;
    std::vector<std::vector<std::string>> gens;
  };
  std::vector<Case> cases{{{3, 3, 3}, {{"1/3", "1/3", "1/3"}}},
                          {{3, 3, 3}, {{"1/3", "1/3", "1/3"}, {"0", "1/3", "2/3"}}},
                          {{4, 4, 4, 4}, {{"1/4", "1/4", "1/4", "1/4"}, {"0", "0", "1/2", "1/2"}}},
                          {{2, 2}, {{"1/2", "1/2"}}},
                          {{2, 4, 4}, {{"1/2", "1/4", "1/4"}}},
                          {{2, 3, 6}, {{"1/2", "1/3", "1/6"}}}};
  for (const auto& c : cases) {
    Potential P(ts::diag(c.a));
    SymmetryGroup G = subgroup_closure(P, ts::elements(c.gens));
    std::vector<ts::Element> gens;
    for (const auto& g : c.gens) gens.push_back(ts::rats(g));
    EXPECT_EQ(orbifold_b_table(P, G), ts::fermat_orbifold_oracle(c.a, gens));
    EXPECT_EQ(orbifold_a_table(P, G), ts::fermat_orbifold_oracle(c.a, gens).reflect_minus());
  }
}

TEST(Orbifold, SectorShifts) {
  Potential P(ts::diag({3, 3, 3}));
  SymmetryGroup G = subgroup_closure(P, ts::elements({{"1/3", "1/3", "1/3"}}));
  SectorData s = sector_data(P, G, GroupElement(ts::rats({"1/3", "1/3", "1/3"})));
  EXPECT_TRUE(s.fixed_set.empty());
  EXPECT_EQ(s.shift_plus, 0);
  EXPECT_EQ(s.shift_minus, 1);
}

TEST(Orbifold, RejectsNonCalabiYau) {
  Potential P(ts::diag({3, 3, 3}));
  EXPECT_THROW(orbifold_b_table(P, subgroup_closure(P, {})), NotCalabiYau);
}

TEST(LogJacobian, CubicMatchesShiftedMilnor) {
  Potential P(ts::diag({3, 3, 3}));
  MilnorDims m = milnor_dims(P);
  const Rat shift = P.weights().sum;
  for (const auto& [deg, dim] : log_jacobian_cohomology(P, m.socle + shift)) EXPECT_EQ(dim, m.dim_at(deg - shift)) << to_string(deg);
}
