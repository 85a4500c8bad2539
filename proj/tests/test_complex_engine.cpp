#include <gtest/gtest.h>

#include "bhk/complex.hpp"
#include "bhk/errors.hpp"
#include "support.hpp"

using namespace bhk;
namespace ts = testing_support;

namespace {
HodgeTable elliptic() {
  HodgeTable t(Rat(1));
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) t.add(Rat(a), Rat(b), 1);
  return t;
}
}  // namespace

TEST(HodgeTable, ReflectAndRange) {
  HodgeTable t(Rat(2));
  t.add(Rat(0), Rat(0), 1);
  t.add(Rat(1), Rat(1), 20);
  t.add(Rat(3), Rat(0), 1);
  t.add(Rat(1), Rat(1), 0);
  EXPECT_EQ(t.at(Rat(1), Rat(1)), 20u);
  EXPECT_EQ(t.total(), 22u);
  EXPECT_EQ(t.reflect_minus().at(Rat(0), Rat(2)), 1u);
  EXPECT_EQ(t.reflect_minus().reflect_minus(), t);
  ASSERT_EQ(t.outside_range().size(), 1u);
  EXPECT_EQ(charge_key(t.outside_range()[0]), "3/0");
  EXPECT_EQ(charge_key({make_rat(1, 2), make_rat(-3, 2)}), "1/2/-3/2");
}

TEST(ComplexEngine, FermatCubicBothSides) {
  BhDatum d = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}});
  EXPECT_EQ(ComplexEngine(d, RingSide::B).bigraded_table(), elliptic());
  EXPECT_EQ(ComplexEngine(d, RingSide::A).bigraded_table(), elliptic());
}

TEST(ComplexEngine, ThreadCountDoesNotChangeTable) {
  BhDatum d = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}, {"0", "1/3", "2/3"}});
  ComplexEngine e(d, RingSide::B);
  EXPECT_EQ(e.bigraded_table({1, 1}), e.bigraded_table({2, 4}));
}

TEST(ComplexEngine, RejectsNonCalabiYau) {
  BhDatum trivial = ts::datum(ts::diag({3, 3, 3}), {});
  EXPECT_THROW(ComplexEngine(trivial, RingSide::B), NotCalabiYau);
  BhDatum non_sl = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "0", "0"}, {"1/3", "1/3", "1/3"}});
  EXPECT_THROW(ComplexEngine(non_sl, RingSide::A), NotCalabiYau);
  BhDatum frac_k = ts::datum(ts::diag({3, 3}), {{"1/3", "1/3"}});
  EXPECT_THROW(ComplexEngine(frac_k, RingSide::B), NotCalabiYau);
}

TEST(ComplexEngine, ZeroCentralCharge) {
  BhDatum d = ts::datum(ts::diag({2, 2}), {{"1/2", "1/2"}});
  HodgeTable t = ComplexEngine(d, RingSide::B).bigraded_table();
  // Untwisted sector and the J sector both sit at (0, 0).
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.at(Rat(0), Rat(0)), 2u);
}

TEST(ComplexEngine, DifferentialSquaresToZeroOnCubic) {
  BhDatum d = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}});
  for (RingSide side : {RingSide::A, RingSide::B}) {
    ComplexEngine e(d, side);
    for (long t = -1; t <= 2; ++t)
      for (long c = -2; c <= 2; ++c) {
        auto s0 = e.build_slice(Rat(c), Rat(t));
        auto s1 = e.build_slice(Rat(c + 1), Rat(t));
        auto s2 = e.build_slice(Rat(c + 2), Rat(t));
        if (s0.basis.empty() || s1.basis.empty() || s2.basis.empty()) continue;
        EXPECT_TRUE((e.differential_matrix(s1, s2) * e.differential_matrix(s0, s1)).is_zero());
      }
  }
}

TEST(ComplexEngine, DifferentialRejectsWrongTarget) {
  BhDatum d = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}});
  ComplexEngine e(d, RingSide::B);
  auto a = e.build_slice(Rat(0), Rat(0));
  auto b = e.build_slice(Rat(0), Rat(0));
  EXPECT_THROW(e.differential_matrix(a, b), std::invalid_argument);
}

TEST(ComplexEngine, VariantsMatchMirrorEngines) {
  BhDatum d = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}});
  HodgeTable bd = ComplexEngine::for_variant(d, ComplexVariant::BDualRing).bigraded_table();
  EXPECT_EQ(bd, ComplexEngine(d.mirror(), RingSide::B).bigraded_table());
}
