#include <gtest/gtest.h>

#include "bhk/errors.hpp"
#include "bhk/unified.hpp"
#include "support.hpp"

using namespace bhk;
namespace ts = testing_support;

namespace {
RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

ToricMirrorData bb_simplex() {
  return ToricMirrorData(3, {v({-1, -1, 1}), v({2, -1, 1}), v({-1, 2, 1})}, {v({1, 0, 1}), v({0, 1, 1}), v({-1, -1, 1})},
                         v({0, 0, 1}), v({0, 0, 1}));
}
}  // namespace

TEST(ToricMirrorData, ValidatesInput) {
  EXPECT_THROW(ToricMirrorData(3, {v({-1, -1, 1}), v({2, -1, 1}), v({-1, 2, 2})}, {v({1, 0, 1}), v({0, 1, 1}), v({-1, -1, 1})},
                               v({0, 0, 1}), v({0, 0, 1})),
               InputError);
  EXPECT_THROW(ToricMirrorData(3, {v({-1, -1, 1}), v({2, -1, 1}), v({-2, 2, 1})}, {v({1, 0, 1}), v({0, 1, 1}), v({-1, -1, 1})},
                               v({0, 0, 1}), v({0, 0, 1})),
               InputError);
  EXPECT_THROW(ToricMirrorData(3, {v({-1, -1, 1}), v({2, -1, 1}), v({-1, 2, 1})}, {v({1, 0, 1}), v({0, 1, 1}), v({-1, -1, 1})},
                               v({0, 0, 1}), v({0, 0, 1}), RatVector{Rat(1), Rat(0), Rat(1)}),
               InputError);
  ToricMirrorData d = bb_simplex();
  EXPECT_TRUE(d.default_coefficients());
  EXPECT_EQ(d.rays().size(), 3u);
}

TEST(KeyLemma, WitnessesVerifyOnSimplex) {
  ToricMirrorData d = bb_simplex();
  for (std::size_t i = 0; i < d.rays().size(); ++i) {
    auto w = key_lemma_witness(d, i, Rat(3));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(d, *w));
    MembershipWitness bad = *w;
    bad.target[0] += 1;
    EXPECT_FALSE(verify_witness(d, bad));
  }
  EXPECT_FALSE(key_lemma_witness(d, 0, Rat(0)).has_value());
}

TEST(KeyLemma, FermatCubicFromBh) {
  BhDatum bh = ts::datum(ts::diag({3, 3, 3}), {{"1/3", "1/3", "1/3"}});
  ToricMirrorData u = unified_from_bh(bh);
  for (std::size_t i = 0; i < u.rays().size(); ++i) {
    auto w = key_lemma_witness(bh, i, Rat(3));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(u, *w));
  }
}

TEST(Unified, SimplexPassesBoth) {
  UnifiedReport r = unified_condition(bb_simplex(), 10);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.primal.necessary_condition);
  EXPECT_TRUE(r.dual.necessary_condition);
  ASSERT_TRUE(r.primal.vanishing_from.has_value());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Unified, BoundZeroIsUnknown) {
  UnifiedReport r = unified_condition(bb_simplex(), 0);
  EXPECT_EQ(r.primal.verdict, Verdict::FailUnknown);
  EXPECT_EQ(r.dual.verdict, Verdict::FailUnknown);
  EXPECT_EQ(to_string(r.primal.verdict), "FAIL-UNKNOWN");
}

TEST(Unified, DualSwapsRoles) {
  ToricMirrorData d = bb_simplex();
  ToricMirrorData e = d.dual();
  EXPECT_EQ(e.delta(), d.delta_dual());
  EXPECT_EQ(e.delta_dual(), d.delta());
  EXPECT_EQ(e.dual().delta(), d.delta());
}

TEST(Unified, GenericCubicFixturePasses) {
  ToricMirrorData d = make_unified(ts::fixture("bb_cubic_generic"));
  EXPECT_EQ(d.delta().size(), 10u);
  UnifiedReport r = unified_condition(d, 10);
  EXPECT_TRUE(r.passed()) << r.primal.message << " / " << r.dual.message;
}

TEST(Unified, BhCubicPasses) {
  EXPECT_TRUE(unified_condition(unified_from_bh(ts::fixture_datum("cubic_J")), 10).passed());
}
