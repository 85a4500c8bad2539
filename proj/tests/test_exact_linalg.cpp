#include <gtest/gtest.h>

#include <random>

#include "bhk/linalg.hpp"
#include "bhk/matrix.hpp"
#include "bhk/rational.hpp"
#include "support.hpp"

using namespace bhk;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-2/4")), "-1/2");
  EXPECT_THROW(parse_rat("2/-4"), ParseError);
  EXPECT_EQ(to_string(parse_rat("7")), "7");
  EXPECT_EQ(to_string(parse_rat(" -3 ")), "-3");
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("0.5"), ParseError);
  EXPECT_THROW(parse_rat(""), ParseError);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(floor(make_rat(-1, 3)), Int(-1));
  EXPECT_EQ(ceil(make_rat(-1, 3)), Int(0));
  EXPECT_EQ(frac(make_rat(-1, 3)), make_rat(2, 3));
  EXPECT_EQ(frac(make_rat(7, 3)), make_rat(1, 3));
  EXPECT_TRUE(is_integer(make_rat(6, 3)));
}

TEST(Smith, DiagonalMatrix) {
  IntMatrix A = testing_support::diag({4, 6});
  SmithForm s = smith_normal_form(A);
  EXPECT_EQ(s.diagonal(), (IntVector{Int(2), Int(12)}));
}

TEST(Smith, KnownExample) {
  IntMatrix A = testing_support::matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(smith_normal_form(A).diagonal(), (IntVector{Int(2), Int(6), Int(12)}));
}

TEST(Smith, RandomFactorizationsHold) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> e(-6, 6), n(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = static_cast<std::size_t>(n(rng)), c = static_cast<std::size_t>(n(rng));
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = e(rng);
    SmithForm s = smith_normal_form(A);
    EXPECT_EQ(s.U * A * s.V, s.D);
    EXPECT_EQ(abs(determinant(s.U)), Int(1));
    EXPECT_EQ(abs(determinant(s.V)), Int(1));
    IntVector dg = s.diagonal();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i + 1 < dg.size(); ++i) {
      EXPECT_GE(dg[i], 0);
      if (dg[i] != 0) EXPECT_EQ(dg[i + 1] % dg[i], 0);
      else EXPECT_EQ(dg[i + 1], 0);
    }
    if (r == c) {
      Int prod = 1;
      for (const auto& x : dg) prod *= x;
      EXPECT_EQ(prod, abs(determinant(A)));
    }
  }
}

TEST(Hermite, RandomFactorizationsHold) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> e(-5, 5), n(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = static_cast<std::size_t>(n(rng)), c = static_cast<std::size_t>(n(rng));
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = e(rng);
    HermiteForm h = hermite_normal_form(A);
    EXPECT_EQ(h.U * A, h.H);
    EXPECT_EQ(abs(determinant(h.U)), Int(1));
    EXPECT_EQ(h.rank(), rat_rank(to_rat(A)));
  }
}

TEST(RatLinalg, RankSolveInverse) {
  RatMatrix A = to_rat(testing_support::matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(rat_rank(A), 2u);
  EXPECT_EQ(rat_rank(SparseMatrix::from_dense(A)), 2u);
  EXPECT_EQ(determinant(A), 0);
  EXPECT_FALSE(rat_solve(A, RatVector{Rat(1), Rat(0), Rat(0)}).has_value());
  auto x = rat_solve(A, RatVector{Rat(6), Rat(15), Rat(24)});
  ASSERT_TRUE(x.has_value());
  RatVector back(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) back[i] += A(i, j) * (*x)[j];
  EXPECT_EQ(back, (RatVector{Rat(6), Rat(15), Rat(24)}));

  RatMatrix B = to_rat(testing_support::matrix({{2, 1}, {0, 3}}));
  RatMatrix Bi = inverse(B);
  EXPECT_EQ(Bi(0, 0), make_rat(1, 2));
  EXPECT_EQ(Bi(0, 1), make_rat(-1, 6));
  EXPECT_EQ(B * Bi, RatMatrix::identity(2));
}

TEST(RatLinalg, SparseRankMatchesDenseOnRandomMatrices) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> e(-2, 2), n(1, 7);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = static_cast<std::size_t>(n(rng)), c = static_cast<std::size_t>(n(rng));
    RatMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = make_rat(e(rng), 1 + (e(rng) + 2));
    EXPECT_EQ(rat_rank(A), rat_rank(SparseMatrix::from_dense(A)));
    EXPECT_EQ(rat_rank(A), rat_rank(A.transpose()));
  }
}

TEST(SparseMatrix, ProductMatchesDense) {
  RatMatrix A = to_rat(testing_support::matrix({{1, 0, 2}, {0, 3, 0}, {4, 0, 5}}));
  RatMatrix B = to_rat(testing_support::matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ((SparseMatrix::from_dense(A) * SparseMatrix::from_dense(B)).to_dense(), A * B);
}
