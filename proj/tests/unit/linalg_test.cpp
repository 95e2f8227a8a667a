#include <gtest/gtest.h>

#include <random>

#include "specoh/errors.hpp"
#include "specoh/linalg.hpp"

using namespace specoh;

namespace {

// Dense Gaussian elimination used as the reference.
std::size_t dense_rank(std::vector<Vector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> value(-3, 3);
  SparseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) m.add(i, j, Rational(value(rng)));
  return m;
}

}  // namespace

TEST(SparseVector, KeepsEntriesSortedWithoutZeros) {
  SparseVector v;
  v.add(5, Rational(2));
  v.add(1, Rational(3));
  v.add(5, Rational(-2));
  ASSERT_EQ(v.entries().size(), 1u);
  EXPECT_EQ(v.leading_index(), 1u);
  EXPECT_EQ(v.get(1), Rational(3));
  EXPECT_EQ(v.get(5), Rational(0));
}

TEST(SparseMatrix, ProductMatchesDense) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 4, 5, 40);
    const auto b = random_matrix(rng, 5, 3, 40);
    const auto ab = (a * b).to_dense();
    const auto da = a.to_dense();
    const auto db = b.to_dense();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational s(0);
        for (std::size_t k = 0; k < 5; ++k) s += da[i][k] * db[k][j];
        EXPECT_EQ(ab[i][j], s);
      }
  }
}

TEST(Rank, MatchesDenseEliminationOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 8;
    const auto m = random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 60));
    EXPECT_EQ(rank(m), dense_rank(m.to_dense()));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Kernel, BasisIsAnnihilatedAndHasTheRightSize) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    const auto m = random_matrix(rng, rows, cols, 50);
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(kernel.size(), cols - rank(m));
    for (const auto& v : kernel)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(dense_rank(kernel.empty() ? std::vector<Vector>{} : kernel), kernel.size());
  }
}

TEST(Image, MembershipAgreesWithRank) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng, 5, 3, 50);
    Vector x(3);
    for (auto& e : x) e = Rational(static_cast<int>(rng() % 5) - 2);
    EXPECT_TRUE(in_image(m, m.apply(x)));
    Vector y(5);
    for (auto& e : y) e = Rational(static_cast<int>(rng() % 5) - 2);
    auto rows = m.transpose().to_dense();
    const std::size_t r0 = dense_rank(rows);
    rows.push_back(y);
    EXPECT_EQ(in_image(m, y), dense_rank(rows) == r0);
  }
}

TEST(Cohomology, OfASmallExactSequence) {
  // 0 -> Q --(1,1)--> Q^2 --(1,-1)--> Q -> 0 is exact.
  const auto d0 = SparseMatrix::from_dense({{Rational(1)}, {Rational(1)}});
  const auto d1 = SparseMatrix::from_dense({{Rational(1), Rational(-1)}});
  EXPECT_EQ(cohomology_dimension(d0, d1), 0u);
  EXPECT_EQ(cohomology_dimension(SparseMatrix(1, 0), d0), 0u);
  EXPECT_EQ(cohomology_dimension(d1, SparseMatrix(0, 1)), 0u);
  // Dropping d1 leaves a one dimensional quotient.
  const auto result = cohomology_at(d0, SparseMatrix(0, 2));
  EXPECT_EQ(result.dimension, 1u);
  ASSERT_EQ(result.representatives.size(), 1u);
  EXPECT_FALSE(in_image(d0, result.representatives[0]));
}

TEST(Cohomology, RejectsNonComplexes) {
  const auto d0 = SparseMatrix::from_dense({{Rational(1)}, {Rational(0)}});
  const auto d1 = SparseMatrix::from_dense({{Rational(1), Rational(0)}});
  EXPECT_THROW(cohomology_at(d0, d1), NotAComplex);
  EXPECT_THROW(cohomology_at(SparseMatrix(3, 1), d1), InvalidArgument);
}

TEST(EchelonBasis, InsertReportsIndependence) {
  EchelonBasis basis(3);
  EXPECT_TRUE(basis.insert(SparseVector::from_dense({Rational(1), Rational(2), Rational(0)})));
  EXPECT_TRUE(basis.insert(SparseVector::from_dense({Rational(0), Rational(1), Rational(1)})));
  EXPECT_FALSE(basis.insert(SparseVector::from_dense({Rational(1), Rational(3), Rational(1)})));
  EXPECT_EQ(basis.rank(), 2u);
}
