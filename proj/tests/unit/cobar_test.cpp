#include <gtest/gtest.h>

#include "specoh/cobar.hpp"
#include "specoh/registry.hpp"

using namespace specoh;

namespace {

// Permutations of [n] with k cycles, counted directly.
std::size_t permutations_with_cycles(int n, int k) {
  std::size_t count = 0;
  for (const auto& p : all_permutations(n)) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = true;
    }
    count += cycles == k;
  }
  return count;
}

}  // namespace

TEST(Cobar, DifferentialSquaresToZero) {
  for (const std::string id : {"E", "L", "P", "C"})
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(CobarComplex(global_registry().get(id), n).differential_squares_to_zero());
}

TEST(Cobar, WordCountsAreCompositionsTimesStructures) {
  const CobarComplex c(global_registry().get("L"), 3);
  // k blocks: ordered set partitions into k blocks, each block linearly ordered.
  EXPECT_EQ(c.words(1).size(), 6u);
  EXPECT_EQ(c.words(2).size(), 12u);
  EXPECT_EQ(c.words(3).size(), 6u);
}

TEST(Cobar, ExponentialIsKoszul) {
  for (int n = 1; n <= 5; ++n) {
    const auto dims = CobarComplex(global_registry().get("E"), n).cohomology_by_blocks();
    for (int k = 0; k <= n; ++k) EXPECT_EQ(dims[static_cast<std::size_t>(k)], k == n ? 1u : 0u) << n << " " << k;
  }
}

TEST(Cobar, SymmetrizedProductIsABoundary) {
  const CobarComplex c(global_registry().get("E"), 2);
  ASSERT_EQ(c.words(1).size(), 1u);
  const auto image = c.differential(1).apply(Vector{Rational(1)});
  ASSERT_EQ(image.size(), 2u);
  EXPECT_EQ(image[0], Rational(1));
  EXPECT_EQ(image[1], Rational(1));
}

TEST(Cobar, LinearOrdersGiveStirlingNumbers) {
  const auto table = stirling_first_kind_table(5);
  for (int n = 1; n <= 4; ++n) {
    const auto dims = CobarComplex(global_registry().get("L"), n).cohomology_by_blocks();
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(dims[static_cast<std::size_t>(k)], permutations_with_cycles(n, k)) << n << " " << k;
      EXPECT_EQ(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], permutations_with_cycles(n, k));
    }
  }
}

TEST(Cobar, DegreesAreBlocksMinusArity) {
  EXPECT_EQ(CobarComplex::degree_of(4, 4), 0);
  EXPECT_EQ(CobarComplex::degree_of(1, 4), -3);
}
