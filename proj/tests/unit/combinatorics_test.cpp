#include <gtest/gtest.h>

#include <map>
#include <set>

#include "specoh/combinatorics.hpp"
#include "specoh/errors.hpp"

using namespace specoh;

namespace {

// Stirling numbers of the second kind by the textbook recurrence.
std::uint64_t stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return static_cast<std::uint64_t>(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

int brute_inversions(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

}  // namespace

TEST(Subset, BasicOperations) {
  const Subset s = Subset::of(5, {1, 3, 4});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.complement(), Subset::of(5, {2, 5}));
  EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(s.without(3), Subset::of(5, {1, 4}));
  EXPECT_TRUE(Subset::of(5, {1}).is_subset_of(s));
  EXPECT_TRUE(s.is_disjoint_from(s.complement()));
  EXPECT_EQ((s | s.complement()), Subset::full(5));
  EXPECT_TRUE((s & s.complement()).is_empty());
}

TEST(Subset, RejectsOutOfRangeMembers) {
  EXPECT_THROW(Subset::of(3, {4}), std::invalid_argument);
  EXPECT_THROW(Subset::of(3, {0}), std::invalid_argument);
}

TEST(Permutation, CompositionConvention) {
  const Permutation s({2, 3, 1});
  const Permutation t({2, 1, 3});
  const Permutation st = s * t;
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(st(i), s(t(i)));
  EXPECT_TRUE((s * s.inverse()).is_identity());
}

TEST(Permutation, SignMatchesInversionCount) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      EXPECT_EQ(p.inversions(), brute_inversions(p.images()));
      EXPECT_EQ(p.sign(), brute_inversions(p.images()) % 2 == 0 ? 1 : -1);
    }
}

TEST(Permutation, SignIsMultiplicative) {
  const auto perms = all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms) EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
}

TEST(Permutation, EnumerationIsLexicographicAndComplete) {
  const auto perms = all_permutations(5);
  EXPECT_EQ(perms.size(), 120u);
  for (std::size_t i = 1; i < perms.size(); ++i) EXPECT_LT(perms[i - 1], perms[i]);
}

TEST(Decomposition, CountsMatchFormulas) {
  for (int n = 0; n <= 5; ++n)
    for (int q = 0; q <= 4; ++q) {
      std::uint64_t power = 1;
      for (int i = 0; i < n; ++i) power *= static_cast<std::uint64_t>(q);
      EXPECT_EQ(enumerate_decompositions(n, q).size(), power) << n << " " << q;
      EXPECT_EQ(enumerate_compositions(n, q).size(), factorial(q) * stirling2(n, q)) << n << " " << q;
    }
}

TEST(Decomposition, CompositionsAreDistinctAndNonempty) {
  const auto all = enumerate_compositions(5, 3);
  std::set<std::vector<int>> words;
  for (const auto& d : all) {
    EXPECT_TRUE(d.is_composition());
    words.insert(d.block_word());
  }
  EXPECT_EQ(words.size(), all.size());
}

TEST(Decomposition, StandardAndStandardized) {
  const int sizes[] = {2, 0, 3};
  const auto d = Decomposition::standard(sizes);
  EXPECT_EQ(d.block(0), Subset::of(5, {1, 2}));
  EXPECT_TRUE(d.block(1).is_empty());
  EXPECT_EQ(d.block(2), Subset::of(5, {3, 4, 5}));
  const Decomposition e(5, {Subset::of(5, {2, 5}), Subset::of(5, {4}), Subset::of(5, {1, 3})});
  const auto s = Decomposition(5, {e.block(0), e.block(1), e.block(2)}).standardized_within(Subset::full(5));
  EXPECT_EQ(s, e);
  const Standardization lambda(Subset::of(5, {2, 4, 5}));
  EXPECT_EQ(lambda.apply(e.block(0)), Subset::of(3, {1, 3}));
  EXPECT_EQ(lambda.apply(e.block(1)), Subset::of(3, {2}));
}

TEST(Decomposition, RejectsOverlappingBlocks) {
  EXPECT_THROW(Decomposition(3, {Subset::of(3, {1, 2}), Subset::of(3, {2, 3})}), std::invalid_argument);
  EXPECT_THROW(Decomposition(3, {Subset::of(3, {1, 2})}), std::invalid_argument);
}

TEST(Schubert, CountsPairsInIncreasingOrder) {
  EXPECT_EQ(schubert(Subset::of(4, {1, 3}), Subset::of(4, {2, 4})), 3);
  EXPECT_EQ(schubert(Subset::of(4, {2, 4}), Subset::of(4, {1, 3})), 1);
  EXPECT_THROW(schubert(Subset::of(3, {1, 2}), Subset::of(3, {2})), std::invalid_argument);
}

TEST(CrossingSign, EqualsSignOfMonotoneBijection) {
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const Subset s(n, m);
      const Subset t = s.complement();
      const Permutation u = monotone_pair_bijection(s, t);
      EXPECT_EQ(crossing_sign(s, t), u.sign());
      for (int i = 0; i < s.size(); ++i) EXPECT_EQ(u(s.members()[static_cast<std::size_t>(i)]), i + 1);
    }
}

TEST(Shuffle, CountAndSignLaw) {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const auto shuffles = enumerate_shuffles(p, q);
      EXPECT_EQ(shuffles.size(), factorial(p + q));
      std::set<std::vector<int>> seen;
      for (const auto& sh : shuffles) {
        seen.insert(sh.concatenated.images());
        // Concatenation sign law: sign(sigma) = sign(sigma1) sign(sigma2) (-1)^{crossings}.
        EXPECT_EQ(sh.concatenated.sign(),
                  sh.first().sign() * sh.second().sign() * crossing_sign(sh.first_part(), sh.second_part()));
      }
      EXPECT_EQ(seen.size(), shuffles.size());
    }
}

TEST(Standardization, RoundTrips) {
  const Standardization lambda(Subset::of(7, {2, 3, 6}));
  EXPECT_EQ(lambda.size(), 3);
  EXPECT_EQ(lambda(6), 3);
  EXPECT_EQ(lambda.element_at(2), 3);
  EXPECT_EQ(lambda.apply(Subset::of(7, {2, 6})), Subset::of(3, {1, 3}));
}

TEST(Counting, BinomialAndFactorial) {
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(8), 40320u);
}
