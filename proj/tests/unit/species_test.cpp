#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "specoh/builtin_species.hpp"
#include "specoh/errors.hpp"
#include "specoh/validate.hpp"

using namespace specoh;

namespace {

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

std::uint64_t ordered_bell(int n) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(m)] += binomial(m, k) * a[static_cast<std::size_t>(m - k)];
  return a[static_cast<std::size_t>(n)];
}

// Orbits by brute force: canonical form is the least payload over all relabelings.
struct BruteOrbits {
  std::size_t count = 0;
  std::size_t without_odd_stabilizer = 0;
};

BruteOrbits brute_orbits(const Species& sp, int n, const std::vector<Permutation>& group) {
  std::map<Structure, std::vector<const Permutation*>> stabilizers;
  std::set<Structure> seen;
  BruteOrbits out;
  for (const auto& z : sp.structures(n)) {
    Structure canon = z;
    for (const auto& g : group) canon = std::min(canon, sp.relabel(g, z));
    if (!seen.insert(canon).second) continue;
    ++out.count;
    bool odd = false;
    for (const auto& g : group)
      if (g.sign() < 0 && sp.relabel(g, canon) == canon) odd = true;
    if (!odd) ++out.without_odd_stabilizer;
  }
  return out;
}

class SpeciesLaws : public ::testing::TestWithParam<std::string> {};

SpeciesPtr make(const std::string& id) {
  auto e = std::make_shared<ExponentialSpecies>();
  auto l = std::make_shared<LinearOrderSpecies>();
  if (id == "E") return e;
  if (id == "L") return l;
  if (id == "P") return std::make_shared<PartitionSpecies>();
  if (id == "C") return std::make_shared<CompositionSpecies>();
  if (id == "Gr") return std::make_shared<GraphSpecies>();
  if (id == "S0") return std::make_shared<SingletonPowerSpecies>(0);
  if (id == "S2") return std::make_shared<SingletonPowerSpecies>(2);
  if (id == "S.L") return std::make_shared<CauchyProduct>(std::make_shared<SingletonPowerSpecies>(1), l);
  if (id == "L.E") return std::make_shared<CauchyProduct>(l, e);
  if (id == "two_sided(E,E)") return std::make_shared<TwoSidedProduct>(e, e);
  if (id == "two_sided(L,E)") return std::make_shared<TwoSidedProduct>(l, e);
  if (id == "L+two_sided(E,E)") return std::make_shared<DirectSum>(l, std::make_shared<TwoSidedProduct>(e, e));
  throw std::logic_error("unknown test species " + id);
}

}  // namespace

TEST(Counts, MatchClosedFormulas) {
  ExponentialSpecies e;
  LinearOrderSpecies l;
  PartitionSpecies p;
  CompositionSpecies c;
  GraphSpecies g;
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(e.count(n), 1u);
    EXPECT_EQ(l.count(n), factorial(n));
    EXPECT_EQ(p.count(n), bell(n)) << n;
    EXPECT_EQ(c.count(n), ordered_bell(n)) << n;
    EXPECT_EQ(g.count(n), std::uint64_t{1} << (n * (n - 1) / 2)) << n;
  }
  for (int k = 0; k <= 4; ++k) {
    SingletonPowerSpecies s(k);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(s.count(n), n == k ? factorial(k) : 0u);
  }
}

TEST(Counts, CauchyProductConvolution) {
  auto l = std::make_shared<LinearOrderSpecies>();
  auto p = std::make_shared<PartitionSpecies>();
  CauchyProduct lp(l, p);
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t expected = 0;
    for (int k = 0; k <= n; ++k) expected += binomial(n, k) * factorial(k) * bell(n - k);
    EXPECT_EQ(lp.count(n), expected);
  }
}

TEST(Ranks, UnrankInvertsRank) {
  GraphSpecies g;
  CompositionSpecies c;
  for (int n = 0; n <= 4; ++n) {
    for (std::size_t r = 0; r < g.count(n); ++r) EXPECT_EQ(g.rank(g.unrank(n, r)), r);
    for (std::size_t r = 0; r < c.count(n); ++r) EXPECT_EQ(c.rank(c.unrank(n, r)), r);
  }
}

TEST(Orbits, GraphsUpToIsomorphism) {
  GraphSpecies g;
  const std::size_t unlabeled[] = {1, 1, 2, 4, 11, 34, 156};
  const std::size_t no_odd[] = {1, 1, 0, 0, 1, 6, 28};
  for (int n = 0; n <= 6; ++n) {
    const auto& table = g.orbit_table(n);
    EXPECT_EQ(table.orbits.size(), unlabeled[n]) << n;
    const auto good = std::count_if(table.orbits.begin(), table.orbits.end(), [](const auto& o) { return !o.odd_stabilizer; });
    EXPECT_EQ(static_cast<std::size_t>(good), no_odd[n]) << n;
  }
}

TEST(Orbits, AgreeWithBruteForce) {
  for (const std::string id : {"L", "P", "C", "Gr", "S.L", "L.E", "two_sided(L,E)"}) {
    const auto sp = make(id);
    for (int n = 0; n <= 4; ++n) {
      const auto brute = brute_orbits(*sp, n, all_permutations(n));
      const auto& table = sp->orbit_table(n);
      EXPECT_EQ(table.orbits.size(), brute.count) << id << " " << n;
      const auto good = std::count_if(table.orbits.begin(), table.orbits.end(), [](const auto& o) { return !o.odd_stabilizer; });
      EXPECT_EQ(static_cast<std::size_t>(good), brute.without_odd_stabilizer) << id << " " << n;
      std::size_t total = 0;
      for (const auto& o : table.orbits) total += o.size;
      EXPECT_EQ(total, sp->count(n));
    }
  }
}

TEST(Orbits, SignFromRepresentativeIsConsistent) {
  CompositionSpecies c;
  const int n = 4;
  const auto& table = c.orbit_table(n);
  for (const auto& sigma : all_permutations(n))
    for (const auto& o : table.orbits) {
      if (o.odd_stabilizer) continue;
      const Structure& rep = c.unrank(n, o.representative);
      const std::size_t r = c.rank(c.relabel(sigma, rep));
      EXPECT_EQ(table.sign_from_representative[r], sigma.sign());
    }
}

TEST(Orbits, YoungOrbitsAgreeWithBruteForce) {
  GraphSpecies g;
  const std::vector<std::vector<int>> shapes{{2, 2}, {1, 3}, {3, 1, 1}, {2, 1, 2}};
  for (const auto& shape : shapes) {
    int n = 0;
    for (int a : shape) n += a;
    const auto group = young_subgroup(shape);
    const auto brute = brute_orbits(g, n, group);
    EXPECT_EQ(g.young_orbits(shape).size(), brute.count);
    const auto& yo = g.young_orbits(shape);
    for (const auto& sigma : group)
      for (std::size_t r = 0; r < g.count(n); ++r)
        EXPECT_EQ(yo.orbit_of[g.rank(g.relabel(sigma, g.unrank(n, r)))], yo.orbit_of[r]);
  }
}

TEST(Restrictions, LinearOrderAndGraphExamples) {
  LinearOrderSpecies l;
  const Structure word{4, {3, 1, 4, 2}};
  const auto r = l.restrict_left(word, Subset::of(4, {1, 3, 4}));
  ASSERT_TRUE(r);
  // 3 1 4 restricted and standardized: 3->2, 1->1, 4->3.
  EXPECT_EQ(r->payload, (std::vector<int>{2, 1, 3}));
  GraphSpecies g;
  const Structure path = GraphSpecies::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto sub = g.restrict_right(path, Subset::of(4, {1, 2, 4}));
  ASSERT_TRUE(sub);
  EXPECT_EQ(sub->payload, (std::vector<int>{1, 2}));
}

TEST(Restrictions, SingletonPowersVanishOnProperSubsets) {
  SingletonPowerSpecies s(3);
  const Structure z{3, {2, 3, 1}};
  EXPECT_FALSE(s.restrict_left(z, Subset::of(3, {1, 2})));
  EXPECT_FALSE(s.restrict_right(z, Subset::empty(3)));
  EXPECT_TRUE(s.restrict_left(z, Subset::full(3)));
}

TEST(Restrictions, TwoSidedProductActsOnOneFactor) {
  auto l = std::make_shared<LinearOrderSpecies>();
  TwoSidedProduct m(l, l);
  // First factor on {1, 3} ordered 3 1, second on {2} .
  const Structure z = CauchyProduct::join(Subset::of(3, {1, 3}), Structure{2, {2, 1}}, Structure{1, {1}});
  EXPECT_FALSE(m.restrict_left(z, Subset::of(3, {1, 3})));
  const auto left = m.restrict_left(z, Subset::of(3, {1, 2}));
  ASSERT_TRUE(left);
  const auto parts = CauchyProduct::split(*left);
  EXPECT_EQ(parts.first, Subset::of(2, {1}));
  EXPECT_FALSE(m.restrict_right(z, Subset::of(3, {2, 3})));
  EXPECT_FALSE(m.cosymmetric());
}

TEST(Restrictions, BadArgumentsThrow) {
  LinearOrderSpecies l;
  const Structure z{3, {1, 2, 3}};
  EXPECT_THROW(l.restrict_left(z, Subset::of(4, {1})), InvalidArgument);
  EXPECT_THROW(l.relabel(Permutation::identity(2), z), InvalidArgument);
  EXPECT_THROW(l.rank(Structure{3, {1, 1, 2}}), InvalidArgument);
}

TEST(Heavy, GraphsOnSevenVerticesNeedOptIn) {
  GraphSpecies g;
  EXPECT_THROW(g.structures(7), HeavyComputation);
  EXPECT_EQ(g.count(6), std::size_t{1} << 15);
}

TEST_P(SpeciesLaws, HoldExhaustively) {
  const auto sp = make(GetParam());
  const int bound = GetParam() == "Gr" || GetParam() == "C" ? 4 : 5;
  const auto violations = check_bicomodule_laws(*sp, bound);
  EXPECT_TRUE(violations.empty()) << violations.front().law << ": " << violations.front().witness;
}

INSTANTIATE_TEST_SUITE_P(Builtins, SpeciesLaws,
                         ::testing::Values("E", "L", "P", "C", "Gr", "S0", "S2", "S.L", "L.E", "two_sided(E,E)",
                                           "two_sided(L,E)", "L+two_sided(E,E)"),
                         [](const auto& info) {
                           std::string name;
                           for (char ch : info.param) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
                           return name;
                         });

namespace {

// Linear orders whose right restriction reverses the order: breaks the counit.
class ReversingOrders final : public Species {
 public:
  std::string id() const override { return "reversing"; }
  bool cosymmetric() const override { return false; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override { return base_.relabel(sigma, z); }
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override {
    auto r = base_.restrict_to(side, z, s);
    if (side == Side::right && r) std::reverse(r->payload.begin(), r->payload.end());
    return r;
  }

 protected:
  std::vector<Structure> enumerate(int n) const override { return base_.structures(n); }

 private:
  LinearOrderSpecies base_;
};

}  // namespace

TEST(Laws, ViolationIsReportedWithWitness) {
  ReversingOrders bad;
  const auto violations = check_bicomodule_laws(bad, 3);
  ASSERT_FALSE(violations.empty());
  EXPECT_NE(violations.front().law.find("counit"), std::string::npos);
  EXPECT_NE(violations.front().witness.find("z="), std::string::npos);
}
