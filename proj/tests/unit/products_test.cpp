#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "specoh/errors.hpp"
#include "specoh/products.hpp"
#include "specoh/registry.hpp"

using namespace specoh;

namespace {

SpeciesPtr species(const std::string& id) {
  static bool configured = false;
  if (!configured) {
    global_registry().add_directory(std::string(SPECOH_TEST_DATA_DIR) + "/species");
    configured = true;
  }
  return global_registry().get(id);
}

KoszulCochain f(int p) { return linear_order_generator(species("L"), p); }

KoszulCochain random_koszul(const SpeciesPtr& sp, int p, std::mt19937& rng) {
  KoszulCochain out(sp, p);
  Vector v = out.coefficients();
  for (auto& x : v) x = Rational(static_cast<int>(rng() % 7) - 3);
  return KoszulCochain(sp, p, v);
}

Cochain random_cochain(const CochainSpacePtr& space, std::mt19937& rng) {
  Cochain c(space);
  for (auto& v : c.values()) v = Rational(static_cast<int>(rng() % 7) - 3);
  return c;
}

void expect_same(const Cochain& a, const Cochain& b) {
  ASSERT_EQ(a.values().size(), b.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const auto [dec, z] = a.space()->element(i);
    EXPECT_EQ(a.values()[i], b.values()[i]) << dec.to_string() << " " << a.space()->species().describe(z);
  }
}

// Signed count of Hamiltonian paths of a 4-vertex graph, each read as a
// permutation word; computed from the edge list alone.
int signed_hamiltonian_paths(const Structure& g) {
  std::set<std::pair<int, int>> edges;
  for (std::size_t k = 0; k + 1 < g.payload.size(); k += 2) {
    edges.emplace(g.payload[k], g.payload[k + 1]);
    edges.emplace(g.payload[k + 1], g.payload[k]);
  }
  int total = 0;
  for (const auto& s : all_permutations(4)) {
    bool path = true;
    for (int i = 1; i < 4; ++i) path = path && edges.count({s(i), s(i + 1)});
    if (path) total += s.sign();
  }
  return total;
}

}  // namespace

TEST(LinearOrderRing, GeneratorsSpanEachDegree) {
  for (int p = 0; p <= 6; ++p) {
    const auto g = f(p);
    ASSERT_EQ(g.coefficients().size(), 1u);
    EXPECT_EQ(g.coefficients()[0], Rational(1));
  }
}

TEST(LinearOrderRing, StatedRelations) {
  EXPECT_EQ(cup_koszul(f(1), f(2)), f(3));
  EXPECT_EQ(cup_koszul(f(2), f(2)), f(4).scaled(Rational(2)));
  EXPECT_EQ(cup_koszul(f(2), f(4)), f(6).scaled(Rational(3)));
  EXPECT_TRUE(cup_koszul(f(1), f(3)).is_zero());
  EXPECT_TRUE(cup_koszul(f(1), f(1)).is_zero());
}

TEST(LinearOrderRing, EvenGeneratorsFollowBinomials) {
  // f2^k = k! f_{2k}, so f_{2a} f_{2b} = C(a+b, a) f_{2a+2b}.
  EXPECT_EQ(cup_koszul(f(2), f(2)), f(4).scaled(Rational(2)));
  EXPECT_EQ(cup_koszul(cup_koszul(f(2), f(2)), f(2)), f(6).scaled(Rational(6)));
}

TEST(CupProduct, UnitOnlyActsWhereRestrictionsSurvive) {
  // In two_sided(E,E) the right restriction of (A, B) to the empty set
  // vanishes unless A is empty, so the unit cochain misses those terms.
  const auto sp = species("two_sided_E_E");
  const auto b = KoszulCochain::basis_element(sp, 1, 0);
  EXPECT_FALSE(cup_koszul(unit_koszul(sp), b) == b);
}

TEST(CupProduct, UnitIsTwoSided) {
  for (const std::string id : {"E", "L", "P", "Gr", "L.E"}) {
    const auto sp = species(id);
    const auto u = unit_koszul(sp);
    for (int p = 0; p <= 3; ++p)
      for (std::size_t k = 0; k < koszul_dimension(*sp, p); ++k) {
        const auto b = KoszulCochain::basis_element(sp, p, k);
        EXPECT_EQ(cup_koszul(u, b), b) << id;
        EXPECT_EQ(cup_koszul(b, u), b) << id;
      }
  }
}

TEST(CupProduct, ExteriorAlgebraOnE) {
  const auto e = species("E");
  const auto f1 = KoszulCochain::basis_element(e, 1, 0);
  EXPECT_TRUE(cup_koszul(f1, f1).is_zero());
  EXPECT_EQ(koszul_dimension(*e, 2), 0u);
}

TEST(CupProduct, GradedCommutativeOnCosymmetricSpecies) {
  for (const std::string id : {"E", "L", "P", "C", "Gr", "S.E", "S.L", "L.E"}) {
    const auto sp = species(id);
    for (int p = 0; p <= 5; ++p)
      for (int q = 0; p + q <= 5; ++q)
        for (std::size_t i = 0; i < koszul_dimension(*sp, p); ++i)
          for (std::size_t j = 0; j < koszul_dimension(*sp, q); ++j) {
            const auto a = KoszulCochain::basis_element(sp, p, i);
            const auto b = KoszulCochain::basis_element(sp, q, j);
            const auto ab = cup_koszul(a, b);
            const auto ba = cup_koszul(b, a);
            EXPECT_EQ(ab, (p * q) % 2 == 0 ? ba : ba.scaled(Rational(-1))) << id << " p=" << p << " q=" << q;
          }
  }
}

TEST(CupProduct, Associative) {
  std::mt19937 rng(5);
  for (const std::string id : {"L", "C", "orders_plus_two_sided"}) {
    const auto sp = species(id);
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; q <= 2; ++q)
        for (int r = 1; p + q + r <= std::min(5, sp->max_arity()); ++r) {
          const auto a = random_koszul(sp, p, rng);
          const auto b = random_koszul(sp, q, rng);
          const auto c = random_koszul(sp, r, rng);
          EXPECT_EQ(cup_koszul(cup_koszul(a, b), c), cup_koszul(a, cup_koszul(b, c))) << id;
        }
  }
}

TEST(CupProduct, LeibnizRuleOnNonCosymmetricSpecies) {
  std::mt19937 rng(11);
  for (const std::string id : {"orders_plus_two_sided", "two_sided_E_E", "two_sided(L,E)"}) {
    const auto sp = species(id);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 3; ++q) {
        const auto a = random_koszul(sp, p, rng);
        const auto b = random_koszul(sp, q, rng);
        const auto lhs = koszul_differential(cup_koszul(a, b));
        const auto second = cup_koszul(a, koszul_differential(b));
        const auto rhs = cup_koszul(koszul_differential(a), b) + (p % 2 == 0 ? second : second.scaled(Rational(-1)));
        EXPECT_EQ(lhs, rhs) << id << " p=" << p << " q=" << q;
      }
  }
}

TEST(CupProduct, AntisymmetrizationIsMultiplicative) {
  for (const std::string id : {"L", "C", "Gr", "orders_plus_two_sided"}) {
    const auto sp = species(id);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; p + q <= (id == "Gr" ? 4 : 5); ++q)
        for (std::size_t i = 0; i < koszul_dimension(*sp, p); ++i)
          for (std::size_t j = 0; j < koszul_dimension(*sp, q); ++j) {
            const auto a = KoszulCochain::basis_element(sp, p, i);
            const auto b = KoszulCochain::basis_element(sp, q, j);
            const auto lifted = cup_cochain(koszul_to_cochain(a, p + q), koszul_to_cochain(b, p + q));
            EXPECT_EQ(cochain_to_koszul(lifted), cup_koszul(a, b)) << id << " p=" << p << " q=" << q;
          }
  }
}

TEST(CochainCup, LeibnizRule) {
  std::mt19937 rng(3);
  for (const std::string id : {"L", "two_sided_E_E", "orders_plus_two_sided"}) {
    const auto sp = species(id);
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; p + q <= 3; ++q) {
        const auto a = random_cochain(CochainSpace::make(sp, p, 4), rng);
        const auto b = random_cochain(CochainSpace::make(sp, q, 4), rng);
        const auto second = cup_cochain(a, coboundary(b));
        const auto rhs = cup_cochain(coboundary(a), b) + (p % 2 == 0 ? second : second.scaled(Rational(-1)));
        expect_same(coboundary(cup_cochain(a, b)), rhs);
      }
  }
}

TEST(CochainCup, UnitAndArityBound) {
  const auto l = species("L");
  const auto kappa = cardinality_cocycle(l, 4);
  const auto u = unit_cochain(l, 3);
  const auto left = cup_cochain(u, kappa);
  EXPECT_EQ(left.space()->max_arity(), 3);
  expect_same(left, cardinality_cocycle(l, 3));
  expect_same(cup_cochain(cardinality_cocycle(l, 3), u), cardinality_cocycle(l, 3));
  EXPECT_THROW(cup_cochain(kappa, cardinality_cocycle(species("E"), 3)), InvalidArgument);
}

TEST(CochainCup, CardinalitySquareIsProductOfSizes) {
  const auto p = species("P");
  const auto kappa = cardinality_cocycle(p, 4);
  const auto sq = cup_cochain(kappa, kappa);
  for (std::size_t i = 0; i < sq.values().size(); ++i) {
    const auto [dec, z] = sq.space()->element(i);
    EXPECT_EQ(sq.values()[i], Rational(dec.block(0).size() * dec.block(1).size()));
  }
}

TEST(Cardinality, CocycleWithKnownImage) {
  for (const std::string id : {"E", "L", "P", "Gr", "L.E"}) {
    const auto sp = species(id);
    EXPECT_TRUE(coboundary(cardinality_cocycle(sp, 4)).is_zero()) << id;
    EXPECT_EQ(cochain_to_koszul(cardinality_cocycle(sp, 4)), cardinality_class(sp)) << id;
  }
  // Restrictions that vanish break the cocycle condition.
  EXPECT_FALSE(coboundary(cardinality_cocycle(species("two_sided_E_E"), 4)).is_zero());
  EXPECT_EQ(cardinality_class(species("L")), f(1));
}

TEST(Schubert, CocycleLiftingTheDegreeTwoGenerator) {
  const auto l = species("L");
  const auto delta = schubert_cocycle(l, 5);
  EXPECT_TRUE(coboundary(delta).is_zero());
  EXPECT_EQ(cochain_to_koszul(delta), f(2));
  // Against the pair count of the combinatorics layer.
  for (std::size_t i = 0; i < delta.values().size(); ++i) {
    const auto [dec, z] = delta.space()->element(i);
    if (z.payload == Permutation::identity(z.arity).images()) {
      EXPECT_EQ(delta.values()[i], Rational(schubert(dec.block(0), dec.block(1))));
    }
  }
}

TEST(Kunneth, DimensionsAndFullRank) {
  const auto product = std::dynamic_pointer_cast<const CauchyProduct>(species("L.E"));
  ASSERT_TRUE(product);
  for (int n = 0; n <= 5; ++n) {
    std::size_t expected = 0;
    for (int p = 0; p <= n; ++p)
      expected += koszul_dimension(*species("L"), p) * koszul_dimension(*species("E"), n - p);
    EXPECT_EQ(koszul_dimension(*product, n), expected) << n;
    const auto m = kunneth_matrix(product, n);
    EXPECT_EQ(m.cols(), expected);
    EXPECT_EQ(rank(m), expected) << n;
  }
}

TEST(Kunneth, ProductMatchesMatrixColumns) {
  const auto product = std::dynamic_pointer_cast<const CauchyProduct>(species("L.E"));
  const auto e1 = KoszulCochain::basis_element(species("E"), 1, 0);
  const auto x = kunneth_product(product, f(2), e1);
  const auto m = kunneth_matrix(product, 3);
  // Columns for n = 3: (p=2, f2 x e1) then (p=3, f3 x 1).
  Vector unit(m.cols(), Rational(0));
  unit[0] = 1;
  EXPECT_EQ(m.apply(unit), x.coefficients());
}

TEST(Suspension, ShiftsDimensionsByOne) {
  for (const std::string base : {"E", "L"}) {
    const auto sp = species("S." + base);
    EXPECT_EQ(koszul_dimension(*sp, 0), 0u);
    for (int n = 1; n <= 5; ++n)
      EXPECT_EQ(koszul_cohomology(sp, n).dimension, koszul_cohomology(species(base), n - 1).dimension) << base << n;
  }
}

TEST(GraphPaths, CountOnPathGraph) {
  const auto p4 = GraphSpecies::from_edges(4, path_edges(4));
  const std::vector<int> sizes = {1, 1, 1, 1};
  EXPECT_EQ(graph_path_count(Decomposition::standard(sizes), p4), Rational(1));
  const Decomposition reversed(4, {Subset::of(4, {4}), Subset::of(4, {3}), Subset::of(4, {2}), Subset::of(4, {1})});
  EXPECT_EQ(graph_path_count(reversed, p4), Rational(1));
  const Decomposition broken(4, {Subset::of(4, {1}), Subset::of(4, {3}), Subset::of(4, {2}), Subset::of(4, {4})});
  EXPECT_EQ(graph_path_count(broken, p4), Rational(0));
  const Decomposition empty_block(4, {Subset::of(4, {1, 2}), Subset::empty(4), Subset::of(4, {3}), Subset::of(4, {4})});
  EXPECT_EQ(graph_path_count(empty_block, p4), Rational(0));
  // Non-induced: the triangle plus a pendant vertex still carries the path.
  const auto k = GraphSpecies::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
  EXPECT_EQ(graph_path_count(Decomposition::standard(sizes), k), Rational(1));
}

TEST(GraphPaths, CocycleWithNonzeroSquare) {
  const auto gr = species("Gr");
  const auto p = graph_path_cocycle(gr, 6);
  EXPECT_TRUE(coboundary(p).is_zero());
  const auto image = cochain_to_koszul(p);
  const auto p4 = GraphSpecies::from_edges(4, path_edges(4));
  EXPECT_EQ(image(p4), Rational(signed_hamiltonian_paths(p4)));
  EXPECT_EQ(image(p4), Rational(2));
  // Degree 8 value on two disjoint 4-paths, evaluated directly.
  auto edges = path_edges(4);
  for (const auto& e : path_edges(4, 4)) edges.push_back(e);
  const auto two_paths = GraphSpecies::from_edges(8, edges);
  const KoszulFunction fn = [&](const Structure& x) { return image(x); };
  const Rational square = cup_koszul_at(*gr, fn, 4, fn, 4, two_paths);
  int expected = 0;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    const Subset s(8, mask);
    expected += crossing_sign(s, s.complement()) * signed_hamiltonian_paths(*gr->restrict_right(two_paths, s)) *
                signed_hamiltonian_paths(*gr->restrict_left(two_paths, s.complement()));
  }
  EXPECT_EQ(square, Rational(expected));
  EXPECT_EQ(square, Rational(8));
}
