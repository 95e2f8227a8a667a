#include "specoh/products.hpp"

#include <bit>

#include "specoh/errors.hpp"

namespace specoh {

Rational cup_koszul_at(const Species& species, const KoszulFunction& f, int p, const KoszulFunction& g, int q,
                       const Structure& z) {
  const int n = p + q;
  if (z.arity != n) throw InvalidArgument("cup product evaluated on a structure of the wrong arity");
  Rational total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    const Subset s(n, mask);
    const Subset t = s.complement();
    auto right = species.restrict_right(z, s);
    if (!right) continue;
    const Rational a = f(*right);
    if (a.is_zero()) continue;
    auto left = species.restrict_left(z, t);
    if (!left) continue;
    const Rational v = a * g(*left);
    if (crossing_sign(s, t) > 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

KoszulCochain cup_koszul(const KoszulCochain& f, const KoszulCochain& g) {
  if (f.species() != g.species()) throw InvalidArgument("cup product of cochains on different species");
  const int p = f.degree();
  const int q = g.degree();
  const Species& sp = *f.species();
  return KoszulCochain::from_function(f.species(), p + q, [&](const Structure& z) {
    return cup_koszul_at(sp, [&](const Structure& x) { return f(x); }, p, [&](const Structure& y) { return g(y); }, q,
                         z);
  });
}

KoszulCochain unit_koszul(const SpeciesPtr& species) {
  return KoszulCochain::from_function(species, 0, [](const Structure&) { return Rational(1); });
}

Cochain cup_cochain(const Cochain& alpha, const Cochain& beta) {
  const auto& a = *alpha.space();
  const auto& b = *beta.space();
  if (a.species_ptr() != b.species_ptr()) throw InvalidArgument("cup product of cochains on different species");
  if (a.normalized() != b.normalized()) throw InvalidArgument("cup product mixes normalized and unnormalized cochains");
  const int p = a.degree();
  const int q = b.degree();
  auto space = CochainSpace::make(a.species_ptr(), p + q, std::min(a.max_arity(), b.max_arity()), a.normalized());
  const Species& sp = a.species();
  return Cochain::from_function(space, [&](const Decomposition& f, const Structure& z) {
    const int n = f.ground_size();
    Subset u = Subset::empty(n);
    Subset v = Subset::empty(n);
    std::vector<Subset> first;
    std::vector<Subset> second;
    for (int k = 0; k < p + q; ++k) (k < p ? u : v) = (k < p ? u : v) | f.block(k);
    auto zr = sp.restrict_right(z, u);
    if (!zr) return Rational(0);
    auto zl = sp.restrict_left(z, v);
    if (!zl) return Rational(0);
    const Standardization lu(u);
    const Standardization lv(v);
    for (int k = 0; k < p + q; ++k) (k < p ? first : second).push_back(k < p ? lu.apply(f.block(k)) : lv.apply(f.block(k)));
    const Rational x = alpha(Decomposition(lu.size(), std::move(first)), *zr);
    if (x.is_zero()) return x;
    return x * beta(Decomposition(lv.size(), std::move(second)), *zl);
  });
}

Cochain unit_cochain(const SpeciesPtr& species, int max_arity) {
  auto space = CochainSpace::make(species, 0, max_arity);
  return Cochain::from_function(space, [](const Decomposition&, const Structure&) { return Rational(1); });
}

KoszulCochain kunneth_product(const std::shared_ptr<const CauchyProduct>& product, const KoszulCochain& f,
                              const KoszulCochain& g) {
  const int p = f.degree();
  return KoszulCochain::from_function(product, p + g.degree(), [&](const Structure& z) {
    const auto parts = CauchyProduct::split(z);
    if (parts.first.size() != p) return Rational(0);
    const Rational v = f(parts.x) * g(parts.y);
    return crossing_sign(parts.first, parts.second) > 0 ? v : Rational(-v);
  });
}

SparseMatrix kunneth_matrix(const std::shared_ptr<const CauchyProduct>& product, int n) {
  const auto& left = product->left_factor();
  const auto& right = product->right_factor();
  const KoszulBasis target = koszul_basis(*product, n);
  const auto& table = product->orbit_table(n);
  std::size_t cols = 0;
  std::vector<std::size_t> offsets;
  std::vector<KoszulBasis> lb;
  std::vector<KoszulBasis> rb;
  for (int p = 0; p <= n; ++p) {
    offsets.push_back(cols);
    lb.push_back(koszul_basis(left, p));
    rb.push_back(koszul_basis(right, n - p));
    cols += lb.back().size() * rb.back().size();
  }
  SparseMatrix m(target.size(), cols);
  // Column (p, i, j) is basis_i x basis_j; its value at a representative
  // (A, B, x, y) is the signed product of the two basis functionals.
  for (std::size_t row = 0; row < target.size(); ++row) {
    const Structure& z = product->unrank(n, table.orbits[target.orbits[row]].representative);
    const auto parts = CauchyProduct::split(z);
    const int p = parts.first.size();
    const auto [i, si] = koszul_locate(left, lb[static_cast<std::size_t>(p)], parts.x);
    if (i < 0) continue;
    const auto [j, sj] = koszul_locate(right, rb[static_cast<std::size_t>(p)], parts.y);
    if (j < 0) continue;
    const int sign = si * sj * crossing_sign(parts.first, parts.second);
    const std::size_t col = offsets[static_cast<std::size_t>(p)] +
                            static_cast<std::size_t>(i) * rb[static_cast<std::size_t>(p)].size() +
                            static_cast<std::size_t>(j);
    m.add(row, col, Rational(sign));
  }
  return m;
}

Cochain cardinality_cocycle(const SpeciesPtr& species, int max_arity) {
  auto space = CochainSpace::make(species, 1, max_arity);
  return Cochain::from_function(space,
                                [](const Decomposition& f, const Structure&) { return Rational(f.block(0).size()); });
}

KoszulCochain cardinality_class(const SpeciesPtr& species) {
  return KoszulCochain::from_function(species, 1, [](const Structure&) { return Rational(1); });
}

KoszulCochain linear_order_generator(const SpeciesPtr& linear_orders, int p) {
  return KoszulCochain::from_function(linear_orders, p, [](const Structure& z) {
    return Rational(Permutation(z.payload).sign());
  });
}

Cochain schubert_cocycle(const SpeciesPtr& linear_orders, int max_arity) {
  auto space = CochainSpace::make(linear_orders, 2, max_arity);
  return Cochain::from_function(space, [](const Decomposition& f, const Structure& z) {
    int count = 0;
    int s_before = 0;
    for (int e : z.payload) {
      if (f.block(0).contains(e)) ++s_before;
      if (f.block(1).contains(e)) count += s_before;
    }
    return Rational(count);
  });
}

std::vector<std::pair<int, int>> path_edges(int k, int offset) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(offset + i, offset + i + 1);
  return edges;
}

Rational graph_path_count(const Decomposition& f, const Structure& g) {
  if (f.length() != 4) throw InvalidArgument("the path cochain has degree 4");
  const int n = g.arity;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k + 1 < g.payload.size(); k += 2) {
    adj[static_cast<std::size_t>(g.payload[k])] |= std::uint64_t{1} << (g.payload[k + 1] - 1);
    adj[static_cast<std::size_t>(g.payload[k + 1])] |= std::uint64_t{1} << (g.payload[k] - 1);
  }
  long long count = 0;
  for (int a : f.block(0).members())
    for (int b : f.block(1).members()) {
      if (!(adj[static_cast<std::size_t>(a)] >> (b - 1) & 1)) continue;
      for (int c : f.block(2).members()) {
        if (!(adj[static_cast<std::size_t>(b)] >> (c - 1) & 1)) continue;
        count += std::popcount(adj[static_cast<std::size_t>(c)] & f.block(3).mask());
      }
    }
  return Rational(count);
}

Cochain graph_path_cocycle(const SpeciesPtr& graphs, int max_arity) {
  auto space = CochainSpace::make(graphs, 4, max_arity);
  return Cochain::from_function(space, graph_path_count);
}

}  // namespace specoh
