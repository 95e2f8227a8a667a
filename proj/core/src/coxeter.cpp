#include "specoh/coxeter.hpp"

#include <algorithm>

#include "specoh/errors.hpp"

namespace specoh {

Decomposition coxeter_face(int i, const Decomposition& g) {
  if (i < 0 || i + 1 >= g.length()) throw InvalidArgument("face index out of range");
  std::vector<Subset> blocks;
  for (int k = 0; k < g.length(); ++k) {
    if (k == i + 1) continue;
    blocks.push_back(k == i ? (g.block(i) | g.block(i + 1)) : g.block(k));
  }
  return Decomposition(g.ground_size(), std::move(blocks));
}

CoxeterComplex::CoxeterComplex(int j) : j_(j) {
  if (j < 1 || j > 10) throw InvalidArgument("Coxeter complex needs 1 <= j <= 10");
  for (int p = -1; p <= j - 2; ++p) {
    levels_.push_back(enumerate_compositions(j, p + 2));
    auto& idx = index_.emplace_back();
    for (std::size_t k = 0; k < levels_.back().size(); ++k) idx.emplace(levels_.back()[k].block_word(), k);
  }
  for (int p = -1; p <= j - 2; ++p) {
    const std::size_t cols = level(p).size();
    if (p == j - 2) {
      coboundaries_.emplace_back(0, cols);
      continue;
    }
    const auto& target = level(p + 1);
    SparseMatrix d(target.size(), cols);
    for (std::size_t r = 0; r < target.size(); ++r)
      for (int i = 0; i <= p + 1; ++i)
        d.add(r, index_of(p, coxeter_face(i, target[r])), Rational(i % 2 == 0 ? 1 : -1));
    coboundaries_.push_back(std::move(d));
  }
}

const std::vector<Decomposition>& CoxeterComplex::level(int p) const {
  if (p < -1 || p > j_ - 2) throw InvalidArgument("Coxeter level out of range");
  return levels_[static_cast<std::size_t>(p + 1)];
}

std::size_t CoxeterComplex::index_of(int p, const Decomposition& g) const {
  if (p < -1 || p > j_ - 2) throw InvalidArgument("Coxeter level out of range");
  const auto& idx = index_[static_cast<std::size_t>(p + 1)];
  auto it = idx.find(g.block_word());
  if (it == idx.end()) throw InvalidArgument("not a composition at level " + std::to_string(p));
  return it->second;
}

const SparseMatrix& CoxeterComplex::coboundary(int p) const {
  if (p < -1 || p > j_ - 2) throw InvalidArgument("Coxeter level out of range");
  return coboundaries_[static_cast<std::size_t>(p + 1)];
}

std::vector<std::size_t> CoxeterComplex::cohomology_dimensions() const {
  std::vector<std::size_t> out;
  for (int p = -1; p <= j_ - 2; ++p) {
    const SparseMatrix d_in = p == -1 ? SparseMatrix(level(p).size(), 0) : coboundary(p - 1);
    out.push_back(cohomology_dimension(d_in, coboundary(p)));
  }
  return out;
}

Vector CoxeterComplex::top_generator() const {
  Vector v(level(top_level()).size(), Rational(0));
  v[index_of(top_level(), singleton_composition_identity())] = 1;
  return v;
}

Decomposition CoxeterComplex::singleton_composition_identity() const {
  std::vector<Subset> blocks;
  for (int k = 1; k <= j_; ++k) blocks.push_back(Subset::of(j_, {k}));
  return Decomposition(j_, std::move(blocks));
}

Vector CoxeterComplex::act_on_top(const Permutation& sigma, const Vector& phi) const {
  const auto& top = level(top_level());
  if (phi.size() != top.size() || sigma.degree() != j_) throw InvalidArgument("size mismatch in Coxeter action");
  const Permutation inv = sigma.inverse();
  Vector out(top.size(), Rational(0));
  for (std::size_t k = 0; k < top.size(); ++k) out[k] = phi[index_of(top_level(), top[k].relabeled(inv))];
  return out;
}

bool CoxeterComplex::top_is_coboundary(const Vector& v) const {
  if (j_ < 2) return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
  return in_image(coboundary(top_level() - 1), v);
}

}  // namespace specoh
