#pragma once

#include <map>
#include <vector>

#include "specoh/combinatorics.hpp"
#include "specoh/linalg.hpp"

namespace specoh {

/// The Coxeter complex of [j]: level p (p = -1, ..., j-2) consists of the
/// compositions of [j] into p+2 blocks, and the face d_i merges blocks i and
/// i+1 (0-based). Cochains are functions on each level with coboundary
/// (delta phi)(G) = sum_i (-1)^i phi(d_i G).
class CoxeterComplex {
 public:
  explicit CoxeterComplex(int j);

  int j() const { return j_; }
  int top_level() const { return j_ - 2; }
  const std::vector<Decomposition>& level(int p) const;
  std::size_t index_of(int p, const Decomposition& g) const;
  /// Matrix of delta from level p to level p+1.
  const SparseMatrix& coboundary(int p) const;

  /// Reduced cohomology dimension at each level p = -1, ..., j-2.
  std::vector<std::size_t> cohomology_dimensions() const;

  /// Indicator of the composition into singletons in increasing order.
  Vector top_generator() const;
  /// (sigma . phi)(G) = phi(sigma^{-1} G) on the top level.
  Vector act_on_top(const Permutation& sigma, const Vector& phi) const;
  /// Whether v is a coboundary at the top level.
  bool top_is_coboundary(const Vector& v) const;

 private:
  Decomposition singleton_composition_identity() const;

  int j_;
  std::vector<std::vector<Decomposition>> levels_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
  std::vector<SparseMatrix> coboundaries_;
};

/// d_i on a composition.
Decomposition coxeter_face(int i, const Decomposition& g);

}  // namespace specoh
