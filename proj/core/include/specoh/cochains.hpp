#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "specoh/combinatorics.hpp"
#include "specoh/linalg.hpp"
#include "specoh/species.hpp"

namespace specoh {

/// Integer compositions of n into exactly q parts, each part >= 1 (or >= 0
/// when allow_zero), in lexicographic order.
std::vector<std::vector<int>> integer_compositions(int n, int q, bool allow_zero);

/// The arity-truncated space C^q_{<=N}(X) of equivariant q-cochains.
///
/// A cochain assigns a scalar alpha(F)(z) to every decomposition F of [n]
/// into q blocks and z in X[n], n <= N, invariant under simultaneous
/// relabeling. Orbits of pairs (F, z) with F of block sizes a correspond to
/// orbits of the Young subgroup S_a on X[n] (F moved to consecutive blocks),
/// so the basis is indexed by (block sizes, Young orbit) cells. In the
/// normalized space blocks are nonempty; otherwise empty blocks are allowed.
class CochainSpace {
 public:
  struct Cell {
    int arity = 0;
    std::vector<int> block_sizes;
    const YoungOrbits* orbits = nullptr;
    std::size_t offset = 0;
  };

  static std::shared_ptr<const CochainSpace> make(SpeciesPtr species, int degree, int max_arity,
                                                   bool normalized = true);

  const Species& species() const { return *species_; }
  const SpeciesPtr& species_ptr() const { return species_; }
  int degree() const { return degree_; }
  int max_arity() const { return max_arity_; }
  bool normalized() const { return normalized_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Basis index of the orbit of (F, z); nothing when the component is
  /// forced to vanish (an empty block in a normalized space).
  std::optional<std::size_t> locate(const Decomposition& f, const Structure& z) const;
  /// Standard representative (consecutive blocks, Young orbit representative).
  std::pair<Decomposition, Structure> element(std::size_t index) const;
  const Cell& cell_of(std::size_t index) const;

 private:
  CochainSpace(SpeciesPtr species, int degree, int max_arity, bool normalized);

  SpeciesPtr species_;
  int degree_;
  int max_arity_;
  bool normalized_;
  std::vector<Cell> cells_;
  std::map<std::vector<int>, std::size_t> cell_index_;
  std::size_t dimension_ = 0;
};

using CochainSpacePtr = std::shared_ptr<const CochainSpace>;

/// Value of a cochain on an arbitrary (F, z).
using CochainFunction = std::function<Rational(const Decomposition&, const Structure&)>;

class Cochain {
 public:
  explicit Cochain(CochainSpacePtr space);
  Cochain(CochainSpacePtr space, Vector values);

  /// Samples an equivariant function on the basis representatives.
  static Cochain from_function(CochainSpacePtr space, const CochainFunction& f);

  const CochainSpacePtr& space() const { return space_; }
  int degree() const { return space_->degree(); }
  const Vector& values() const { return values_; }
  Vector& values() { return values_; }

  Rational operator()(const Decomposition& f, const Structure& z) const;
  CochainFunction as_function() const;
  bool is_zero() const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const Rational& c) const;

 private:
  CochainSpacePtr space_;
  Vector values_;
};

/// Where the i-th coface reads its argument: (d^i alpha)(F)(z) = alpha(F')(z')
/// for the returned (F', z'); nothing when the restriction is zero. F has
/// q+1 blocks and i ranges over 0..q+1.
std::optional<std::pair<Decomposition, Structure>> coface_argument(const Species& species, int i,
                                                                   const Decomposition& f, const Structure& z);

/// (delta alpha)(F)(z) = sum_i (-1)^i (d^i alpha)(F)(z), alpha of degree
/// F.length() - 1.
Rational coboundary_at(const Species& species, const CochainFunction& alpha, const Decomposition& f,
                       const Structure& z);

Cochain coface(int i, const Cochain& alpha);
/// sigma^j : C^q -> C^{q-1}, j in [0, q-1]: inserts an empty block after the
/// first j blocks.
Cochain codegeneracy(int j, const Cochain& alpha);
Cochain coboundary(const Cochain& alpha);

/// Matrix of delta : C^q_{<=N} -> C^{q+1}_{<=N}. For q < 0 this is the zero
/// map out of the zero space.
SparseMatrix coboundary_matrix(const SpeciesPtr& species, int q, int max_arity, bool normalized = true);

struct CochainCohomology {
  std::size_t dimension = 0;
  std::vector<Cochain> representatives;
};

/// H^q of the arity-truncated normalized complex. Requires N >= q + 1.
CochainCohomology truncated_cohomology(const SpeciesPtr& species, int q, int max_arity);

/// Throws unless N >= q + 1.
void check_truncation(int q, int max_arity);

}  // namespace specoh
