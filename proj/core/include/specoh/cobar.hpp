#pragma once

#include <map>
#include <string>
#include <vector>

#include "specoh/combinatorics.hpp"
#include "specoh/linalg.hpp"
#include "specoh/species.hpp"

namespace specoh {

/// Basis element of the cobar construction at arity n: a composition
/// (F_1, ..., F_k) of [n] with a structure c_i on each block (standardized).
/// Its cohomological degree is k - n.
struct CobarWord {
  Decomposition blocks;
  std::vector<Structure> labels;
};

/// Omega(C)[n] for a coalgebra species C with coproduct
/// c -> sum over (A, B) of (c \\ A) (x) (c // B).
///
/// The differential splits block i into two nonempty parts through the
/// reduced coproduct, with sign (-1)^(i-1) (generators have degree -1).
/// Words are grouped by their number of blocks k = 1..n.
class CobarComplex {
 public:
  CobarComplex(SpeciesPtr coalgebra, int arity);

  int arity() const { return arity_; }
  const Species& coalgebra() const { return *coalgebra_; }
  /// Words with k blocks (k in 1..n; k = 0 only for n = 0).
  const std::vector<CobarWord>& words(int k) const { return words_.at(static_cast<std::size_t>(k)); }
  /// d : (k blocks) -> (k + 1 blocks).
  const SparseMatrix& differential(int k) const { return differentials_.at(static_cast<std::size_t>(k)); }
  static int degree_of(int blocks, int arity) { return blocks - arity; }

  bool differential_squares_to_zero() const;
  /// Cohomology dimension for each block count k = 0..n.
  std::vector<std::size_t> cohomology_by_blocks() const;
  std::string describe(const CobarWord& w) const;

 private:
  std::size_t index_of(int k, const std::vector<int>& key) const;

  SpeciesPtr coalgebra_;
  int arity_;
  std::vector<std::vector<CobarWord>> words_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
  std::vector<SparseMatrix> differentials_;
};

/// Unsigned Stirling numbers of the first kind by the recurrence
/// [n+1, k] = n [n, k] + [n, k-1].
std::vector<std::vector<std::uint64_t>> stirling_first_kind_table(int max_n);

}  // namespace specoh
