#pragma once

#include <algorithm>
#include <memory>
#include <string>

#include "specoh/species.hpp"

namespace specoh {

/// E: exactly one structure on every finite set.
class ExponentialSpecies final : public Species {
 public:
  std::string id() const override { return "E"; }
  bool cosymmetric() const override { return true; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;
};

/// S^k: linear orders on sets of exactly k elements, nothing elsewhere.
/// Every proper restriction is zero. S^0 is the unit species.
class SingletonPowerSpecies final : public Species {
 public:
  explicit SingletonPowerSpecies(int k);
  std::string id() const override;
  bool cosymmetric() const override { return true; }
  int power() const { return k_; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;

 private:
  int k_;
};

/// L: linear orders. Payload lists the ground set in order.
class LinearOrderSpecies final : public Species {
 public:
  std::string id() const override { return "L"; }
  bool cosymmetric() const override { return true; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;
};

/// P: set partitions. Payload is the restricted growth string (block index of
/// each element, blocks numbered by first occurrence).
class PartitionSpecies final : public Species {
 public:
  std::string id() const override { return "P"; }
  bool cosymmetric() const override { return true; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;
};

/// C: compositions (ordered set partitions). Payload is the block index of
/// each element, a surjection onto {0, ..., k-1}.
class CompositionSpecies final : public Species {
 public:
  std::string id() const override { return "C"; }
  bool cosymmetric() const override { return true; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;
};

/// Gr: simple graphs. Payload is the flattened, sorted edge list
/// (i1, j1, i2, j2, ...) with i < j. Ranks are edge bitmasks over the pairs
/// (1,2), (1,3), ..., (n-1,n).
class GraphSpecies final : public Species {
 public:
  static constexpr int kHeavyArity = 7;

  std::string id() const override { return "Gr"; }
  bool cosymmetric() const override { return true; }
  bool heavy(int n) const override { return n >= kHeavyArity; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::size_t rank(const Structure& z) const override;
  std::string describe(const Structure& z) const override;

  static Structure from_edges(int n, const std::vector<std::pair<int, int>>& edges);

 protected:
  std::vector<Structure> enumerate(int n) const override;
};

/// X . Y: structures on I are (A, B, x, y) with (A, B) a decomposition of I,
/// x in X[A], y in Y[B]. Payload: block indicator word (0 for A, 1 for B),
/// then |payload(x)|, payload(x), payload(y). Both restrictions act on the
/// two factors simultaneously with the same side.
class CauchyProduct final : public Species {
 public:
  CauchyProduct(SpeciesPtr x, SpeciesPtr y);

  std::string id() const override;
  bool cosymmetric() const override { return x_->cosymmetric() && y_->cosymmetric(); }
  int max_arity() const override;
  bool heavy(int n) const override { return x_->heavy(n) || y_->heavy(n); }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

  const Species& left_factor() const { return *x_; }
  const Species& right_factor() const { return *y_; }

  struct Parts {
    Subset first;
    Subset second;
    Structure x;
    Structure y;
  };
  static Parts split(const Structure& z);
  static Structure join(const Subset& first, const Structure& x, const Structure& y);

 protected:
  std::vector<Structure> enumerate(int n) const override;

 private:
  SpeciesPtr x_;
  SpeciesPtr y_;
};

/// Two-sided product of M and N: the same structures as M . N, but the left
/// restriction z // S only acts on the M part (and is zero unless S contains
/// the N part), while the right restriction z \\ S only acts on the N part
/// (zero unless S contains the M part). Not cosymmetric once either factor is
/// nonempty in positive arity, so its Koszul differential is nontrivial.
class TwoSidedProduct final : public Species {
 public:
  TwoSidedProduct(SpeciesPtr m, SpeciesPtr n);

  std::string id() const override;
  bool cosymmetric() const override { return false; }
  int max_arity() const override;
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;

 private:
  SpeciesPtr m_;
  SpeciesPtr n_;
  CauchyProduct product_;
};

/// X + Y: structures of X followed by those of Y at every arity; payload is
/// a summand tag (0 or 1) followed by the summand payload. Restrictions act
/// within each summand.
class DirectSum final : public Species {
 public:
  DirectSum(SpeciesPtr x, SpeciesPtr y);

  std::string id() const override;
  bool cosymmetric() const override { return x_->cosymmetric() && y_->cosymmetric(); }
  int max_arity() const override { return std::min(x_->max_arity(), y_->max_arity()); }
  bool heavy(int n) const override { return x_->heavy(n) || y_->heavy(n); }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

 protected:
  std::vector<Structure> enumerate(int n) const override;

 private:
  const Species& summand(const Structure& z) const;
  static Structure tagged(int tag, const Structure& z);
  static Structure untagged(const Structure& z);

  SpeciesPtr x_;
  SpeciesPtr y_;
};

}  // namespace specoh
