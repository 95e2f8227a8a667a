#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "specoh/combinatorics.hpp"

namespace specoh {

/// One element of X[n]. The payload is a canonical encoding: equal
/// structures have identical payloads.
struct Structure {
  int arity = 0;
  std::vector<int> payload;

  friend bool operator==(const Structure&, const Structure&) = default;
  friend auto operator<=>(const Structure&, const Structure&) = default;
};

struct StructureHash {
  std::size_t operator()(const Structure& s) const noexcept;
};

/// Which restriction map: left is z // S, right is z \\ S.
enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Orbits of S_n acting on X[n].
struct OrbitTable {
  struct Orbit {
    std::size_t representative = 0;  // rank of the lexicographically least member
    std::size_t size = 0;
    bool odd_stabilizer = false;
  };
  int arity = 0;
  std::vector<Orbit> orbits;
  std::vector<std::uint32_t> orbit_of;  // by rank
  /// sign(sigma) for some sigma with sigma . representative = z, by rank.
  /// Only meaningful on orbits without an odd stabilizer.
  std::vector<std::int8_t> sign_from_representative;
};

/// Orbits of a Young subgroup S_{a_1} x ... x S_{a_q} (acting on consecutive
/// blocks of [n]) on X[n].
struct YoungOrbits {
  std::vector<int> block_sizes;
  std::vector<std::size_t> representatives;  // ranks, ascending
  std::vector<std::uint32_t> orbit_of;       // by rank
  std::size_t size() const { return representatives.size(); }
};

/// A species with an E-bicomodule structure given by restriction maps.
///
/// Restrictions return the structure on S transported to {1, ..., |S|} by the
/// order-preserving bijection, or nothing when the restriction is zero (the
/// bicomodule structure of a linearized species may send a basis element to
/// zero, as for the singleton species).
class Species {
 public:
  static constexpr int kUnbounded = 1 << 20;

  virtual ~Species() = default;

  virtual std::string id() const = 0;
  virtual bool cosymmetric() const = 0;
  /// Largest arity for which structures are known.
  virtual int max_arity() const { return kUnbounded; }
  /// Arities at which enumeration should require an explicit opt-in.
  virtual bool heavy(int /*n*/) const { return false; }
  /// Enumerating a heavy arity throws HeavyComputation unless allowed here.
  void set_allow_heavy(bool allow) const { allow_heavy_ = allow; }
  bool allow_heavy() const { return allow_heavy_; }

  virtual Structure relabel(const Permutation& sigma, const Structure& z) const = 0;
  virtual std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const = 0;
  virtual std::string describe(const Structure& z) const;

  /// Complete, duplicate-free enumeration of X[n], in rank order.
  const std::vector<Structure>& structures(int n) const;
  std::size_t count(int n) const { return structures(n).size(); }
  virtual std::size_t rank(const Structure& z) const;
  const Structure& unrank(int n, std::size_t r) const { return structures(n).at(r); }

  const OrbitTable& orbit_table(int n) const;
  const YoungOrbits& young_orbits(std::span<const int> block_sizes) const;

  std::optional<Structure> restrict_left(const Structure& z, const Subset& s) const {
    return restrict_to(Side::left, z, s);
  }
  std::optional<Structure> restrict_right(const Structure& z, const Subset& s) const {
    return restrict_to(Side::right, z, s);
  }

 protected:
  virtual std::vector<Structure> enumerate(int n) const = 0;
  void check_arity(const Permutation& sigma, const Structure& z) const;
  void check_subset(const Structure& z, const Subset& s) const;

 private:
  struct ArityData {
    std::vector<Structure> list;
    std::unordered_map<Structure, std::size_t, StructureHash> index;
  };

  const ArityData& arity_data(int n) const;

  mutable std::atomic<bool> allow_heavy_{false};
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, std::unique_ptr<ArityData>> arity_cache_;
  mutable std::map<int, std::unique_ptr<OrbitTable>> orbit_cache_;
  mutable std::map<std::vector<int>, std::unique_ptr<YoungOrbits>> young_cache_;
};

using SpeciesPtr = std::shared_ptr<const Species>;

/// Permutations of the Young subgroup for consecutive blocks of the given sizes.
std::vector<Permutation> young_subgroup(std::span<const int> block_sizes);

/// The permutation induced by sigma between S and sigma(S), both standardized.
Permutation induced_permutation(const Permutation& sigma, const Subset& s);

}  // namespace specoh
