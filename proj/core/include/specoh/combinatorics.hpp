#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace specoh {

/// Largest ground set supported by the bitmask representation of subsets.
inline constexpr int kMaxGroundSize = 62;

/// A subset of the ground set {1, ..., n}.
///
/// The ground size is always carried along so that complements are well
/// defined. Members iterate in ascending order.
class Subset {
 public:
  Subset() = default;
  Subset(int ground_size, std::uint64_t mask);

  static Subset empty(int ground_size) { return Subset(ground_size, 0); }
  static Subset full(int ground_size);
  static Subset of(int ground_size, std::span<const int> members);
  static Subset of(int ground_size, std::initializer_list<int> members);

  int ground_size() const { return ground_size_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  bool contains(int element) const;

  std::vector<int> members() const;
  Subset complement() const;

  bool is_disjoint_from(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset without(int element) const;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int ground_size_ = 0;
  std::uint64_t mask_ = 0;
};

/// A permutation of {1, ..., n}, stored by its images.
///
/// Composition convention, used everywhere: (s * t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;

  Subset image(const Subset& s) const;

  Permutation operator*(const Permutation& rhs) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// All permutations of degree n in lexicographic order of their image words.
std::vector<Permutation> all_permutations(int n);

/// An ordered tuple of pairwise disjoint, possibly empty blocks covering [n].
/// A composition is a decomposition all of whose blocks are nonempty.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(int ground_size, std::vector<Subset> blocks);

  /// Builds the decomposition whose element i lies in block word[i-1].
  static Decomposition from_block_word(int length, std::span<const int> word);
  /// Consecutive blocks {1..a1}, {a1+1..a1+a2}, ...
  static Decomposition standard(std::span<const int> block_sizes);

  int ground_size() const { return ground_size_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  bool is_composition() const;
  std::vector<int> block_sizes() const;
  std::vector<int> block_word() const;

  Decomposition relabeled(const Permutation& sigma) const;
  /// Transports every block through the order-preserving map of `support`
  /// onto {1, ..., |support|}. Blocks must lie inside `support`.
  Decomposition standardized_within(const Subset& support) const;
  Subset union_of(int first, int last) const;

  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  int ground_size_ = 0;
  std::vector<Subset> blocks_;
};

/// All q^n decompositions of [n] into q blocks, ordered lexicographically by
/// the block-index word (block of 1, block of 2, ...).
std::vector<Decomposition> enumerate_decompositions(int n, int q);

/// All compositions of [n] into exactly q nonempty blocks, in the same order.
std::vector<Decomposition> enumerate_compositions(int n, int q);

/// Number of pairs (s, t) in S x T with s < t.
int schubert(const Subset& s, const Subset& t);

/// Order-preserving bijection from a subset S onto {1, ..., |S|}.
class Standardization {
 public:
  explicit Standardization(const Subset& support);

  int size() const { return static_cast<int>(members_.size()); }
  const Subset& support() const { return support_; }
  int operator()(int element) const;
  int element_at(int rank) const { return members_[static_cast<std::size_t>(rank - 1)]; }

  Subset apply(const Subset& inside) const;
  /// A permutation of S given by images[k] = sigma(k-th smallest member).
  Permutation apply(std::span<const int> images) const;

 private:
  Subset support_;
  std::vector<int> members_;
  std::vector<int> rank_of_;
};

/// The permutation sending S monotonically onto {1..p} and T monotonically
/// onto {p+1..p+q}, where (S, T) is a decomposition of [p+q].
Permutation monotone_pair_bijection(const Subset& s, const Subset& t);

/// (-1) raised to the number of pairs (s, t) in S x T with s > t. This equals
/// the sign of monotone_pair_bijection(S, T) and governs every product sign.
int crossing_sign(const Subset& s, const Subset& t);

/// A (p, q)-shuffle, stored as the concatenated permutation whose first p
/// values form S and whose last q values form T.
struct Shuffle {
  int p = 0;
  Permutation concatenated;

  Subset first_part() const;
  Subset second_part() const;
  Permutation first() const;   // sigma^1 standardized to degree p
  Permutation second() const;  // sigma^2 standardized to degree q
};

std::vector<Shuffle> enumerate_shuffles(int p, int q);

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

}  // namespace specoh
