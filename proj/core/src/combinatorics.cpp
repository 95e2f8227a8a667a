#include "specoh/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specoh {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void require_same_ground(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("subsets live on different ground sets");
}

}  // namespace

Subset::Subset(int ground_size, std::uint64_t mask) : ground_size_(ground_size), mask_(mask) {
  if (ground_size < 0 || ground_size > kMaxGroundSize)
    throw std::invalid_argument("ground size out of range: " + std::to_string(ground_size));
  if ((mask & ~low_mask(ground_size)) != 0)
    throw std::invalid_argument("subset mask has members outside the ground set");
}

Subset Subset::full(int ground_size) { return Subset(ground_size, low_mask(ground_size)); }

Subset Subset::of(int ground_size, std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int m : members) {
    if (m < 1 || m > ground_size)
      throw std::invalid_argument("element " + std::to_string(m) + " outside [" +
                                  std::to_string(ground_size) + "]");
    mask |= std::uint64_t{1} << (m - 1);
  }
  return Subset(ground_size, mask);
}

Subset Subset::of(int ground_size, std::initializer_list<int> members) {
  return of(ground_size, std::span<const int>(members.begin(), members.size()));
}

int Subset::size() const { return std::popcount(mask_); }

bool Subset::contains(int element) const {
  return element >= 1 && element <= ground_size_ && ((mask_ >> (element - 1)) & 1U);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Subset Subset::complement() const { return Subset(ground_size_, low_mask(ground_size_) & ~mask_); }

bool Subset::is_disjoint_from(const Subset& other) const {
  require_same_ground(*this, other);
  return (mask_ & other.mask_) == 0;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(*this, other);
  return (mask_ & ~other.mask_) == 0;
}

Subset Subset::operator|(const Subset& other) const {
  require_same_ground(*this, other);
  return Subset(ground_size_, mask_ | other.mask_);
}

Subset Subset::operator&(const Subset& other) const {
  require_same_ground(*this, other);
  return Subset(ground_size_, mask_ & other.mask_);
}

Subset Subset::without(int element) const {
  if (element < 1 || element > ground_size_) return *this;
  return Subset(ground_size_, mask_ & ~(std::uint64_t{1} << (element - 1)));
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int m : members()) {
    if (!first) os << ',';
    os << m;
    first = false;
  }
  os << '}';
  return os.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation image word");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  auto p = identity(degree);
  std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Subset Permutation::image(const Subset& s) const {
  if (s.ground_size() != degree()) throw std::invalid_argument("permutation degree mismatch");
  std::uint64_t mask = 0;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1)
    mask |= std::uint64_t{1} << (images_[static_cast<std::size_t>(std::countr_zero(m))] - 1);
  return Subset(degree(), mask);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  os << ']';
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Decomposition::Decomposition(int ground_size, std::vector<Subset> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  std::uint64_t seen = 0;
  for (const auto& b : blocks_) {
    if (b.ground_size() != ground_size) throw std::invalid_argument("block on wrong ground set");
    if (seen & b.mask()) throw std::invalid_argument("blocks of a decomposition must be disjoint");
    seen |= b.mask();
  }
  if (seen != low_mask(ground_size))
    throw std::invalid_argument("blocks of a decomposition must cover the ground set");
}

Decomposition Decomposition::from_block_word(int length, std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(length), 0);
  for (int i = 0; i < n; ++i) {
    int b = word[static_cast<std::size_t>(i)];
    if (b < 0 || b >= length) throw std::invalid_argument("block index out of range");
    masks[static_cast<std::size_t>(b)] |= std::uint64_t{1} << i;
  }
  std::vector<Subset> blocks;
  blocks.reserve(masks.size());
  for (auto m : masks) blocks.emplace_back(n, m);
  return Decomposition(n, std::move(blocks));
}

Decomposition Decomposition::standard(std::span<const int> block_sizes) {
  int n = 0;
  for (int a : block_sizes) n += a;
  std::vector<Subset> blocks;
  int start = 0;
  for (int a : block_sizes) {
    blocks.emplace_back(n, low_mask(a) << start);
    start += a;
  }
  return Decomposition(n, std::move(blocks));
}

bool Decomposition::is_composition() const {
  return std::none_of(blocks_.begin(), blocks_.end(), [](const Subset& b) { return b.is_empty(); });
}

std::vector<int> Decomposition::block_sizes() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.size());
  return out;
}

std::vector<int> Decomposition::block_word() const {
  std::vector<int> word(static_cast<std::size_t>(ground_size_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int m : blocks_[b].members()) word[static_cast<std::size_t>(m - 1)] = static_cast<int>(b);
  return word;
}

Decomposition Decomposition::relabeled(const Permutation& sigma) const {
  std::vector<Subset> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(sigma.image(b));
  return Decomposition(ground_size_, std::move(blocks));
}

Decomposition Decomposition::standardized_within(const Subset& support) const {
  Standardization lambda(support);
  std::vector<Subset> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(lambda.apply(b));
  return Decomposition(lambda.size(), std::move(blocks));
}

Subset Decomposition::union_of(int first, int last) const {
  Subset u = Subset::empty(ground_size_);
  for (int i = first; i <= last; ++i) u = u | block(i);
  return u;
}

std::string Decomposition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "|" : "") + blocks_[i].to_string();
  return s + ")";
}

std::vector<Decomposition> enumerate_decompositions(int n, int q) {
  std::vector<Decomposition> out;
  if (q == 0) {
    if (n == 0) out.emplace_back(0, std::vector<Subset>{});
    return out;
  }
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(Decomposition::from_block_word(q, word));
    int i = n - 1;
    while (i >= 0 && word[static_cast<std::size_t>(i)] == q - 1) word[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++word[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

void compositions_rec(int n, int q, int pos, std::vector<int>& word, std::vector<int>& counts,
                      int empty_blocks, std::vector<Decomposition>& out) {
  if (n - pos < empty_blocks) return;
  if (pos == n) {
    out.push_back(Decomposition::from_block_word(q, word));
    return;
  }
  for (int b = 0; b < q; ++b) {
    auto& c = counts[static_cast<std::size_t>(b)];
    word[static_cast<std::size_t>(pos)] = b;
    ++c;
    compositions_rec(n, q, pos + 1, word, counts, empty_blocks - (c == 1 ? 1 : 0), out);
    --c;
  }
}

}  // namespace

std::vector<Decomposition> enumerate_compositions(int n, int q) {
  std::vector<Decomposition> out;
  if (q > n) return out;
  if (q == 0) {
    if (n == 0) out.emplace_back(0, std::vector<Subset>{});
    return out;
  }
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<int> counts(static_cast<std::size_t>(q), 0);
  compositions_rec(n, q, 0, word, counts, q, out);
  return out;
}

int schubert(const Subset& s, const Subset& t) {
  if (!s.is_disjoint_from(t)) throw std::invalid_argument("schubert statistic needs disjoint subsets");
  int count = 0;
  for (int a : s.members())
    count += std::popcount(t.mask() >> a);  // members of T strictly above a
  return count;
}

Standardization::Standardization(const Subset& support)
    : support_(support), members_(support.members()),
      rank_of_(static_cast<std::size_t>(support.ground_size()) + 1, 0) {
  for (std::size_t k = 0; k < members_.size(); ++k)
    rank_of_[static_cast<std::size_t>(members_[k])] = static_cast<int>(k) + 1;
}

int Standardization::operator()(int element) const {
  if (!support_.contains(element))
    throw std::invalid_argument("element " + std::to_string(element) + " not in " + support_.to_string());
  return rank_of_[static_cast<std::size_t>(element)];
}

Subset Standardization::apply(const Subset& inside) const {
  if (!inside.is_subset_of(support_)) throw std::invalid_argument("subset escapes standardization support");
  std::uint64_t mask = 0;
  for (int m : inside.members()) mask |= std::uint64_t{1} << (rank_of_[static_cast<std::size_t>(m)] - 1);
  return Subset(size(), mask);
}

Permutation Standardization::apply(std::span<const int> images) const {
  if (static_cast<int>(images.size()) != size()) throw std::invalid_argument("wrong number of images");
  std::vector<int> img;
  img.reserve(images.size());
  for (int v : images) img.push_back((*this)(v));
  return Permutation(std::move(img));
}

Permutation monotone_pair_bijection(const Subset& s, const Subset& t) {
  if (!s.is_disjoint_from(t)) throw std::invalid_argument("monotone pair bijection needs disjoint subsets");
  if ((s | t) != Subset::full(s.ground_size()))
    throw std::invalid_argument("monotone pair bijection needs a decomposition of the ground set");
  std::vector<int> img(static_cast<std::size_t>(s.ground_size()));
  int next = 1;
  for (int a : s.members()) img[static_cast<std::size_t>(a - 1)] = next++;
  for (int b : t.members()) img[static_cast<std::size_t>(b - 1)] = next++;
  return Permutation(std::move(img));
}

int crossing_sign(const Subset& s, const Subset& t) { return schubert(t, s) % 2 == 0 ? 1 : -1; }

Subset Shuffle::first_part() const {
  const auto& img = concatenated.images();
  return Subset::of(concatenated.degree(), std::span<const int>(img.data(), static_cast<std::size_t>(p)));
}

Subset Shuffle::second_part() const { return first_part().complement(); }

Permutation Shuffle::first() const {
  const auto& img = concatenated.images();
  return Standardization(first_part()).apply(std::span<const int>(img.data(), static_cast<std::size_t>(p)));
}

Permutation Shuffle::second() const {
  const auto& img = concatenated.images();
  return Standardization(second_part())
      .apply(std::span<const int>(img.data() + p, img.size() - static_cast<std::size_t>(p)));
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
  std::vector<Shuffle> out;
  for (auto& perm : all_permutations(p + q)) out.push_back(Shuffle{p, std::move(perm)});
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace specoh
