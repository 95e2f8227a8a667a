#include "specoh/builtin_species.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specoh/errors.hpp"

namespace specoh {

namespace {

// Relabels a word indexed by element: result[sigma(i)] = word[i].
std::vector<int> transport_indexed(const Permutation& sigma, const std::vector<int>& word) {
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    out[static_cast<std::size_t>(sigma(static_cast<int>(i) + 1) - 1)] = word[i];
  return out;
}

std::vector<int> subsequence(const std::vector<int>& word, const Subset& s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int e : s.members()) out.push_back(word[static_cast<std::size_t>(e - 1)]);
  return out;
}

// Renumbers values by first occurrence.
std::vector<int> growth_normalize(const std::vector<int>& word) {
  std::vector<int> out(word.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == word[i]; });
    if (it == seen.end()) {
      seen.emplace_back(word[i], static_cast<int>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

// Renumbers values order-preservingly onto {0, ..., k-1}.
std::vector<int> compress_values(const std::vector<int>& word) {
  std::vector<int> values = word;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word)
    out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()));
  return out;
}

std::string blocks_string(const std::vector<int>& word, bool ordered) {
  int k = word.empty() ? 0 : *std::max_element(word.begin(), word.end()) + 1;
  std::ostringstream os;
  for (int b = 0; b < k; ++b) {
    os << (ordered ? (b ? "|" : "(") : "{");
    bool first = true;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != b) continue;
      if (!first && !ordered) os << ',';
      os << i + 1;
      first = false;
    }
    if (!ordered) os << '}';
  }
  if (ordered) os << (k ? ")" : "()");
  if (!ordered && k == 0) os << "{}";
  return os.str();
}

std::vector<Structure> permutation_words(int n) {
  std::vector<Structure> out;
  for (const auto& p : all_permutations(n)) out.push_back(Structure{n, p.images()});
  return out;
}

}  // namespace

// E

std::vector<Structure> ExponentialSpecies::enumerate(int n) const { return {Structure{n, {}}}; }

Structure ExponentialSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  return z;
}

std::optional<Structure> ExponentialSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  return Structure{s.size(), {}};
}

std::string ExponentialSpecies::describe(const Structure& z) const { return "e_" + std::to_string(z.arity); }

// S^k

SingletonPowerSpecies::SingletonPowerSpecies(int k) : k_(k) {
  if (k < 0) throw InvalidArgument("singleton power must be nonnegative");
}

std::string SingletonPowerSpecies::id() const { return "S" + std::to_string(k_); }

std::vector<Structure> SingletonPowerSpecies::enumerate(int n) const {
  if (n != k_) return {};
  return permutation_words(n);
}

Structure SingletonPowerSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  Structure out{z.arity, {}};
  out.payload.reserve(z.payload.size());
  for (int e : z.payload) out.payload.push_back(sigma(e));
  return out;
}

std::optional<Structure> SingletonPowerSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  if (s.size() != z.arity) return std::nullopt;
  return z;
}

// L

std::vector<Structure> LinearOrderSpecies::enumerate(int n) const { return permutation_words(n); }

Structure LinearOrderSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  Structure out{z.arity, {}};
  out.payload.reserve(z.payload.size());
  for (int e : z.payload) out.payload.push_back(sigma(e));
  return out;
}

std::optional<Structure> LinearOrderSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  const Standardization lambda(s);
  Structure out{s.size(), {}};
  out.payload.reserve(static_cast<std::size_t>(s.size()));
  for (int e : z.payload)
    if (s.contains(e)) out.payload.push_back(lambda(e));
  return out;
}

// P

std::vector<Structure> PartitionSpecies::enumerate(int n) const {
  std::vector<Structure> out;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<int> max_before(static_cast<std::size_t>(n) + 1, -1);
  // Restricted growth strings in lexicographic order.
  auto rec = [&](auto&& self, int pos, int max_value) -> void {
    if (pos == n) {
      out.push_back(Structure{n, word});
      return;
    }
    for (int v = 0; v <= max_value + 1; ++v) {
      word[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, std::max(max_value, v));
    }
  };
  rec(rec, 0, -1);
  return out;
}

Structure PartitionSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  return Structure{z.arity, growth_normalize(transport_indexed(sigma, z.payload))};
}

std::optional<Structure> PartitionSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  return Structure{s.size(), growth_normalize(subsequence(z.payload, s))};
}

std::string PartitionSpecies::describe(const Structure& z) const { return blocks_string(z.payload, false); }

// C

std::vector<Structure> CompositionSpecies::enumerate(int n) const {
  std::vector<Structure> out;
  for (int q = (n == 0 ? 0 : 1); q <= n; ++q)
    for (const auto& f : enumerate_compositions(n, q)) out.push_back(Structure{n, f.block_word()});
  std::sort(out.begin(), out.end());
  return out;
}

Structure CompositionSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  return Structure{z.arity, transport_indexed(sigma, z.payload)};
}

std::optional<Structure> CompositionSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  return Structure{s.size(), compress_values(subsequence(z.payload, s))};
}

std::string CompositionSpecies::describe(const Structure& z) const { return blocks_string(z.payload, true); }

// Gr

namespace {

int pair_index(int n, int i, int j) {
  // Position of (i, j), i < j, in the order (1,2), (1,3), ..., (1,n), (2,3), ...
  return (i - 1) * n - (i - 1) * i / 2 + (j - i) - 1;
}

}  // namespace

std::vector<Structure> GraphSpecies::enumerate(int n) const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Structure> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Structure g{n, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        g.payload.push_back(pairs[k].first);
        g.payload.push_back(pairs[k].second);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

Structure GraphSpecies::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> sorted;
  for (auto [a, b] : edges) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) throw InvalidArgument("invalid graph edge");
    sorted.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Structure g{n, {}};
  for (auto [a, b] : sorted) {
    g.payload.push_back(a);
    g.payload.push_back(b);
  }
  return g;
}

Structure GraphSpecies::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(z.payload.size() / 2);
  for (std::size_t k = 0; k + 1 < z.payload.size(); k += 2) {
    const int a = sigma(z.payload[k]);
    const int b = sigma(z.payload[k + 1]);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  Structure g{z.arity, {}};
  g.payload.reserve(z.payload.size());
  for (auto [a, b] : edges) {
    g.payload.push_back(a);
    g.payload.push_back(b);
  }
  return g;
}

std::optional<Structure> GraphSpecies::restrict_to(Side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  const Standardization lambda(s);
  Structure g{s.size(), {}};
  for (std::size_t k = 0; k + 1 < z.payload.size(); k += 2) {
    if (s.contains(z.payload[k]) && s.contains(z.payload[k + 1])) {
      g.payload.push_back(lambda(z.payload[k]));
      g.payload.push_back(lambda(z.payload[k + 1]));
    }
  }
  return g;  // lambda is monotone, so edge order is preserved
}

std::size_t GraphSpecies::rank(const Structure& z) const {
  std::size_t mask = 0;
  for (std::size_t k = 0; k + 1 < z.payload.size(); k += 2)
    mask |= std::size_t{1} << pair_index(z.arity, z.payload[k], z.payload[k + 1]);
  return mask;
}

std::string GraphSpecies::describe(const Structure& z) const {
  std::ostringstream os;
  os << "graph on " << z.arity << " vertices {";
  for (std::size_t k = 0; k + 1 < z.payload.size(); k += 2)
    os << (k ? " " : "") << z.payload[k] << '-' << z.payload[k + 1];
  os << '}';
  return os.str();
}

// X . Y

CauchyProduct::CauchyProduct(SpeciesPtr x, SpeciesPtr y) : x_(std::move(x)), y_(std::move(y)) {
  if (!x_ || !y_) throw InvalidArgument("Cauchy product of a missing species");
}

std::string CauchyProduct::id() const { return x_->id() + "." + y_->id(); }

int CauchyProduct::max_arity() const {
  const long sum = static_cast<long>(x_->max_arity()) + y_->max_arity();
  return static_cast<int>(std::min<long>(sum, kUnbounded));
}

CauchyProduct::Parts CauchyProduct::split(const Structure& z) {
  const int n = z.arity;
  std::uint64_t first = 0;
  for (int i = 0; i < n; ++i)
    if (z.payload[static_cast<std::size_t>(i)] == 0) first |= std::uint64_t{1} << i;
  const Subset a(n, first);
  const auto len_x = static_cast<std::size_t>(z.payload[static_cast<std::size_t>(n)]);
  const auto begin = z.payload.begin() + n + 1;
  Parts parts{a, a.complement(), Structure{a.size(), std::vector<int>(begin, begin + static_cast<long>(len_x))},
              Structure{n - a.size(), std::vector<int>(begin + static_cast<long>(len_x), z.payload.end())}};
  return parts;
}

Structure CauchyProduct::join(const Subset& first, const Structure& x, const Structure& y) {
  const int n = first.ground_size();
  Structure z{n, {}};
  z.payload.reserve(static_cast<std::size_t>(n) + 1 + x.payload.size() + y.payload.size());
  for (int i = 1; i <= n; ++i) z.payload.push_back(first.contains(i) ? 0 : 1);
  z.payload.push_back(static_cast<int>(x.payload.size()));
  z.payload.insert(z.payload.end(), x.payload.begin(), x.payload.end());
  z.payload.insert(z.payload.end(), y.payload.begin(), y.payload.end());
  return z;
}

std::vector<Structure> CauchyProduct::enumerate(int n) const {
  std::vector<Structure> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  // Indicator words in lexicographic order: element 1 is the most significant.
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t second = 0;
    for (int i = 0; i < n; ++i)
      if ((code >> (n - 1 - i)) & 1U) second |= std::uint64_t{1} << i;
    const Subset b(n, second);
    const Subset a = b.complement();
    if (a.size() > x_->max_arity() || b.size() > y_->max_arity()) continue;
    const auto& xs = x_->structures(a.size());
    const auto& ys = y_->structures(b.size());
    for (const auto& x : xs)
      for (const auto& y : ys) out.push_back(join(a, x, y));
  }
  return out;
}

Structure CauchyProduct::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  const Parts p = split(z);
  return join(sigma.image(p.first), x_->relabel(induced_permutation(sigma, p.first), p.x),
              y_->relabel(induced_permutation(sigma, p.second), p.y));
}

std::optional<Structure> CauchyProduct::restrict_to(Side side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  const Parts p = split(z);
  auto x = x_->restrict_to(side, p.x, Standardization(p.first).apply(p.first & s));
  if (!x) return std::nullopt;
  auto y = y_->restrict_to(side, p.y, Standardization(p.second).apply(p.second & s));
  if (!y) return std::nullopt;
  return join(Standardization(s).apply(p.first & s), *x, *y);
}

std::string CauchyProduct::describe(const Structure& z) const {
  const Parts p = split(z);
  return "(" + p.first.to_string() + ": " + x_->describe(p.x) + " | " + p.second.to_string() + ": " +
         y_->describe(p.y) + ")";
}

// Two-sided product

TwoSidedProduct::TwoSidedProduct(SpeciesPtr m, SpeciesPtr n) : m_(m), n_(n), product_(m, n) {}

std::string TwoSidedProduct::id() const { return "two_sided(" + m_->id() + "," + n_->id() + ")"; }

int TwoSidedProduct::max_arity() const { return product_.max_arity(); }

std::vector<Structure> TwoSidedProduct::enumerate(int n) const { return product_.structures(n); }

Structure TwoSidedProduct::relabel(const Permutation& sigma, const Structure& z) const {
  return product_.relabel(sigma, z);
}

std::optional<Structure> TwoSidedProduct::restrict_to(Side side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  const auto p = CauchyProduct::split(z);
  const Standardization lambda(s);
  if (side == Side::left) {
    if (!p.second.is_subset_of(s)) return std::nullopt;
    auto x = m_->restrict_to(Side::left, p.x, Standardization(p.first).apply(p.first & s));
    if (!x) return std::nullopt;
    return CauchyProduct::join(lambda.apply(p.first & s), *x, p.y);
  }
  if (!p.first.is_subset_of(s)) return std::nullopt;
  auto y = n_->restrict_to(Side::right, p.y, Standardization(p.second).apply(p.second & s));
  if (!y) return std::nullopt;
  return CauchyProduct::join(lambda.apply(p.first), p.x, *y);
}

std::string TwoSidedProduct::describe(const Structure& z) const { return product_.describe(z); }

DirectSum::DirectSum(SpeciesPtr x, SpeciesPtr y) : x_(std::move(x)), y_(std::move(y)) {}

std::string DirectSum::id() const { return x_->id() + "+" + y_->id(); }

Structure DirectSum::tagged(int tag, const Structure& z) {
  Structure out{z.arity, {tag}};
  out.payload.insert(out.payload.end(), z.payload.begin(), z.payload.end());
  return out;
}

Structure DirectSum::untagged(const Structure& z) {
  if (z.payload.empty() || (z.payload[0] != 0 && z.payload[0] != 1))
    throw InvalidArgument("malformed direct sum structure");
  return Structure{z.arity, std::vector<int>(z.payload.begin() + 1, z.payload.end())};
}

const Species& DirectSum::summand(const Structure& z) const { return z.payload.at(0) == 0 ? *x_ : *y_; }

std::vector<Structure> DirectSum::enumerate(int n) const {
  std::vector<Structure> out;
  for (const auto& z : x_->structures(n)) out.push_back(tagged(0, z));
  for (const auto& z : y_->structures(n)) out.push_back(tagged(1, z));
  return out;
}

Structure DirectSum::relabel(const Permutation& sigma, const Structure& z) const {
  check_arity(sigma, z);
  return tagged(z.payload[0], summand(z).relabel(sigma, untagged(z)));
}

std::optional<Structure> DirectSum::restrict_to(Side side, const Structure& z, const Subset& s) const {
  check_subset(z, s);
  auto r = summand(z).restrict_to(side, untagged(z), s);
  if (!r) return std::nullopt;
  return tagged(z.payload[0], *r);
}

std::string DirectSum::describe(const Structure& z) const {
  return (z.payload.at(0) == 0 ? "left " : "right ") + summand(z).describe(untagged(z));
}

}  // namespace specoh
