#include "specoh/species.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "specoh/errors.hpp"

namespace specoh {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

std::size_t StructureHash::operator()(const Structure& s) const noexcept {
  std::size_t h = std::hash<int>{}(s.arity);
  for (int v : s.payload) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Species::describe(const Structure& z) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < z.payload.size(); ++i) os << (i ? " " : "") << z.payload[i];
  os << ']';
  return os.str();
}

void Species::check_arity(const Permutation& sigma, const Structure& z) const {
  if (sigma.degree() != z.arity)
    throw InvalidArgument(id() + ": permutation of degree " + std::to_string(sigma.degree()) +
                          " applied to a structure of arity " + std::to_string(z.arity));
}

void Species::check_subset(const Structure& z, const Subset& s) const {
  if (s.ground_size() != z.arity)
    throw InvalidArgument(id() + ": restriction subset " + s.to_string() + " is not a subset of [" +
                          std::to_string(z.arity) + "]");
}

const Species::ArityData& Species::arity_data(int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = arity_cache_.find(n); it != arity_cache_.end()) return *it->second;
  if (n < 0) throw InvalidArgument("negative arity");
  if (n > max_arity())
    throw InvalidArgument(id() + " has no structures recorded above arity " + std::to_string(max_arity()));
  if (heavy(n) && !allow_heavy())
    throw HeavyComputation(id() + " at arity " + std::to_string(n) +
                           " is a heavy computation; enable it explicitly (--allow-heavy)");
  auto data = std::make_unique<ArityData>();
  data->list = enumerate(n);
  data->index.reserve(data->list.size());
  for (std::size_t i = 0; i < data->list.size(); ++i) {
    if (!data->index.emplace(data->list[i], i).second)
      throw ValidationError(id() + ": duplicate structure in enumeration", describe(data->list[i]));
  }
  const auto& ref = *data;
  arity_cache_.emplace(n, std::move(data));
  return ref;
}

const std::vector<Structure>& Species::structures(int n) const { return arity_data(n).list; }

std::size_t Species::rank(const Structure& z) const {
  const auto& data = arity_data(z.arity);
  auto it = data.index.find(z);
  if (it == data.index.end()) throw InvalidArgument(id() + ": unknown structure " + describe(z));
  return it->second;
}

const OrbitTable& Species::orbit_table(int n) const {
  std::lock_guard lock(mutex_);
  if (auto it = orbit_cache_.find(n); it != orbit_cache_.end()) return *it->second;
  const auto& list = structures(n);
  const auto perms = all_permutations(n);
  std::vector<std::int8_t> perm_sign;
  perm_sign.reserve(perms.size());
  for (const auto& p : perms) perm_sign.push_back(static_cast<std::int8_t>(p.sign()));

  auto table = std::make_unique<OrbitTable>();
  table->arity = n;
  table->orbit_of.assign(list.size(), kUnset);
  table->sign_from_representative.assign(list.size(), 0);
  std::vector<std::size_t> members;
  for (std::size_t r = 0; r < list.size(); ++r) {
    if (table->orbit_of[r] != kUnset) continue;
    const auto o = static_cast<std::uint32_t>(table->orbits.size());
    OrbitTable::Orbit orbit;
    members.clear();
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const std::size_t w = rank(relabel(perms[k], list[r]));
      if (table->orbit_of[w] == kUnset) {
        table->orbit_of[w] = o;
        table->sign_from_representative[w] = perm_sign[k];
        members.push_back(w);
      }
      if (w == r && perm_sign[k] < 0) orbit.odd_stabilizer = true;
    }
    std::size_t rep = members.front();
    for (std::size_t m : members)
      if (list[m].payload < list[rep].payload) rep = m;
    const std::int8_t rep_sign = table->sign_from_representative[rep];
    for (std::size_t m : members) table->sign_from_representative[m] = static_cast<std::int8_t>(
        table->sign_from_representative[m] * rep_sign);
    orbit.representative = rep;
    orbit.size = members.size();
    table->orbits.push_back(orbit);
  }
  const auto& ref = *table;
  orbit_cache_.emplace(n, std::move(table));
  return ref;
}

const YoungOrbits& Species::young_orbits(std::span<const int> block_sizes) const {
  std::vector<int> key(block_sizes.begin(), block_sizes.end());
  std::lock_guard lock(mutex_);
  if (auto it = young_cache_.find(key); it != young_cache_.end()) return *it->second;
  int n = 0;
  for (int a : key) n += a;
  const auto& list = structures(n);
  auto table = std::make_unique<YoungOrbits>();
  table->block_sizes = key;
  table->orbit_of.assign(list.size(), kUnset);
  const bool trivial = std::all_of(key.begin(), key.end(), [](int a) { return a <= 1; });
  if (trivial) {
    table->representatives.resize(list.size());
    for (std::size_t r = 0; r < list.size(); ++r) {
      table->representatives[r] = r;
      table->orbit_of[r] = static_cast<std::uint32_t>(r);
    }
  } else {
    const auto perms = young_subgroup(key);
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (table->orbit_of[r] != kUnset) continue;
      const auto o = static_cast<std::uint32_t>(table->representatives.size());
      table->representatives.push_back(r);
      for (const auto& p : perms) table->orbit_of[rank(relabel(p, list[r]))] = o;
    }
  }
  const auto& ref = *table;
  young_cache_.emplace(std::move(key), std::move(table));
  return ref;
}

std::vector<Permutation> young_subgroup(std::span<const int> block_sizes) {
  int n = 0;
  for (int a : block_sizes) n += a;
  std::vector<std::vector<int>> words{std::vector<int>{}};
  int start = 0;
  for (int a : block_sizes) {
    std::vector<std::vector<int>> next;
    for (const auto& p : all_permutations(a)) {
      for (const auto& w : words) {
        auto ext = w;
        for (int v : p.images()) ext.push_back(start + v);
        next.push_back(std::move(ext));
      }
    }
    words = std::move(next);
    start += a;
  }
  std::vector<Permutation> out;
  out.reserve(words.size());
  for (auto& w : words) {
    if (static_cast<int>(w.size()) != n) throw InvalidArgument("young subgroup construction failed");
    out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation induced_permutation(const Permutation& sigma, const Subset& s) {
  const Standardization source(s);
  const Standardization target(sigma.image(s));
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(source.size()));
  for (int k = 1; k <= source.size(); ++k) img.push_back(target(sigma(source.element_at(k))));
  return Permutation(std::move(img));
}

}  // namespace specoh
