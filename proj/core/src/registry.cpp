#include "specoh/registry.hpp"

#include <cstdlib>
#include <fstream>

#include "specoh/builtin_species.hpp"
#include "specoh/custom_species.hpp"
#include "specoh/errors.hpp"

namespace specoh {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// First occurrence of `op` outside parentheses.
std::size_t top_level(const std::string& id, char op) {
  int depth = 0;
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (id[i] == '(') ++depth;
    if (id[i] == ')') --depth;
    if (id[i] == op && depth == 0) return i;
  }
  return std::string::npos;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Registry::Registry() { directories_.push_back(default_directory()); }

std::filesystem::path Registry::default_directory() {
  if (const char* env = std::getenv("SPECIES_COHOMOLOGY_REGISTRY"); env && *env) return env;
  return "species.d";
}

void Registry::add_directory(std::filesystem::path dir) {
  std::lock_guard lock(mutex_);
  directories_.push_back(std::move(dir));
}

std::vector<std::string> Registry::builtin_ids() { return {"E", "L", "P", "C", "Gr", "S0", "S1", "S2", "S3", "S4", "S5"}; }

SpeciesPtr Registry::get(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(id); it != cache_.end()) return it->second;
  SpeciesPtr sp = resolve(id);
  cache_.emplace(id, sp);
  return sp;
}

void Registry::add(SpeciesPtr species) {
  std::lock_guard lock(mutex_);
  cache_[species->id()] = std::move(species);
}

SpeciesPtr Registry::add_file(const std::filesystem::path& file, bool persist) {
  auto sp = CustomSpecies::from_file(file);
  std::lock_guard lock(mutex_);
  if (persist) {
    const auto& dir = directories_.front();
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(file, dir / (sp->id() + ".json"), std::filesystem::copy_options::overwrite_existing);
  }
  cache_[sp->id()] = sp;
  return sp;
}

SpeciesPtr Registry::resolve(const std::string& id) {
  if (id.empty()) throw UnknownSpecies(id);
  if (ends_with(id, ".json")) {
    auto sp = CustomSpecies::from_file(id);
    cache_[sp->id()] = sp;
    return sp;
  }
  if (const auto plus = top_level(id, '+'); plus != std::string::npos)
    return std::make_shared<DirectSum>(get(id.substr(0, plus)), get(id.substr(plus + 1)));
  if (const auto dot = top_level(id, '.'); dot != std::string::npos)
    return std::make_shared<CauchyProduct>(get(id.substr(0, dot)), get(id.substr(dot + 1)));
  if (id.rfind("two_sided(", 0) == 0 && id.back() == ')') {
    const std::string inner = id.substr(10, id.size() - 11);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0)
        return std::make_shared<TwoSidedProduct>(get(inner.substr(0, i)), get(inner.substr(i + 1)));
    }
    throw UnknownSpecies(id);
  }
  if (id == "E") return std::make_shared<ExponentialSpecies>();
  if (id == "L") return std::make_shared<LinearOrderSpecies>();
  if (id == "P") return std::make_shared<PartitionSpecies>();
  if (id == "C") return std::make_shared<CompositionSpecies>();
  if (id == "Gr") return std::make_shared<GraphSpecies>();
  if (id == "1") return get("S0");
  if (id == "S") return get("S1");
  if (id.size() >= 2 && id[0] == 'S') {
    std::string digits = id.substr(1);
    if (!digits.empty() && digits[0] == '^') digits = digits.substr(1);
    if (all_digits(digits) && digits.size() <= 2) {
      const int k = std::stoi(digits);
      if ("S" + std::to_string(k) != id) return get("S" + std::to_string(k));
      return std::make_shared<SingletonPowerSpecies>(k);
    }
  }
  for (const auto& dir : directories_) {
    const auto file = dir / (id + ".json");
    if (std::filesystem::exists(file)) {
      auto sp = CustomSpecies::from_file(file);
      if (sp->id() != id)
        throw InvalidArgument("registry file " + file.string() + " declares name '" + sp->id() + "'");
      return sp;
    }
  }
  throw UnknownSpecies(id);
}

Registry& global_registry() {
  static Registry registry;
  return registry;
}

}  // namespace specoh
