#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "specoh/species.hpp"

namespace specoh {

/// Resolves species identifiers.
///
/// Built-in ids: E, L, P, C, Gr, S<k> (singleton powers, S = S1, 1 = S0).
/// "X+Y" is the direct sum, "X.Y" the Cauchy product (both right
/// associative, "." binding tighter) and "two_sided(X,Y)" the two-sided
/// product. Other names are looked up among species added at run
/// time and then as <directory>/<name>.json in the registry directories. A
/// path ending in .json is loaded directly.
///
/// The registry is append-only; resolved species are cached and immutable.
class Registry {
 public:
  Registry();

  /// Directory from SPECIES_COHOMOLOGY_REGISTRY, default ./species.d
  static std::filesystem::path default_directory();

  void add_directory(std::filesystem::path dir);
  const std::vector<std::filesystem::path>& directories() const { return directories_; }

  SpeciesPtr get(const std::string& id);
  /// Registers an already constructed species under its id.
  void add(SpeciesPtr species);
  /// Validates a custom species document and registers it. When `persist` is
  /// set the document is copied into the first registry directory.
  SpeciesPtr add_file(const std::filesystem::path& file, bool persist);

  static std::vector<std::string> builtin_ids();

 private:
  SpeciesPtr resolve(const std::string& id);

  std::recursive_mutex mutex_;
  std::map<std::string, SpeciesPtr> cache_;
  std::vector<std::filesystem::path> directories_;
};

/// Process-wide registry used by the command line front end.
Registry& global_registry();

}  // namespace specoh
