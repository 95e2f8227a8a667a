#pragma once

#include <string>
#include <vector>

#include "specoh/species.hpp"

namespace specoh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SuiteOptions {
  /// Arity bound; 0 selects the suite default.
  int max_arity = 0;
  /// Extra species for the oracle comparison (custom documents).
  std::vector<SpeciesPtr> extra_species;
};

std::vector<std::string> suite_names();

/// Runs one of: koszul-vs-oracle, coxeter, cobar, cup-relations,
/// deformation, kunneth. Unknown names throw InvalidArgument.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace specoh
