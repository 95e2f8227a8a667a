#pragma once

#include <string>

namespace specoh::cli {

struct OutputOptions {
  std::string out;
  std::string csv;
  bool no_timing = false;
};

struct CohomologyOptions {
  std::string species;
  int max_degree = 4;
  std::string method = "koszul";
  int max_arity = 0;  // oracle truncation bound; 0 means degree + 1
  bool allow_heavy = false;
  OutputOptions output;
};

struct VerifyOptions {
  std::string suite;
  int max_arity = 0;
  OutputOptions output;
};

struct CupOptions {
  std::string species;
  int p = 1;
  int q = 1;
  OutputOptions output;
};

struct CobarOptions {
  std::string species;
  int arity = 3;
  OutputOptions output;
};

struct DeformOptions {
  std::string species;
  std::string cocycle;
  int order = 2;
  int max_arity = 4;
  OutputOptions output;
};

struct SpeciesExportOptions {
  std::string species;
  int max_arity = 4;
  std::string name;
  OutputOptions output;
};

/// Registers the bundled and installed species directories after the
/// user registry directory.
void configure_registry();

// Each command returns the process exit code: 0 on success, 1 when a
// verification fails. Errors are thrown.
int run_cohomology(const CohomologyOptions& o);
int run_verify(const VerifyOptions& o);
int run_cup(const CupOptions& o);
int run_cobar(const CobarOptions& o);
int run_deform(const DeformOptions& o);
int run_species_add(const std::string& file, const OutputOptions& output);
int run_species_export(const SpeciesExportOptions& o);
int run_species_list(const OutputOptions& output);

}  // namespace specoh::cli
