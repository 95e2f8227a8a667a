#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"
#include "specoh/errors.hpp"

namespace {

void add_output(CLI::App* cmd, specoh::cli::OutputOptions& o) {
  cmd->add_option("--out", o.out, "Write the JSON report to this file instead of stdout");
  cmd->add_option("--csv", o.csv, "Also write the report table as CSV");
  cmd->add_flag("--no-timing", o.no_timing, "Omit the timing field so reports are byte-for-byte reproducible");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace specoh::cli;
  CLI::App app{"Cohomology of species with coefficients in the exponential species"};
  app.require_subcommand(1);

  CohomologyOptions coh;
  auto* c = app.add_subcommand("cohomology", "Table of cohomology dimensions with representatives");
  c->add_option("--species", coh.species, "Species id, product expression or .json file")->required();
  c->add_option("--max-degree", coh.max_degree, "Largest cohomological degree")->check(CLI::NonNegativeNumber);
  c->add_option("--method", coh.method, "koszul (small complex) or oracle (truncated cochains)")
      ->check(CLI::IsMember({"koszul", "oracle"}));
  c->add_option("--max-arity", coh.max_arity, "Oracle truncation bound (default degree + 1)");
  c->add_flag("--allow-heavy", coh.allow_heavy, "Allow arities marked heavy (graphs on 7 or more vertices)");
  add_output(c, coh.output);

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", ver.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"koszul-vs-oracle", "coxeter", "cobar", "cup-relations", "deformation", "kunneth"}));
  v->add_option("--max-arity", ver.max_arity, "Arity bound (suite default when omitted)");
  add_output(v, ver.output);

  CupOptions cup;
  auto* u = app.add_subcommand("cup", "Structure constants of the cup product on Koszul bases");
  u->add_option("--species", cup.species, "Species id")->required();
  u->add_option("--p", cup.p, "Degree of the left factor")->required();
  u->add_option("--q", cup.q, "Degree of the right factor")->required();
  add_output(u, cup.output);

  CobarOptions cob;
  auto* b = app.add_subcommand("cobar", "Graded cohomology of the cobar construction at one arity");
  b->add_option("--species", cob.species, "Coalgebra species id")->required();
  b->add_option("--arity", cob.arity, "Arity")->required()->check(CLI::Range(0, 7));
  add_output(b, cob.output);

  DeformOptions def;
  auto* d = app.add_subcommand("deform", "Integrate a 2-cocycle to a weak deformation");
  d->add_option("--species", def.species, "Species id")->required();
  d->add_option("--cocycle", def.cocycle, "schubert, cardinality-product, zero, or a JSON cochain file")->required();
  d->add_option("--order", def.order, "Truncation order m")->check(CLI::PositiveNumber);
  d->add_option("--max-arity", def.max_arity, "Arity bound for all checks")->check(CLI::Range(1, 8));
  add_output(d, def.output);

  std::string add_file;
  OutputOptions add_out;
  SpeciesExportOptions exp;
  OutputOptions list_out;
  auto* s = app.add_subcommand("species", "Manage the species registry");
  s->require_subcommand(1);
  auto* sa = s->add_subcommand("add", "Validate a custom species document and copy it into the registry");
  sa->add_option("file", add_file, "Species document")->required()->check(CLI::ExistingFile);
  add_output(sa, add_out);
  auto* se = s->add_subcommand("export", "Write the tables of a species as a custom species document");
  se->add_option("--species", exp.species, "Species id")->required();
  se->add_option("--max-arity", exp.max_arity, "Largest arity to tabulate")->check(CLI::Range(0, 12));
  se->add_option("--name", exp.name, "Name stored in the document");
  se->add_option("--out", exp.output.out, "Output file (stdout when omitted)");
  auto* sl = s->add_subcommand("list", "List built-in and registered species");
  add_output(sl, list_out);

  CLI11_PARSE(app, argc, argv);

  try {
    configure_registry();
    if (c->parsed()) return run_cohomology(coh);
    if (v->parsed()) return run_verify(ver);
    if (u->parsed()) return run_cup(cup);
    if (b->parsed()) return run_cobar(cob);
    if (d->parsed()) return run_deform(def);
    if (sa->parsed()) return run_species_add(add_file, add_out);
    if (se->parsed()) return run_species_export(exp);
    if (sl->parsed()) return run_species_list(list_out);
  } catch (const specoh::ValidationError& e) {
    std::cerr << error_report(e.kind(), e.what(), e.witness()).dump(2) << "\n";
    return 1;
  } catch (const specoh::Error& e) {
    std::cerr << error_report(e.kind(), e.what(), "").dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_report("internal", e.what(), "").dump(2) << "\n";
    return 2;
  }
  return 2;
}
