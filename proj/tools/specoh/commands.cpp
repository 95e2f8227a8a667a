#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "report.hpp"
#include "specoh/cobar.hpp"
#include "specoh/custom_species.hpp"
#include "specoh/deformations.hpp"
#include "specoh/errors.hpp"
#include "specoh/products.hpp"
#include "specoh/registry.hpp"
#include "specoh/verify.hpp"

namespace specoh::cli {

namespace {

void finish(ordered_json& report, const Stopwatch& clock, const OutputOptions& output) {
  if (output.no_timing) {
    report.erase("timing");
  } else {
    report["timing"]["seconds"] = clock.seconds();
  }
  emit(report, output.out, output.csv);
}

std::vector<std::filesystem::path> species_files() {
  std::vector<std::filesystem::path> files;
  for (const auto& dir : global_registry().directories()) {
    if (!std::filesystem::is_directory(dir)) continue;
    std::vector<std::filesystem::path> here;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.path().extension() == ".json") here.push_back(entry.path());
    std::sort(here.begin(), here.end());
    files.insert(files.end(), here.begin(), here.end());
  }
  return files;
}

Rational parse_rational(const ordered_json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational(v.get<std::string>());
  throw InvalidArgument("cochain values must be integers or strings like \"3/2\"");
}

// Reads {"entries": [{"blocks": [[...], [...]], "structure": [...], "value": v}]}.
Cochain read_cochain_file(const SpeciesPtr& species, int max_arity, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  const auto doc = ordered_json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.contains("entries") || !doc["entries"].is_array())
    throw InvalidArgument(path + ": expected an object with an 'entries' array");
  auto space = CochainSpace::make(species, 2, max_arity, false);
  Cochain alpha(space);
  std::vector<bool> set(space->dimension(), false);
  for (std::size_t k = 0; k < doc["entries"].size(); ++k) {
    const auto& e = doc["entries"][k];
    const std::string where = path + ": entries[" + std::to_string(k) + "]";
    if (!e.contains("blocks") || !e.contains("structure") || !e.contains("value"))
      throw InvalidArgument(where + " needs blocks, structure and value");
    const auto payload = e["structure"].get<std::vector<int>>();
    const auto blocks = e["blocks"].get<std::vector<std::vector<int>>>();
    if (blocks.size() != 2) throw InvalidArgument(where + ".blocks must have two blocks");
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    const Decomposition f(n, {Subset::of(n, blocks[0]), Subset::of(n, blocks[1])});
    const Structure z{n, payload};
    species->rank(z);
    const auto idx = space->locate(f, z);
    const Rational v = parse_rational(e["value"]);
    if (set[*idx] && alpha.values()[*idx] != v) throw InvalidArgument(where + " contradicts an earlier entry");
    set[*idx] = true;
    alpha.values()[*idx] = v;
  }
  return alpha;
}

Cochain named_cocycle(const SpeciesPtr& species, int max_arity, const std::string& name) {
  if (name == "schubert") {
    if (species->id() != "L") throw InvalidArgument("the schubert cocycle is defined on L");
    return schubert_cocycle(species, max_arity);
  }
  if (name == "cardinality-product") {
    const auto kappa = cardinality_cocycle(species, max_arity);
    return cup_cochain(kappa, kappa);
  }
  if (name == "zero") return Cochain(CochainSpace::make(species, 2, max_arity));
  if (std::filesystem::exists(name)) return read_cochain_file(species, max_arity, name);
  throw InvalidArgument("unknown cocycle '" + name + "' (schubert, cardinality-product, zero or a file)");
}

}  // namespace

void configure_registry() {
  auto& reg = global_registry();
  for (const char* dir : {SPECOH_BUNDLED_SPECIES_DIR, SPECOH_INSTALLED_SPECIES_DIR}) {
    std::error_code ec;
    if (std::filesystem::is_directory(dir, ec)) reg.add_directory(dir);
  }
}

int run_cohomology(const CohomologyOptions& o) {
  if (o.method != "koszul" && o.method != "oracle") throw InvalidArgument("method must be koszul or oracle");
  if (o.max_degree < 0) throw InvalidArgument("max degree must be nonnegative");
  Stopwatch clock;
  const auto sp = global_registry().get(o.species);
  sp->set_allow_heavy(o.allow_heavy);
  auto report = make_report("cohomology", sp->id(), o.method);
  std::vector<std::size_t> dims;
  for (int p = 0; p <= o.max_degree; ++p) {
    ordered_json row;
    row["degree"] = p;
    ordered_json reps = ordered_json::array();
    if (o.method == "koszul") {
      const auto h = koszul_cohomology(sp, p);
      row["dimension"] = h.dimension;
      row["complex_dimension"] = h.complex_dimension;
      for (const auto& f : h.representatives) reps.push_back(describe(f, 4));
      dims.push_back(h.dimension);
    } else {
      const int n = o.max_arity > 0 ? o.max_arity : p + 1;
      const auto h = truncated_cohomology(sp, p, n);
      row["dimension"] = h.dimension;
      row["max_arity"] = n;
      for (const auto& c : h.representatives) reps.push_back(describe(c, 4));
      dims.push_back(h.dimension);
    }
    if (reps.size() > 8) reps.erase(reps.begin() + 8, reps.end());
    row["representatives"] = reps;
    report["table"].push_back(row);
  }
  report["dimensions"] = dims;
  finish(report, clock, o.output);
  return 0;
}

int run_verify(const VerifyOptions& o) {
  Stopwatch clock;
  SuiteOptions options;
  options.max_arity = o.max_arity;
  if (o.suite == "koszul-vs-oracle")
    for (const auto& file : species_files()) options.extra_species.push_back(global_registry().add_file(file, false));
  const auto result = run_suite(o.suite, options);
  auto report = make_report("verify", "", o.suite);
  report.erase("species");
  for (const auto& c : result.checks) {
    report["table"].push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) report["witnesses"].push_back({{"check", c.name}, {"witness", c.witness}});
  }
  report["passed"] = result.passed();
  finish(report, clock, o.output);
  return result.passed() ? 0 : 1;
}

int run_cup(const CupOptions& o) {
  if (o.p < 0 || o.q < 0) throw InvalidArgument("degrees must be nonnegative");
  Stopwatch clock;
  const auto sp = global_registry().get(o.species);
  auto report = make_report("cup", sp->id(), "koszul");
  const auto bp = koszul_basis(*sp, o.p);
  const auto bq = koszul_basis(*sp, o.q);
  report["basis_sizes"] = {bp.size(), bq.size(), koszul_dimension(*sp, o.p + o.q)};
  for (std::size_t i = 0; i < bp.size(); ++i)
    for (std::size_t j = 0; j < bq.size(); ++j) {
      const auto prod = cup_koszul(KoszulCochain::basis_element(sp, o.p, i), KoszulCochain::basis_element(sp, o.q, j));
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : prod.coefficients()) coeffs.push_back(to_string(c));
      report["table"].push_back({{"left", i}, {"right", j}, {"product", coeffs}});
    }
  finish(report, clock, o.output);
  return 0;
}

int run_cobar(const CobarOptions& o) {
  Stopwatch clock;
  const auto sp = global_registry().get(o.species);
  const CobarComplex cobar(sp, o.arity);
  auto report = make_report("cobar", sp->id(), "cobar");
  const auto dims = cobar.cohomology_by_blocks();
  for (int k = 0; k <= o.arity; ++k)
    report["table"].push_back({{"blocks", k},
                               {"degree", CobarComplex::degree_of(k, o.arity)},
                               {"words", cobar.words(k).size()},
                               {"dimension", dims[static_cast<std::size_t>(k)]}});
  const bool ok = cobar.differential_squares_to_zero();
  report["differential_squares_to_zero"] = ok;
  if (!ok) report["witnesses"].push_back("d^2 != 0 at arity " + std::to_string(o.arity));
  finish(report, clock, o.output);
  return ok ? 0 : 1;
}

int run_deform(const DeformOptions& o) {
  if (o.order < 1) throw InvalidArgument("order must be at least 1");
  Stopwatch clock;
  const auto sp = global_registry().get(o.species);
  const Cochain delta1 = named_cocycle(sp, o.max_arity, o.cocycle);
  auto report = make_report("deform", sp->id(), "integrate");
  const auto series = integrate(delta1, o.order);
  for (int n = 0; n <= o.order; ++n) {
    const auto check = check_deformation(series, n);
    report["table"].push_back({{"equation", n}, {"holds", check.holds}});
    if (!check.holds) report["witnesses"].push_back({{"equation", n}, {"witness", check.witness}});
  }
  ordered_json terms = ordered_json::array();
  for (int i = 1; i <= series.order(); ++i) terms.push_back(describe(series.term(i), 6));
  report["series"] = terms;
  const Cochain sigma = first_obstruction(series.term(1));
  report["first_obstruction_is_cocycle"] = coboundary(sigma).is_zero();
  report["q_form"] = q_form(series.term(1));
  report["passed"] = report["witnesses"].empty();
  finish(report, clock, o.output);
  return report["witnesses"].empty() ? 0 : 1;
}

int run_species_add(const std::string& file, const OutputOptions& output) {
  Stopwatch clock;
  const auto sp = global_registry().add_file(file, true);
  auto report = make_report("species add", sp->id(), "validate");
  for (int n = 0; n <= sp->max_arity(); ++n) report["table"].push_back({{"arity", n}, {"structures", sp->count(n)}});
  report["cosymmetric"] = sp->cosymmetric();
  report["registry"] = global_registry().directories().front().string();
  finish(report, clock, output);
  return 0;
}

int run_species_export(const SpeciesExportOptions& o) {
  const auto sp = global_registry().get(o.species);
  const std::string text = export_species_json(*sp, o.max_arity, o.name.empty() ? sp->id() : o.name);
  if (o.output.out.empty()) {
    std::printf("%s\n", text.c_str());
  } else {
    std::ofstream out(o.output.out);
    if (!out) throw InvalidArgument("cannot write " + o.output.out);
    out << text << "\n";
  }
  return 0;
}

int run_species_list(const OutputOptions& output) {
  Stopwatch clock;
  auto report = make_report("species list", "", "registry");
  report.erase("species");
  for (const auto& id : Registry::builtin_ids()) report["table"].push_back({{"id", id}, {"source", "builtin"}});
  std::set<std::string> seen;
  for (const auto& file : species_files()) {
    const std::string id = file.stem().string();
    if (!seen.insert(id).second) continue;
    report["table"].push_back({{"id", id}, {"source", file.string()}});
  }
  finish(report, clock, output);
  return 0;
}

}  // namespace specoh::cli
