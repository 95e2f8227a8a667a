#include "report.hpp"

#include <fstream>
#include <iostream>

#include "specoh/errors.hpp"

namespace specoh::cli {

ordered_json make_report(const std::string& command, const std::string& species, const std::string& method) {
  ordered_json r;
  r["command"] = command;
  r["species"] = species;
  r["method"] = method;
  r["table"] = ordered_json::array();
  r["witnesses"] = ordered_json::array();
  r["timing"] = ordered_json::object();
  return r;
}

ordered_json describe(const KoszulCochain& f, std::size_t limit) {
  ordered_json terms = ordered_json::array();
  const auto& sp = *f.species();
  const auto& table = sp.orbit_table(f.degree());
  for (std::size_t k = 0; k < f.coefficients().size() && terms.size() < limit; ++k) {
    const Rational& c = f.coefficients()[k];
    if (c.is_zero()) continue;
    terms.push_back(to_string(c) + " * " +
                    sp.describe(sp.unrank(f.degree(), table.orbits[f.basis().orbits[k]].representative)));
  }
  return terms;
}

ordered_json describe(const Cochain& alpha, std::size_t limit) {
  ordered_json terms = ordered_json::array();
  const auto& space = *alpha.space();
  for (std::size_t k = 0; k < space.dimension() && terms.size() < limit; ++k) {
    const Rational& c = alpha.values()[k];
    if (c.is_zero()) continue;
    const auto [f, z] = space.element(k);
    terms.push_back(to_string(c) + " at " + f.to_string() + " on " + space.species().describe(z));
  }
  return terms;
}

namespace {

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() || v.is_object()) {
    std::string s = v.dump();
    for (auto& ch : s)
      if (ch == ',') ch = ';';
    return s;
  }
  return v.dump();
}

}  // namespace

void emit(const ordered_json& report, const std::string& path, const std::string& csv_path) {
  if (path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << report.dump(2) << "\n";
  }
  if (csv_path.empty() || report["table"].empty()) return;
  std::ofstream csv(csv_path);
  if (!csv) throw InvalidArgument("cannot write " + csv_path);
  const auto& first = report["table"].front();
  bool head = true;
  for (const auto& [key, _] : first.items()) {
    csv << (head ? "" : ",") << key;
    head = false;
  }
  csv << "\n";
  for (const auto& row : report["table"]) {
    head = true;
    for (const auto& [key, value] : row.items()) {
      csv << (head ? "" : ",") << csv_cell(value);
      head = false;
    }
    csv << "\n";
  }
}

ordered_json error_report(const std::string& kind, const std::string& message, const std::string& witness) {
  ordered_json r;
  r["error"] = {{"kind", kind}, {"message", message}};
  if (!witness.empty()) r["error"]["witness"] = witness;
  return r;
}

}  // namespace specoh::cli
