#pragma once

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

#include "specoh/cochains.hpp"
#include "specoh/koszul.hpp"

namespace specoh::cli {

using nlohmann::ordered_json;

/// Wall clock since construction, in seconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Report skeleton: species, method, table, witnesses, timing.
ordered_json make_report(const std::string& command, const std::string& species, const std::string& method);

/// Nonzero coordinates of a Koszul cochain as "coefficient * structure".
ordered_json describe(const KoszulCochain& f, std::size_t limit = 8);
/// Nonzero values of a cochain on its basis representatives.
ordered_json describe(const Cochain& alpha, std::size_t limit = 8);

/// Writes the report to `path` (or stdout when empty) and mirrors the table
/// as CSV when `csv_path` is set.
void emit(const ordered_json& report, const std::string& path, const std::string& csv_path);

ordered_json error_report(const std::string& kind, const std::string& message, const std::string& witness);

}  // namespace specoh::cli
