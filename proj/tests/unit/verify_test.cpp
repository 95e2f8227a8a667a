#include <gtest/gtest.h>

#include "specoh/errors.hpp"
#include "specoh/registry.hpp"
#include "specoh/verify.hpp"

using namespace specoh;

TEST(Verify, EverySuitePasses) {
  for (const auto& name : suite_names()) {
    SuiteOptions options;
    if (name == "koszul-vs-oracle") options.max_arity = 4;
    const auto report = run_suite(name, options);
    EXPECT_EQ(report.suite, name);
    EXPECT_FALSE(report.checks.empty()) << name;
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail << " " << c.witness;
  }
}

TEST(Verify, ExtraSpeciesJoinTheOracleComparison) {
  SuiteOptions options;
  options.max_arity = 3;
  options.extra_species.push_back(global_registry().get(std::string(SPECOH_TEST_DATA_DIR) + "/species/left_points.json"));
  const auto report = run_suite("koszul-vs-oracle", options);
  EXPECT_TRUE(report.passed());
  bool seen = false;
  for (const auto& c : report.checks) seen = seen || c.name.rfind("left_points", 0) == 0;
  EXPECT_TRUE(seen);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("no-such-suite"), InvalidArgument); }
