#include <gtest/gtest.h>

#include <filesystem>

#include "specoh/builtin_species.hpp"
#include "specoh/errors.hpp"
#include "specoh/registry.hpp"

using namespace specoh;

namespace {

const std::string kDataDir = SPECOH_TEST_DATA_DIR;

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("specoh_registry_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Registry, ResolvesBuiltinsAndExpressions) {
  Registry reg;
  EXPECT_EQ(reg.get("E")->id(), "E");
  EXPECT_EQ(reg.get("S")->id(), "S1");
  EXPECT_EQ(reg.get("1")->id(), "S0");
  EXPECT_EQ(reg.get("S^3")->id(), "S3");
  EXPECT_EQ(reg.get("S.L")->id(), "S1.L");
  EXPECT_EQ(reg.get("S.L.E")->id(), "S1.L.E");
  EXPECT_EQ(reg.get("two_sided(E,L.E)")->id(), "two_sided(E,L.E)");
  EXPECT_EQ(reg.get("L+E.E")->id(), "L+E.E");
  EXPECT_EQ(reg.get("L+E.E")->count(2), 2u + 4u);
  EXPECT_EQ(reg.get("E"), reg.get("E"));
}

TEST(Registry, UnknownNamesThrow) {
  Registry reg;
  EXPECT_THROW(reg.get("Nope"), UnknownSpecies);
  EXPECT_THROW(reg.get(""), UnknownSpecies);
  EXPECT_THROW(reg.get("two_sided(E)"), UnknownSpecies);
}

TEST(Registry, FindsDocumentsInDirectories) {
  Registry reg;
  reg.add_directory(kDataDir + "/species");
  const auto sp = reg.get("left_points");
  EXPECT_EQ(sp->id(), "left_points");
  EXPECT_EQ(reg.get("left_points.L")->id(), "left_points.L");
}

TEST(Registry, AddFilePersistsIntoTheFirstDirectory) {
  const auto dir = temp_dir("persist");
  setenv("SPECIES_COHOMOLOGY_REGISTRY", dir.c_str(), 1);
  Registry reg;
  unsetenv("SPECIES_COHOMOLOGY_REGISTRY");
  EXPECT_EQ(reg.directories().front(), dir);
  reg.add_file(kDataDir + "/species/left_points.json", true);
  EXPECT_TRUE(std::filesystem::exists(dir / "left_points.json"));
  Registry fresh;
  fresh.add_directory(dir);
  EXPECT_EQ(fresh.get("left_points")->count(3), 1u);
  std::filesystem::remove_all(dir);
}

TEST(Registry, LoadsJsonPathsDirectly) {
  Registry reg;
  const auto sp = reg.get(kDataDir + "/species/two_sided_E_E.json");
  EXPECT_EQ(sp->id(), "two_sided_E_E");
}
