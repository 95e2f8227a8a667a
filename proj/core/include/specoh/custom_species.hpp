#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specoh/species.hpp"

namespace specoh {

/// A species given by explicit tables up to a maximal arity.
///
/// Document fields (JSON):
///   name                     identifier used on the command line
///   max_arity                largest arity n covered by the tables
///   cosymmetric              whether left and right restrictions coincide
///   structures[n]            labels of the structures of arity n
///   transposition_action[n][k][s]
///                            index of the image of structure s under the
///                            transposition (k+1 k+2), for k < n-1
///   delete_left[n][k][s], delete_right[n][k][s]
///                            index (in arity n-1) of the restriction of s to
///                            [n] minus {k+1}, relabeled onto [n-1]; null when
///                            the restriction is zero
///
/// Restrictions to an arbitrary subset are composed from single deletions.
/// Loading validates every law eagerly and reports the field path of the
/// first violation together with a witness.
class CustomSpecies final : public Species {
 public:
  struct Tables {
    std::string name;
    int max_arity = 0;
    bool cosymmetric = false;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<std::vector<int>>> transposition;
    std::vector<std::vector<std::vector<std::optional<int>>>> delete_left;
    std::vector<std::vector<std::vector<std::optional<int>>>> delete_right;
  };

  explicit CustomSpecies(Tables tables);

  static std::shared_ptr<CustomSpecies> from_json_text(const std::string& text);
  static std::shared_ptr<CustomSpecies> from_file(const std::filesystem::path& path);

  std::string id() const override { return tables_.name; }
  bool cosymmetric() const override { return tables_.cosymmetric; }
  int max_arity() const override { return tables_.max_arity; }
  Structure relabel(const Permutation& sigma, const Structure& z) const override;
  std::optional<Structure> restrict_to(Side side, const Structure& z, const Subset& s) const override;
  std::string describe(const Structure& z) const override;

  const Tables& tables() const { return tables_; }

 protected:
  std::vector<Structure> enumerate(int n) const override;

 private:
  void validate() const;
  std::optional<int> delete_one(Side side, int n, int element, int index) const;
  int apply_transposition(int n, int k, int index) const;

  Tables tables_;
};

/// Serializes the tables of any species up to `max_arity` in the custom
/// species document format.
std::string export_species_json(const Species& species, int max_arity, const std::string& name);

}  // namespace specoh
