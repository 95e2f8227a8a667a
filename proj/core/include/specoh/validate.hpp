#pragma once

#include <string>
#include <vector>

#include "specoh/species.hpp"

namespace specoh {

struct LawViolation {
  std::string law;
  std::string witness;  // (sigma, z, S) or similar, human readable
};

/// Exhaustively checks the bicomodule laws of `species` on arities
/// 0..max_arity: functoriality of relabeling, counit, coassociativity of both
/// restrictions, bicomodule compatibility (for S union T = I), equivariance of
/// restriction, and cosymmetry when claimed. Stops at the first violation.
std::vector<LawViolation> check_bicomodule_laws(const Species& species, int max_arity);

/// Default validation bound: 6, or 5 for species with heavy arities nearby.
int default_validation_arity(const Species& species);

}  // namespace specoh
