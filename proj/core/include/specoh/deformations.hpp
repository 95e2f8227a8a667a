#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specoh/cochains.hpp"

namespace specoh {

/// The four degree 3 cochains built from two 2-cochains:
///   (alpha *10 beta)(R, S, T)(z) = alpha(R, ST)(z) beta(S, T)(z // R^c)
///   (alpha *01 beta)(R, S, T)(z) = alpha(RS, T)(z) beta(R, S)(z \\ T^c)
///   alpha * beta = *10 - *01,  {alpha, beta} = alpha * beta - beta * alpha.
struct StarProducts {
  Cochain star_10;
  Cochain star_01;
  Cochain star;
  Cochain bracket;
};

StarProducts star_products(const Cochain& alpha, const Cochain& beta);

/// sigma_1 = Delta_1 * Delta_1.
Cochain first_obstruction(const Cochain& delta1);

/// Truncated coefficient series Delta_0 = 1, Delta_1, ..., Delta_m of a weak
/// deformation; all Delta_i with i >= 1 share one normalized degree 2 space.
class DeformationSeries {
 public:
  explicit DeformationSeries(std::vector<Cochain> terms);

  const SpeciesPtr& species() const { return terms_.front().space()->species_ptr(); }
  int order() const { return static_cast<int>(terms_.size()); }
  int max_arity() const { return terms_.front().space()->max_arity(); }
  const Cochain& term(int i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }

  /// Delta_i(S, T)(z), with Delta_0 identically 1.
  Rational coefficient(int i, const Decomposition& st, const Structure& z) const;

 private:
  std::vector<Cochain> terms_;
};

struct DeformationCheck {
  bool holds = true;
  std::string witness;  // first (R, S, T, z) violating the equation
  Rational residual{0};
};

/// Left side of (delta_n) at (R, S, T, z):
///   sum_{i+j=n} Delta_i(RS, T)(z) Delta_j(R, S)(z \\ T^c)
///             - Delta_i(R, ST)(z) Delta_j(S, T)(z // R^c).
Rational deformation_residual(const DeformationSeries& series, int n, const Decomposition& rst, const Structure& z);

/// Evaluates (delta_n) on every decomposition (R, S, T), empty blocks allowed,
/// of every arity up to the bound. The equation is equivariant, so one
/// standard decomposition per block-size triple and one structure per Young
/// orbit suffice.
DeformationCheck check_deformation(const DeformationSeries& series, int n);

/// Delta_i = Delta_1^i / i! pointwise. Throws ValidationError with an
/// (R, S, T, z) witness unless Delta_1 is a normalized 2-cocycle, and checks
/// (delta_n) for n <= order before returning.
DeformationSeries integrate(const Cochain& delta1, int order);

/// Whether the deformed coproduct stays counital: every component with an
/// empty block must vanish. Returns a witness (S, T, z) otherwise. Meant for
/// cochains in an unnormalized space.
std::optional<std::string> counit_violation(const Cochain& delta);

/// Pretty-prints Delta_q(S, T)(z) = q^{Delta_1(S, T)(z)}, q = e^t, one line per
/// basis representative with a nonzero exponent.
std::string q_form(const Cochain& delta1);

}  // namespace specoh
