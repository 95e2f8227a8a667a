#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "specoh/cochains.hpp"
#include "specoh/linalg.hpp"
#include "specoh/species.hpp"

namespace specoh {

/// Basis of K^p(X) = Hom_{S_p}(X[p], sgn_p): one functional per orbit of
/// X[p] without an odd stabilizer, equal to sign(sigma) on sigma . rep.
struct KoszulBasis {
  int degree = 0;
  std::vector<std::size_t> orbits;            // orbit indices in the orbit table
  std::vector<std::ptrdiff_t> position_of;    // orbit index -> basis position or -1
  std::size_t size() const { return orbits.size(); }
};

KoszulBasis koszul_basis(const Species& species, int p);
std::size_t koszul_dimension(const Species& species, int p);

/// An element of K^p(X), stored by its values on the basis representatives.
class KoszulCochain {
 public:
  KoszulCochain(SpeciesPtr species, int degree);
  KoszulCochain(SpeciesPtr species, int degree, Vector coefficients);

  /// Samples f on the representatives; f must be equivariant into sgn_p.
  static KoszulCochain from_function(SpeciesPtr species, int degree,
                                     const std::function<Rational(const Structure&)>& f);
  /// The basis functional dual to representative k.
  static KoszulCochain basis_element(SpeciesPtr species, int degree, std::size_t k);

  const SpeciesPtr& species() const { return species_; }
  int degree() const { return degree_; }
  const KoszulBasis& basis() const { return *basis_; }
  const Vector& coefficients() const { return coefficients_; }

  /// f(z) = sign(sigma) f(rep) for z = sigma . rep, and 0 on orbits with an
  /// odd stabilizer.
  Rational operator()(const Structure& z) const;
  bool is_zero() const;

  KoszulCochain operator+(const KoszulCochain& o) const;
  KoszulCochain operator-(const KoszulCochain& o) const;
  KoszulCochain scaled(const Rational& c) const;
  friend bool operator==(const KoszulCochain& a, const KoszulCochain& b);

 private:
  SpeciesPtr species_;
  int degree_;
  std::shared_ptr<const KoszulBasis> basis_;
  Vector coefficients_;
};

/// Locates z: (basis position or -1, sign(sigma) with z = sigma . rep).
std::pair<std::ptrdiff_t, int> koszul_locate(const Species& species, const KoszulBasis& basis, const Structure& z);

/// (df)(z) = sum_{i=1}^{p+1} (-1)^{i-1} (f(z \\ (I - i)) - f(z // (I - i))),
/// restrictions standardized onto [p].
Rational koszul_differential_at(const Species& species, const std::function<Rational(const Structure&)>& f,
                                const Structure& z);

/// Matrix of d : K^p -> K^{p+1} (rows indexed by the basis of K^{p+1}).
SparseMatrix koszul_differential_matrix(const SpeciesPtr& species, int p);
KoszulCochain koszul_differential(const KoszulCochain& f);

struct KoszulCohomology {
  std::size_t dimension = 0;
  std::size_t complex_dimension = 0;
  std::vector<KoszulCochain> representatives;
};

/// H^p of the Koszul complex. For cosymmetric species the differential is
/// zero term by term, so building the neighbouring differentials (and the
/// degree p+1 orbit table) is skipped unless `build_differentials` is set.
KoszulCohomology koszul_cohomology(const SpeciesPtr& species, int p, bool build_differentials = false);

/// f(z) = sum_{sigma in S_p} sign(sigma) alpha({sigma 1}, ..., {sigma p})(z).
KoszulCochain cochain_to_koszul(const Cochain& alpha);
KoszulCochain cochain_to_koszul(const SpeciesPtr& species, int p, const CochainFunction& alpha);
/// alpha(sigma)(z) = sign(sigma) / p! f(z) on compositions into singletons,
/// zero elsewhere; lives in C^p_{<=N}.
Cochain koszul_to_cochain(const KoszulCochain& f, int max_arity);

/// The composition ({sigma(1)}, ..., {sigma(p)}) of [p].
Decomposition singleton_composition(const Permutation& sigma);

}  // namespace specoh
