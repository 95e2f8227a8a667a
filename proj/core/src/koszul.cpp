#include "specoh/koszul.hpp"

#include <algorithm>

#include "specoh/errors.hpp"
#include "specoh/parallel.hpp"

namespace specoh {

KoszulBasis koszul_basis(const Species& species, int p) {
  KoszulBasis b;
  b.degree = p;
  if (p > species.max_arity()) return b;
  const auto& table = species.orbit_table(p);
  b.position_of.assign(table.orbits.size(), -1);
  for (std::size_t o = 0; o < table.orbits.size(); ++o) {
    if (table.orbits[o].odd_stabilizer) continue;
    b.position_of[o] = static_cast<std::ptrdiff_t>(b.orbits.size());
    b.orbits.push_back(o);
  }
  return b;
}

std::size_t koszul_dimension(const Species& species, int p) { return koszul_basis(species, p).size(); }

KoszulCochain::KoszulCochain(SpeciesPtr species, int degree)
    : species_(std::move(species)), degree_(degree),
      basis_(std::make_shared<const KoszulBasis>(koszul_basis(*species_, degree))),
      coefficients_(basis_->size(), Rational(0)) {}

KoszulCochain::KoszulCochain(SpeciesPtr species, int degree, Vector coefficients) : KoszulCochain(std::move(species), degree) {
  if (coefficients.size() != coefficients_.size())
    throw InvalidArgument("Koszul cochain coefficient vector has the wrong length");
  coefficients_ = std::move(coefficients);
}

KoszulCochain KoszulCochain::from_function(SpeciesPtr species, int degree,
                                           const std::function<Rational(const Structure&)>& f) {
  KoszulCochain out(std::move(species), degree);
  const auto& table = out.species_->orbit_table(degree);
  for (std::size_t k = 0; k < out.basis_->size(); ++k)
    out.coefficients_[k] = f(out.species_->unrank(degree, table.orbits[out.basis_->orbits[k]].representative));
  return out;
}

KoszulCochain KoszulCochain::basis_element(SpeciesPtr species, int degree, std::size_t k) {
  KoszulCochain out(std::move(species), degree);
  out.coefficients_.at(k) = 1;
  return out;
}

std::pair<std::ptrdiff_t, int> koszul_locate(const Species& species, const KoszulBasis& basis, const Structure& z) {
  if (z.arity != basis.degree)
    throw InvalidArgument("structure of arity " + std::to_string(z.arity) + " given to a Koszul cochain of degree " +
                          std::to_string(basis.degree));
  if (basis.position_of.empty()) return {-1, 1};
  const auto& table = species.orbit_table(z.arity);
  const std::size_t r = species.rank(z);
  return {basis.position_of[table.orbit_of[r]], table.sign_from_representative[r]};
}

Rational KoszulCochain::operator()(const Structure& z) const {
  const auto [pos, sign] = koszul_locate(*species_, *basis_, z);
  if (pos < 0) return Rational(0);
  const Rational& v = coefficients_[static_cast<std::size_t>(pos)];
  return sign > 0 ? v : Rational(-v);
}

bool KoszulCochain::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& r) { return r.is_zero(); });
}

KoszulCochain KoszulCochain::operator+(const KoszulCochain& o) const {
  if (species_ != o.species_ || degree_ != o.degree_) throw InvalidArgument("adding unrelated Koszul cochains");
  KoszulCochain out = *this;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out.coefficients_[i] += o.coefficients_[i];
  return out;
}

KoszulCochain KoszulCochain::operator-(const KoszulCochain& o) const { return *this + o.scaled(Rational(-1)); }

KoszulCochain KoszulCochain::scaled(const Rational& c) const {
  KoszulCochain out = *this;
  for (auto& v : out.coefficients_) v *= c;
  return out;
}

bool operator==(const KoszulCochain& a, const KoszulCochain& b) {
  return a.species_ == b.species_ && a.degree_ == b.degree_ && a.coefficients_ == b.coefficients_;
}

Rational koszul_differential_at(const Species& species, const std::function<Rational(const Structure&)>& f,
                                const Structure& z) {
  Rational total(0);
  const int n = z.arity;
  const Subset full = Subset::full(n);
  for (int i = 1; i <= n; ++i) {
    const Subset rest = full.without(i);
    Rational term(0);
    if (auto r = species.restrict_right(z, rest)) term += f(*r);
    if (auto l = species.restrict_left(z, rest)) term -= f(*l);
    if (i % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

SparseMatrix koszul_differential_matrix(const SpeciesPtr& species, int p) {
  const KoszulBasis source = koszul_basis(*species, p);
  const KoszulBasis target = koszul_basis(*species, p + 1);
  SparseMatrix m(target.size(), source.size());
  if (source.size() == 0 || target.size() == 0) return m;
  const auto& table = species->orbit_table(p + 1);
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(target.size());
  parallel_for(target.size(), [&](std::size_t row) {
    const Structure& z = species->unrank(p + 1, table.orbits[target.orbits[row]].representative);
    const Subset full = Subset::full(p + 1);
    for (int i = 1; i <= p + 1; ++i) {
      const int sign = i % 2 == 1 ? 1 : -1;
      const Subset rest = full.without(i);
      if (auto r = species->restrict_right(z, rest)) {
        const auto [pos, s] = koszul_locate(*species, source, *r);
        if (pos >= 0) rows[row].emplace_back(static_cast<std::size_t>(pos), sign * s);
      }
      if (auto l = species->restrict_left(z, rest)) {
        const auto [pos, s] = koszul_locate(*species, source, *l);
        if (pos >= 0) rows[row].emplace_back(static_cast<std::size_t>(pos), -sign * s);
      }
    }
  });
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m.add(r, c, Rational(v));
  return m;
}

KoszulCochain koszul_differential(const KoszulCochain& f) {
  const SparseMatrix d = koszul_differential_matrix(f.species(), f.degree());
  return KoszulCochain(f.species(), f.degree() + 1, d.apply(f.coefficients()));
}

KoszulCohomology koszul_cohomology(const SpeciesPtr& species, int p, bool build_differentials) {
  if (p < 0) throw InvalidArgument("cohomological degree must be nonnegative");
  const std::size_t dim = koszul_dimension(*species, p);
  SparseMatrix d_in;
  SparseMatrix d_out;
  if (species->cosymmetric() && !build_differentials) {
    d_in = SparseMatrix(dim, p == 0 ? 0 : koszul_dimension(*species, p - 1));
    d_out = SparseMatrix(0, dim);
  } else {
    d_in = p == 0 ? SparseMatrix(dim, 0) : koszul_differential_matrix(species, p - 1);
    d_out = koszul_differential_matrix(species, p);
  }
  auto result = cohomology_at(d_in, d_out);
  KoszulCohomology out;
  out.dimension = result.dimension;
  out.complex_dimension = dim;
  for (auto& v : result.representatives) out.representatives.emplace_back(species, p, std::move(v));
  return out;
}

Decomposition singleton_composition(const Permutation& sigma) {
  std::vector<Subset> blocks;
  for (int k = 1; k <= sigma.degree(); ++k) blocks.push_back(Subset::of(sigma.degree(), {sigma(k)}));
  return Decomposition(sigma.degree(), std::move(blocks));
}

KoszulCochain cochain_to_koszul(const SpeciesPtr& species, int p, const CochainFunction& alpha) {
  const auto perms = all_permutations(p);
  std::vector<Decomposition> compositions;
  std::vector<int> signs;
  for (const auto& s : perms) {
    compositions.push_back(singleton_composition(s));
    signs.push_back(s.sign());
  }
  return KoszulCochain::from_function(species, p, [&](const Structure& z) {
    Rational total(0);
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const Rational v = alpha(compositions[k], z);
      if (signs[k] > 0) {
        total += v;
      } else {
        total -= v;
      }
    }
    return total;
  });
}

KoszulCochain cochain_to_koszul(const Cochain& alpha) {
  const auto& space = *alpha.space();
  if (space.max_arity() < space.degree())
    throw InvalidArgument("cochain is truncated below its own degree; no Koszul image");
  return cochain_to_koszul(space.species_ptr(), space.degree(), alpha.as_function());
}

Cochain koszul_to_cochain(const KoszulCochain& f, int max_arity) {
  const int p = f.degree();
  if (max_arity < p) throw InvalidArgument("arity bound below the Koszul degree");
  auto space = CochainSpace::make(f.species(), p, max_arity);
  const Rational inv_factorial = Rational(1) / Rational(static_cast<long long>(factorial(p)));
  return Cochain::from_function(space, [&](const Decomposition& dec, const Structure& z) {
    if (dec.ground_size() != p) return Rational(0);
    std::vector<int> images;
    for (const auto& b : dec.blocks()) images.push_back(b.members().front());
    const Permutation sigma(std::move(images));
    Rational v = f(z) * inv_factorial;
    return sigma.sign() > 0 ? v : Rational(-v);
  });
}

}  // namespace specoh
