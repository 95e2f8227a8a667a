#include "specoh/cochains.hpp"

#include <algorithm>

#include "specoh/errors.hpp"
#include "specoh/parallel.hpp"

namespace specoh {

std::vector<std::vector<int>> integer_compositions(int n, int q, bool allow_zero) {
  std::vector<std::vector<int>> out;
  if (q == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> parts(static_cast<std::size_t>(q), 0);
  const int min_part = allow_zero ? 0 : 1;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == q - 1) {
      if (remaining >= min_part) {
        parts[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(parts);
      }
      return;
    }
    const int reserve = min_part * (q - 1 - pos);
    for (int a = min_part; a <= remaining - reserve; ++a) {
      parts[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, n);
  return out;
}

CochainSpace::CochainSpace(SpeciesPtr species, int degree, int max_arity, bool normalized)
    : species_(std::move(species)), degree_(degree), max_arity_(max_arity), normalized_(normalized) {
  if (degree < 0) throw InvalidArgument("cochain degree must be nonnegative");
  if (max_arity > species_->max_arity())
    throw InvalidArgument("arity bound " + std::to_string(max_arity) + " exceeds the tables of " + species_->id() +
                          " (max arity " + std::to_string(species_->max_arity()) + ")");
  for (int n = 0; n <= max_arity; ++n) {
    for (auto& sizes : integer_compositions(n, degree, !normalized)) {
      Cell cell;
      cell.arity = n;
      cell.block_sizes = sizes;
      cell.orbits = &species_->young_orbits(sizes);
      cell.offset = dimension_;
      dimension_ += cell.orbits->size();
      cell_index_.emplace(std::move(sizes), cells_.size());
      cells_.push_back(std::move(cell));
    }
  }
}

std::shared_ptr<const CochainSpace> CochainSpace::make(SpeciesPtr species, int degree, int max_arity,
                                                       bool normalized) {
  return std::shared_ptr<const CochainSpace>(new CochainSpace(std::move(species), degree, max_arity, normalized));
}

std::optional<std::size_t> CochainSpace::locate(const Decomposition& f, const Structure& z) const {
  if (f.length() != degree_)
    throw InvalidArgument("decomposition of length " + std::to_string(f.length()) + " for a cochain of degree " +
                          std::to_string(degree_));
  const int n = f.ground_size();
  if (n != z.arity) throw InvalidArgument("decomposition and structure have different arities");
  if (n > max_arity_)
    throw InvalidArgument("arity " + std::to_string(n) + " is beyond the truncation bound " + std::to_string(max_arity_));
  const auto sizes = f.block_sizes();
  if (normalized_ && std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) return std::nullopt;
  const Cell& cell = cells_[cell_index_.at(sizes)];
  // Move the blocks onto consecutive positions, monotonically within each.
  std::vector<int> img(static_cast<std::size_t>(n));
  bool identity = true;
  int next = 1;
  for (const auto& block : f.blocks()) {
    for (int e : block.members()) {
      img[static_cast<std::size_t>(e - 1)] = next;
      identity = identity && (e == next);
      ++next;
    }
  }
  const std::size_t r =
      identity ? species_->rank(z) : species_->rank(species_->relabel(Permutation(std::move(img)), z));
  return cell.offset + cell.orbits->orbit_of[r];
}

const CochainSpace::Cell& CochainSpace::cell_of(std::size_t index) const {
  if (index >= dimension_) throw InvalidArgument("cochain basis index out of range");
  auto it = std::upper_bound(cells_.begin(), cells_.end(), index,
                             [](std::size_t i, const Cell& c) { return i < c.offset; });
  return *std::prev(it);
}

std::pair<Decomposition, Structure> CochainSpace::element(std::size_t index) const {
  const Cell& cell = cell_of(index);
  return {Decomposition::standard(cell.block_sizes),
          species_->unrank(cell.arity, cell.orbits->representatives[index - cell.offset])};
}

Cochain::Cochain(CochainSpacePtr space) : space_(std::move(space)), values_(space_->dimension(), Rational(0)) {}

Cochain::Cochain(CochainSpacePtr space, Vector values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->dimension()) throw InvalidArgument("cochain value vector has the wrong length");
}

Cochain Cochain::from_function(CochainSpacePtr space, const CochainFunction& f) {
  Cochain c(space);
  parallel_for(space->dimension(), [&](std::size_t i) {
    const auto [dec, z] = space->element(i);
    c.values_[i] = f(dec, z);
  });
  return c;
}

Rational Cochain::operator()(const Decomposition& f, const Structure& z) const {
  const auto idx = space_->locate(f, z);
  return idx ? values_[*idx] : Rational(0);
}

CochainFunction Cochain::as_function() const {
  return [copy = *this](const Decomposition& f, const Structure& z) { return copy(f, z); };
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r.is_zero(); });
}

Cochain Cochain::operator+(const Cochain& other) const {
  if (space_->dimension() != other.space_->dimension()) throw InvalidArgument("adding cochains from different spaces");
  Cochain out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const { return *this + other.scaled(Rational(-1)); }

Cochain Cochain::scaled(const Rational& c) const {
  Cochain out = *this;
  for (auto& v : out.values_) v *= c;
  return out;
}

namespace {

Decomposition restrict_blocks(const Decomposition& f, int first, int last, const Subset& support) {
  const Standardization lambda(support);
  std::vector<Subset> blocks;
  for (int k = first; k <= last; ++k) blocks.push_back(lambda.apply(f.block(k)));
  return Decomposition(lambda.size(), std::move(blocks));
}

}  // namespace

std::optional<std::pair<Decomposition, Structure>> coface_argument(const Species& species, int i,
                                                                   const Decomposition& f, const Structure& z) {
  const int q = f.length() - 1;
  if (q < 0 || i < 0 || i > q + 1)
    throw InvalidArgument("coface index " + std::to_string(i) + " out of range for " + std::to_string(q + 1) + " blocks");
  if (i == 0) {
    const Subset rest = f.block(0).complement();
    auto restricted = species.restrict_left(z, rest);
    if (!restricted) return std::nullopt;
    return std::make_pair(restrict_blocks(f, 1, q, rest), std::move(*restricted));
  }
  if (i == q + 1) {
    const Subset rest = f.block(q).complement();
    auto restricted = species.restrict_right(z, rest);
    if (!restricted) return std::nullopt;
    return std::make_pair(restrict_blocks(f, 0, q - 1, rest), std::move(*restricted));
  }
  std::vector<Subset> blocks;
  for (int k = 0; k <= q; ++k) {
    if (k == i) continue;
    blocks.push_back(k == i - 1 ? (f.block(i - 1) | f.block(i)) : f.block(k));
  }
  return std::make_pair(Decomposition(f.ground_size(), std::move(blocks)), z);
}

Rational coboundary_at(const Species& species, const CochainFunction& alpha, const Decomposition& f,
                       const Structure& z) {
  Rational total(0);
  const int q = f.length() - 1;
  for (int i = 0; i <= q + 1; ++i) {
    const auto arg = coface_argument(species, i, f, z);
    if (!arg) continue;
    const Rational v = alpha(arg->first, arg->second);
    if (i % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

Cochain coface(int i, const Cochain& alpha) {
  const auto& src = *alpha.space();
  auto target = CochainSpace::make(src.species_ptr(), src.degree() + 1, src.max_arity(), src.normalized());
  return Cochain::from_function(target, [&](const Decomposition& f, const Structure& z) {
    const auto arg = coface_argument(src.species(), i, f, z);
    return arg ? alpha(arg->first, arg->second) : Rational(0);
  });
}

Cochain codegeneracy(int j, const Cochain& alpha) {
  const auto& src = *alpha.space();
  const int q = src.degree();
  if (j < 0 || j > q - 1) throw InvalidArgument("codegeneracy index out of range");
  auto target = CochainSpace::make(src.species_ptr(), q - 1, src.max_arity(), src.normalized());
  return Cochain::from_function(target, [&](const Decomposition& f, const Structure& z) {
    std::vector<Subset> blocks(f.blocks().begin(), f.blocks().end());
    blocks.insert(blocks.begin() + j, Subset::empty(f.ground_size()));
    return alpha(Decomposition(f.ground_size(), std::move(blocks)), z);
  });
}

Cochain coboundary(const Cochain& alpha) {
  const auto& src = *alpha.space();
  auto target = CochainSpace::make(src.species_ptr(), src.degree() + 1, src.max_arity(), src.normalized());
  const auto fn = alpha.as_function();
  return Cochain::from_function(
      target, [&](const Decomposition& f, const Structure& z) { return coboundary_at(src.species(), fn, f, z); });
}

SparseMatrix coboundary_matrix(const SpeciesPtr& species, int q, int max_arity, bool normalized) {
  auto target = CochainSpace::make(species, q + 1, max_arity, normalized);
  if (q < 0) return SparseMatrix(target->dimension(), 0);
  auto source = CochainSpace::make(species, q, max_arity, normalized);
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(target->dimension());
  parallel_for(target->dimension(), [&](std::size_t r) {
    const auto [f, z] = target->element(r);
    for (int i = 0; i <= q + 1; ++i) {
      const auto arg = coface_argument(*species, i, f, z);
      if (!arg) continue;
      if (const auto col = source->locate(arg->first, arg->second)) rows[r].emplace_back(*col, i % 2 == 0 ? 1 : -1);
    }
  });
  SparseMatrix m(target->dimension(), source->dimension());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, s] : rows[r]) m.add(r, c, Rational(s));
  return m;
}

void check_truncation(int q, int max_arity) {
  if (q < 0) throw InvalidArgument("cohomological degree must be nonnegative");
  if (max_arity < q + 1)
    throw InvalidArgument("truncation bound N = " + std::to_string(max_arity) + " is too small for degree " +
                          std::to_string(q) + " (need N >= q + 1)");
}

CochainCohomology truncated_cohomology(const SpeciesPtr& species, int q, int max_arity) {
  check_truncation(q, max_arity);
  const SparseMatrix d_in = coboundary_matrix(species, q - 1, max_arity);
  const SparseMatrix d_out = coboundary_matrix(species, q, max_arity);
  auto result = cohomology_at(d_in, d_out);
  auto space = CochainSpace::make(species, q, max_arity);
  CochainCohomology out;
  out.dimension = result.dimension;
  for (auto& v : result.representatives) out.representatives.emplace_back(space, std::move(v));
  return out;
}

}  // namespace specoh
