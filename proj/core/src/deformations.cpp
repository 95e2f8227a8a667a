#include "specoh/deformations.hpp"

#include <sstream>

#include "specoh/errors.hpp"
#include "specoh/parallel.hpp"

namespace specoh {

namespace {

std::string witness_of(const Species& species, const Decomposition& f, const Structure& z) {
  return f.to_string() + " on " + species.describe(z);
}

Decomposition merge_first_two(const Decomposition& rst) {
  return Decomposition(rst.ground_size(), {rst.block(0) | rst.block(1), rst.block(2)});
}

Decomposition merge_last_two(const Decomposition& rst) {
  return Decomposition(rst.ground_size(), {rst.block(0), rst.block(1) | rst.block(2)});
}

// (S, T) standardized within S | T.
Decomposition tail_pair(const Decomposition& rst, int first) {
  const Subset support = rst.block(first) | rst.block(first + 1);
  const Standardization lambda(support);
  return Decomposition(lambda.size(), {lambda.apply(rst.block(first)), lambda.apply(rst.block(first + 1))});
}

}  // namespace

StarProducts star_products(const Cochain& alpha, const Cochain& beta) {
  const auto& a = *alpha.space();
  const auto& b = *beta.space();
  if (a.degree() != 2 || b.degree() != 2) throw InvalidArgument("star products take 2-cochains");
  if (a.species_ptr() != b.species_ptr() || a.max_arity() != b.max_arity() || a.normalized() != b.normalized())
    throw InvalidArgument("star products need cochains from the same space");
  const Species& sp = a.species();
  auto space = CochainSpace::make(a.species_ptr(), 3, a.max_arity(), a.normalized());
  auto star_10 = [&](const Cochain& x, const Cochain& y) {
    return Cochain::from_function(space, [&](const Decomposition& rst, const Structure& z) {
      const Rational v = x(merge_last_two(rst), z);
      if (v.is_zero()) return v;
      auto zl = sp.restrict_left(z, rst.block(0).complement());
      return zl ? v * y(tail_pair(rst, 1), *zl) : Rational(0);
    });
  };
  auto star_01 = [&](const Cochain& x, const Cochain& y) {
    return Cochain::from_function(space, [&](const Decomposition& rst, const Structure& z) {
      const Rational v = x(merge_first_two(rst), z);
      if (v.is_zero()) return v;
      auto zr = sp.restrict_right(z, rst.block(2).complement());
      return zr ? v * y(tail_pair(rst, 0), *zr) : Rational(0);
    });
  };
  StarProducts out{star_10(alpha, beta), star_01(alpha, beta), Cochain(space), Cochain(space)};
  out.star = out.star_10 - out.star_01;
  out.bracket = out.star - (star_10(beta, alpha) - star_01(beta, alpha));
  return out;
}

Cochain first_obstruction(const Cochain& delta1) { return star_products(delta1, delta1).star; }

DeformationSeries::DeformationSeries(std::vector<Cochain> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidArgument("a deformation series needs at least Delta_1");
  for (const auto& t : terms_) {
    if (t.degree() != 2 || !t.space()->normalized()) throw InvalidArgument("deformation terms are normalized 2-cochains");
    if (t.space()->dimension() != terms_.front().space()->dimension() ||
        t.space()->species_ptr() != terms_.front().space()->species_ptr())
      throw InvalidArgument("deformation terms must share one cochain space");
  }
}

Rational DeformationSeries::coefficient(int i, const Decomposition& st, const Structure& z) const {
  if (i == 0) return Rational(1);
  if (i < 0 || i > order()) return Rational(0);
  return term(i)(st, z);
}

Rational deformation_residual(const DeformationSeries& series, int n, const Decomposition& rst, const Structure& z) {
  const Species& sp = *series.species();
  Rational total(0);
  const auto zr = sp.restrict_right(z, rst.block(2).complement());
  const auto zl = sp.restrict_left(z, rst.block(0).complement());
  const Decomposition rs_t = merge_first_two(rst);
  const Decomposition r_st = merge_last_two(rst);
  const Decomposition r_s = tail_pair(rst, 0);
  const Decomposition s_t = tail_pair(rst, 1);
  for (int i = 0; i <= n; ++i) {
    const int j = n - i;
    if (zr) total += series.coefficient(i, rs_t, z) * series.coefficient(j, r_s, *zr);
    if (zl) total -= series.coefficient(i, r_st, z) * series.coefficient(j, s_t, *zl);
  }
  return total;
}

DeformationCheck check_deformation(const DeformationSeries& series, int n) {
  const Species& sp = *series.species();
  struct Item {
    Decomposition rst;
    std::size_t rank;
    int arity;
  };
  std::vector<Item> items;
  for (int k = 0; k <= series.max_arity(); ++k)
    for (const auto& sizes : integer_compositions(k, 3, true)) {
      const Decomposition rst = Decomposition::standard(sizes);
      for (std::size_t r : sp.young_orbits(sizes).representatives) items.push_back({rst, r, k});
    }
  std::vector<Rational> residuals(items.size());
  parallel_for(items.size(), [&](std::size_t k) {
    residuals[k] = deformation_residual(series, n, items[k].rst, sp.unrank(items[k].arity, items[k].rank));
  });
  DeformationCheck out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (residuals[k].is_zero()) continue;
    out.holds = false;
    out.residual = residuals[k];
    out.witness = witness_of(sp, items[k].rst, sp.unrank(items[k].arity, items[k].rank));
    break;
  }
  return out;
}

DeformationSeries integrate(const Cochain& delta1, int order) {
  if (order < 1) throw InvalidArgument("integration order must be at least 1");
  const auto& src = *delta1.space();
  if (src.degree() != 2) throw InvalidArgument("only 2-cochains can be integrated");
  const Species& sp = src.species();
  if (!src.normalized()) {
    if (auto w = counit_violation(delta1)) throw ValidationError("Delta_1 is not normalized", *w);
  }
  auto space = CochainSpace::make(src.species_ptr(), 2, src.max_arity());
  Cochain base = src.normalized() ? delta1 : Cochain::from_function(space, delta1.as_function());
  const Cochain boundary = coboundary(base);
  for (std::size_t k = 0; k < boundary.values().size(); ++k) {
    if (boundary.values()[k].is_zero()) continue;
    const auto [f, z] = boundary.space()->element(k);
    throw ValidationError("Delta_1 is not a 2-cocycle", witness_of(sp, f, z));
  }
  std::vector<Cochain> terms{base};
  for (int i = 2; i <= order; ++i) {
    Cochain next = terms.back();
    for (std::size_t k = 0; k < next.values().size(); ++k) next.values()[k] *= base.values()[k] / Rational(i);
    terms.push_back(std::move(next));
  }
  DeformationSeries series(std::move(terms));
  for (int n = 0; n <= order; ++n) {
    const auto check = check_deformation(series, n);
    if (!check.holds)
      throw ValidationError("integrated series violates equation " + std::to_string(n), check.witness);
  }
  return series;
}

std::optional<std::string> counit_violation(const Cochain& delta) {
  const auto& space = *delta.space();
  if (space.degree() != 2) throw InvalidArgument("counit check applies to 2-cochains");
  for (const auto& cell : space.cells()) {
    if (cell.block_sizes[0] != 0 && cell.block_sizes[1] != 0) continue;
    for (std::size_t k = 0; k < cell.orbits->size(); ++k) {
      if (delta.values()[cell.offset + k].is_zero()) continue;
      const auto [f, z] = space.element(cell.offset + k);
      return witness_of(space.species(), f, z);
    }
  }
  return std::nullopt;
}

std::string q_form(const Cochain& delta1) {
  const auto& space = *delta1.space();
  std::ostringstream os;
  for (std::size_t k = 0; k < space.dimension(); ++k) {
    const Rational& v = delta1.values()[k];
    if (v.is_zero()) continue;
    const auto [f, z] = space.element(k);
    os << "Delta_q" << f.to_string() << "(" << space.species().describe(z) << ") = q^" << to_string(v) << "\n";
  }
  return os.str();
}

}  // namespace specoh
