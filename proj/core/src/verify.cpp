#include "specoh/verify.hpp"

#include <algorithm>
#include <sstream>

#include "specoh/cobar.hpp"
#include "specoh/cochains.hpp"
#include "specoh/coxeter.hpp"
#include "specoh/deformations.hpp"
#include "specoh/errors.hpp"
#include "specoh/koszul.hpp"
#include "specoh/products.hpp"
#include "specoh/registry.hpp"

namespace specoh {

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

CheckResult check(std::string name, bool ok, std::string detail = {}, std::string witness = {}) {
  return {std::move(name), ok, std::move(detail), std::move(witness)};
}

int bound_or(const SuiteOptions& o, int fallback) { return o.max_arity > 0 ? o.max_arity : fallback; }

SuiteReport koszul_vs_oracle(const SuiteOptions& o) {
  SuiteReport r{"koszul-vs-oracle", {}};
  auto& reg = global_registry();
  std::vector<SpeciesPtr> species;
  for (const auto& id : {"E", "L", "P", "C", "Gr", "S0", "S1", "S2", "S3", "S4", "S1.E", "S1.L", "L.E"})
    species.push_back(reg.get(id));
  species.insert(species.end(), o.extra_species.begin(), o.extra_species.end());
  const int cap = bound_or(o, 5);
  for (const auto& sp : species) {
    const int max_q = std::min({sp->id() == "E" || sp->id() == "L" ? 4 : 3, cap - 1, sp->max_arity() - 1});
    for (int q = 0; q <= max_q; ++q) {
      const auto oracle = truncated_cohomology(sp, q, q + 1).dimension;
      const auto koszul = koszul_cohomology(sp, q, true).dimension;
      r.checks.push_back(check(sp->id() + " H^" + std::to_string(q), oracle == koszul,
                               "oracle " + std::to_string(oracle) + ", koszul " + std::to_string(koszul)));
    }
  }
  return r;
}

SuiteReport coxeter_suite(const SuiteOptions& o) {
  SuiteReport r{"coxeter", {}};
  for (int j = 1; j <= bound_or(o, 6); ++j) {
    const CoxeterComplex cx(j);
    const auto dims = cx.cohomology_dimensions();
    std::vector<std::size_t> expected(dims.size(), 0);
    expected.back() = 1;
    r.checks.push_back(check("j=" + std::to_string(j) + " reduced cohomology", dims == expected, join(dims)));
    if (j < 2) continue;
    const Vector xi = cx.top_generator();
    Vector sum = cx.act_on_top(Permutation::transposition(j, 1, 2), xi);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += xi[k];
    const bool top_nonzero = !cx.top_is_coboundary(xi);
    r.checks.push_back(check("j=" + std::to_string(j) + " transposition acts by -1",
                             top_nonzero && cx.top_is_coboundary(sum)));
  }
  return r;
}

SuiteReport cobar_suite(const SuiteOptions& o) {
  SuiteReport r{"cobar", {}};
  auto& reg = global_registry();
  const int n_max = bound_or(o, 4);
  const auto stirling = stirling_first_kind_table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const CobarComplex e(reg.get("E"), n);
    const CobarComplex l(reg.get("L"), n);
    r.checks.push_back(check("E arity " + std::to_string(n) + " d^2 = 0", e.differential_squares_to_zero()));
    r.checks.push_back(check("L arity " + std::to_string(n) + " d^2 = 0", l.differential_squares_to_zero()));
    auto de = e.cohomology_by_blocks();
    std::vector<std::size_t> want_e(de.size(), 0);
    want_e[static_cast<std::size_t>(n)] = 1;
    r.checks.push_back(check("E arity " + std::to_string(n) + " concentrated in degree 0", de == want_e, join(de)));
    auto dl = l.cohomology_by_blocks();
    std::vector<std::size_t> want_l;
    for (int k = 0; k <= n; ++k) want_l.push_back(stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    r.checks.push_back(check("L arity " + std::to_string(n) + " Stirling numbers", dl == want_l,
                             "blocks 0.." + std::to_string(n) + ": " + join(dl)));
  }
  return r;
}

SuiteReport cup_suite(const SuiteOptions& o) {
  SuiteReport r{"cup-relations", {}};
  auto& reg = global_registry();
  const auto l = reg.get("L");
  const auto e = reg.get("E");
  auto f = [&](int p) { return linear_order_generator(l, p); };
  r.checks.push_back(check("L f1 f2 = f3", cup_koszul(f(1), f(2)) == f(3)));
  r.checks.push_back(check("L f1 f3 = 0", cup_koszul(f(1), f(3)).is_zero()));
  r.checks.push_back(check("L f2 f2 = 2 f4", cup_koszul(f(2), f(2)) == f(4).scaled(Rational(2))));
  r.checks.push_back(check("L f2 f4 = 3 f6", cup_koszul(f(2), f(4)) == f(6).scaled(Rational(3))));
  r.checks.push_back(check("L f1 f1 = 0", cup_koszul(f(1), f(1)).is_zero()));
  const auto k1 = cardinality_class(e);
  r.checks.push_back(check("E f1 f1 = 0", cup_koszul(k1, k1).is_zero()));
  const int total = std::min(bound_or(o, 5), 5);
  for (const auto& id : {"E", "L", "P", "C", "Gr", "S1.E", "S1.L", "L.E"}) {
    const auto sp = reg.get(id);
    bool ok = true;
    std::string witness;
    for (int p = 0; p <= total && ok; ++p)
      for (int q = 0; p + q <= total && ok; ++q) {
        const auto bp = koszul_basis(*sp, p);
        const auto bq = koszul_basis(*sp, q);
        for (std::size_t i = 0; i < bp.size() && ok; ++i)
          for (std::size_t j = 0; j < bq.size() && ok; ++j) {
            const auto a = KoszulCochain::basis_element(sp, p, i);
            const auto b = KoszulCochain::basis_element(sp, q, j);
            const auto lhs = cup_koszul(a, b);
            const auto rhs = cup_koszul(b, a).scaled(Rational((p * q) % 2 == 0 ? 1 : -1));
            if (!(lhs == rhs)) {
              ok = false;
              witness = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " basis " + std::to_string(i) + "," +
                        std::to_string(j);
            }
          }
      }
    r.checks.push_back(check(std::string(id) + " graded commutativity", ok, {}, witness));
  }
  return r;
}

SuiteReport deformation_suite(const SuiteOptions& o) {
  SuiteReport r{"deformation", {}};
  auto& reg = global_registry();
  const int n = std::min(bound_or(o, 4), 4);
  const auto p = reg.get("P");
  const Cochain kappa = cardinality_cocycle(p, n);
  r.checks.push_back(check("P kappa is a cocycle", coboundary(kappa).is_zero()));
  r.checks.push_back(
      check("P kappa is not a coboundary", !in_image(coboundary_matrix(p, 0, n), kappa.values())));
  const auto l = reg.get("L");
  const Cochain schubert = schubert_cocycle(l, n);
  try {
    const auto series = integrate(schubert, 4);
    r.checks.push_back(check("L Schubert cocycle integrates to order 4", series.order() == 4));
  } catch (const ValidationError& e) {
    r.checks.push_back(check("L Schubert cocycle integrates to order 4", false, e.what(), e.witness()));
  }
  r.checks.push_back(check("L first obstruction is a 3-cocycle", coboundary(first_obstruction(schubert)).is_zero()));
  return r;
}

SuiteReport kunneth_suite(const SuiteOptions& o) {
  SuiteReport r{"kunneth", {}};
  auto& reg = global_registry();
  const auto product = std::make_shared<CauchyProduct>(reg.get("L"), reg.get("E"));
  for (int n = 0; n <= std::min(bound_or(o, 5), 5); ++n) {
    std::size_t expected = 0;
    for (int p = 0; p <= n; ++p)
      expected += koszul_dimension(product->left_factor(), p) * koszul_dimension(product->right_factor(), n - p);
    const std::size_t dim = koszul_dimension(*product, n);
    const SparseMatrix m = kunneth_matrix(product, n);
    const std::size_t rk = rank(m);
    r.checks.push_back(check("L.E degree " + std::to_string(n), dim == expected && rk == dim && m.cols() == dim,
                             "dim " + std::to_string(dim) + ", expected " + std::to_string(expected) + ", rank " +
                                 std::to_string(rk)));
  }
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"koszul-vs-oracle", "coxeter", "cobar", "cup-relations", "deformation", "kunneth"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "koszul-vs-oracle") return koszul_vs_oracle(options);
  if (name == "coxeter") return coxeter_suite(options);
  if (name == "cobar") return cobar_suite(options);
  if (name == "cup-relations") return cup_suite(options);
  if (name == "deformation") return deformation_suite(options);
  if (name == "kunneth") return kunneth_suite(options);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace specoh
