#include "specoh/validate.hpp"

#include <algorithm>
#include <optional>

namespace specoh {

namespace {

std::string show(const Species& sp, const std::optional<Structure>& z) {
  return z ? sp.describe(*z) : std::string("0");
}

std::optional<Structure> restrict_opt(const Species& sp, Side side, const std::optional<Structure>& z,
                                      const Subset& s) {
  if (!z) return std::nullopt;
  return sp.restrict_to(side, *z, s);
}

std::vector<Permutation> relabel_test_set(int n) {
  if (n <= 5) return all_permutations(n);
  std::vector<Permutation> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(Permutation::transposition(n, a, b));
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  out.emplace_back(cycle);
  std::reverse(cycle.begin(), cycle.end());
  out.emplace_back(cycle);
  return out;
}

}  // namespace

int default_validation_arity(const Species& species) {
  int bound = 6;
  if (species.heavy(bound + 1)) bound = 5;
  return std::min(bound, species.max_arity());
}

std::vector<LawViolation> check_bicomodule_laws(const Species& sp, int max_arity) {
  std::vector<LawViolation> out;
  auto violation = [&](std::string law, std::string witness) {
    out.push_back(LawViolation{std::move(law), std::move(witness)});
  };
  max_arity = std::min(max_arity, sp.max_arity());
  for (int n = 0; n <= max_arity; ++n) {
    const auto& list = sp.structures(n);
    const Subset full = Subset::full(n);
    const auto perms = relabel_test_set(n);
    std::vector<Permutation> generators;
    for (int k = 1; k < n; ++k) generators.push_back(Permutation::transposition(n, k, k + 1));
    const auto subsets_count = std::uint64_t{1} << n;

    for (const auto& z : list) {
      const std::string zs = sp.describe(z) + " (arity " + std::to_string(n) + ")";
      if (sp.relabel(Permutation::identity(n), z) != z) violation("relabel(id) = id", "z=" + zs);
      for (const auto& g : generators) {
        for (const auto& tau : perms) {
          const Structure lhs = sp.relabel(g * tau, z);
          const Structure rhs = sp.relabel(g, sp.relabel(tau, z));
          if (lhs != rhs) {
            violation("relabel(s t) = relabel(s) relabel(t)", "s=" + g.to_string() + ", t=" + tau.to_string() + ", z=" + zs);
            return out;
          }
        }
      }
      for (Side side : {Side::left, Side::right}) {
        const auto whole = sp.restrict_to(side, z, full);
        if (!whole || *whole != z) {
          violation(std::string("counit (") + to_string(side) + " restriction to the full set)", "z=" + zs);
          return out;
        }
      }
      for (std::uint64_t bm = 0; bm < subsets_count; ++bm) {
        const Subset b(n, bm);
        const Standardization lambda_b(b);
        const auto zl = sp.restrict_to(Side::left, z, b);
        const auto zr = sp.restrict_to(Side::right, z, b);
        if (sp.cosymmetric() && zl != zr) {
          violation("cosymmetry", "z=" + zs + ", S=" + b.to_string() + ": left " + show(sp, zl) + ", right " + show(sp, zr));
          return out;
        }
        for (const auto& g : generators) {
          for (Side side : {Side::left, Side::right}) {
            const auto moved = sp.restrict_to(side, sp.relabel(g, z), g.image(b));
            auto expected = side == Side::left ? zl : zr;
            if (expected) expected = sp.relabel(induced_permutation(g, b), *expected);
            if (moved != expected) {
              violation(std::string("equivariance of ") + to_string(side) + " restriction",
                        "sigma=" + g.to_string() + ", z=" + zs + ", S=" + b.to_string());
              return out;
            }
          }
        }
        // Sub-subsets A of B, and T with B union T = I for compatibility.
        for (std::uint64_t am = bm;; am = (am - 1) & bm) {
          const Subset a(n, am);
          const Subset a_in_b = lambda_b.apply(a);
          for (Side side : {Side::left, Side::right}) {
            const auto two_step = restrict_opt(sp, side, side == Side::left ? zl : zr, a_in_b);
            const auto direct = sp.restrict_to(side, z, a);
            if (two_step != direct) {
              violation(std::string("coassociativity of ") + to_string(side) + " restriction",
                        "z=" + zs + ", A=" + a.to_string() + ", B=" + b.to_string());
              return out;
            }
          }
          // S = B, T = A union complement(B); then S intersect T = A.
          const Subset t = a | b.complement();
          const Standardization lambda_t(t);
          const auto lhs = restrict_opt(sp, Side::right, zl, a_in_b);
          const auto rhs = restrict_opt(sp, Side::left, sp.restrict_to(Side::right, z, t), lambda_t.apply(a));
          if (lhs != rhs) {
            violation("bicomodule compatibility (z//S)\\\\(S^T) = (z\\\\T)//(S^T) for S u T = I",
                      "z=" + zs + ", S=" + b.to_string() + ", T=" + t.to_string() + ": " + show(sp, lhs) +
                          " vs " + show(sp, rhs));
            return out;
          }
          if (am == 0) break;
        }
      }
    }
  }
  return out;
}

}  // namespace specoh
