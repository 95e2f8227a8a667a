#pragma once

#include <functional>
#include <memory>

#include "specoh/builtin_species.hpp"
#include "specoh/cochains.hpp"
#include "specoh/koszul.hpp"

namespace specoh {

using KoszulFunction = std::function<Rational(const Structure&)>;

/// (f cup g)(z) = sum over decompositions (S, T) of [p+q] with |S| = p of
/// crossing_sign(S, T) f(z \\ S) g(z // T). Works for any arity of z and
/// arbitrary (not necessarily equivariant) f and g.
Rational cup_koszul_at(const Species& species, const KoszulFunction& f, int p, const KoszulFunction& g, int q,
                       const Structure& z);

KoszulCochain cup_koszul(const KoszulCochain& f, const KoszulCochain& g);

/// The unit of K^*(X): the functional 1 on every structure of arity 0.
KoszulCochain unit_koszul(const SpeciesPtr& species);

/// (alpha cup beta)(F)(z) = alpha(F_1..F_p)(z \\ U) beta(F_{p+1}..F_{p+q})(z // V)
/// with U, V the unions of the first p and last q blocks, each standardized.
/// The arity bound is the smaller of the two.
Cochain cup_cochain(const Cochain& alpha, const Cochain& beta);

/// The degree 0 cochain equal to 1 on every structure of arity 0.
Cochain unit_cochain(const SpeciesPtr& species, int max_arity);

/// (f x g)(A, B, x, y) = crossing_sign(A, B) f(x) g(y) when |A| = p, zero
/// otherwise; f lives on the left factor, g on the right one.
KoszulCochain kunneth_product(const std::shared_ptr<const CauchyProduct>& product, const KoszulCochain& f,
                              const KoszulCochain& g);

/// Matrix of the external product sum_{p+q=n} K^p(X) (x) K^q(Y) -> K^n(X.Y);
/// columns run over p = 0..n and pairs of basis elements.
SparseMatrix kunneth_matrix(const std::shared_ptr<const CauchyProduct>& product, int n);

/// kappa(F_1)(z) = |F_1|, a normalized 1-cochain.
Cochain cardinality_cocycle(const SpeciesPtr& species, int max_arity);
/// Its Koszul image: 1 on every structure of arity one.
KoszulCochain cardinality_class(const SpeciesPtr& species);

/// f_p on linear orders: sign of the order read as a permutation word.
KoszulCochain linear_order_generator(const SpeciesPtr& linear_orders, int p);

/// Delta(S, T)(l) = number of pairs (s, t) in S x T with s before t in l.
Cochain schubert_cocycle(const SpeciesPtr& linear_orders, int max_arity);

/// Number of maps zeta from the path 1-2-3-4 into g with zeta(i) in F_i that
/// send path edges to edges of g.
Rational graph_path_count(const Decomposition& f, const Structure& g);
Cochain graph_path_cocycle(const SpeciesPtr& graphs, int max_arity);

/// The path 1-2-...-k on vertices {offset+1, ..., offset+k} inside [n].
std::vector<std::pair<int, int>> path_edges(int k, int offset = 0);

}  // namespace specoh
