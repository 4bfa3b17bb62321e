#pragma once

#include <span>
#include <vector>

#include "latint/function.hpp"
#include "latint/product.hpp"
#include "latint/rational.hpp"

namespace latint {

/// Join-irreducibles of the product below x, attribute by attribute.
std::vector<ProductJoinIrreducible> normal_decomposition(const ProductLattice& lattice, const ProductElement& x);
/// Union of the per-attribute minimal decompositions. Propagates NotLLDError.
std::vector<ProductJoinIrreducible> minimal_decomposition(const ProductLattice& lattice, const ProductElement& y);

/// f(x v i) - f(x).
Rational derivative_single(const ProductFunction& f, const ProductJoinIrreducible& i, const ProductElement& x);
/// Same, after checking that `i` is a join-irreducible of the product.
Rational derivative_single(const ProductFunction& f, const ProductElement& i, const ProductElement& x);

/// Delta_{i_1}(...Delta_{i_d} f(x)) for an arbitrary list of directions, as the
/// signed sum over sub-lists; zero when some direction lies below x.
Rational iterated_derivative(const ProductFunction& f, std::span<const ProductJoinIrreducible> directions,
                             const ProductElement& x);

/// Delta_y f(x), iterating over the minimal decomposition of y.
Rational derivative(const ProductFunction& f, const ProductElement& y, const ProductElement& x);

enum class DerivativeKind {
  zero,         // some member of eta*(y) lies below x
  boolean,      // [x, x v y] is isomorphic to 2^|eta*(y)|
  non_boolean,
};

DerivativeKind classify_derivative(const ProductLattice& lattice, const ProductElement& y, const ProductElement& x);

/// eta(x) and eta*(y) are disjoint and eta(x v y) = eta(x) u eta*(y). On a
/// non-distributive attribute that test can accept a non-Boolean interval,
/// so there [x_k, x_k v y_k] is also checked against 2^(directions on k).
bool is_boolean_derivative(const ProductLattice& lattice, const ProductElement& y, const ProductElement& x);

/// Sum of the Möbius transform over [y, x v y]. Throws NotBoolean unless the
/// derivative is Boolean.
Rational derivative_via_mobius(const ProductFunction& mobius, const ProductElement& y, const ProductElement& x);

}  // namespace latint
