#pragma once

#include <vector>

#include "latint/coefficients.hpp"
#include "latint/function.hpp"
#include "latint/product.hpp"
#include "latint/rational.hpp"

namespace latint {

/// I(i): alpha1_{h(y)}(n)-weighted sum of Delta_i v(y) over the vertices y
/// whose coordinate on i's attribute is the predecessor of i.
Rational importance(const ProductFunction& v, const ProductJoinIrreducible& i, const CoefficientScheme& scheme);

/// I(x) from the direct definition: alpha^|K|_{h(y)}(n)-weighted sum of
/// Delta_x v(y) over the vertex completions y of the predecessors of x on its
/// support K. Throws EmptyTarget for bottom and NotInLtilde.
Rational interaction_direct(const ProductFunction& v, const ProductElement& x, const CoefficientScheme& scheme);

/// I(x) as the beta^|K|_{k(z)}-weighted Möbius mass of [x, x^], where x^ is x
/// with every coordinate off the support raised to top. `m` is the Möbius
/// transform of v. Throws NotDistributive unless every attribute is
/// distributive, EmptyTarget and NotInLtilde.
Rational interaction_mobius(const ProductFunction& m, const ProductElement& x, const CoefficientScheme& scheme);

struct EfficiencyResult {
  Rational lhs;  // sum of I(i) over the join-irreducibles of the product
  Rational rhs;  // v(top) - v(bottom)
  bool pass = false;
  /// Shapley scheme on a product of chains; outside that case the identity is
  /// not guaranteed and `pass` is informational.
  bool applicable = false;
};

EfficiencyResult efficiency_check(const ProductFunction& v, const CoefficientScheme& scheme);

/// v with the coordinates in K frozen at the predecessors of x, as a function
/// on the remaining attributes in their original order. K must lie in the
/// support of x and leave at least one attribute.
/// Throws NotLinear and SupportNotIrreducible.
ProductFunction restricted_function(const ProductFunction& v, const ProductElement& x,
                                    const std::vector<std::size_t>& K);

/// v reduced to x: the attributes off the support J of x, followed by a
/// two-element attribute "[x]" whose bottom maps every coordinate of J to its
/// predecessor and whose top maps it to x. Throws EmptyTarget, NotLinear and
/// SupportNotIrreducible.
ProductFunction reduced_function(const ProductFunction& v, const ProductElement& x);

struct RecursionResult {
  Rational lhs;  // I^v(x)
  Rational rhs;  // reduced importance minus the restricted interactions
  bool pass = false;
};

RecursionResult recursion_check(const ProductFunction& v, const ProductElement& x, const CoefficientScheme& scheme);

}  // namespace latint
