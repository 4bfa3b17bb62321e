#include "latint/derivative.hpp"

#include "latint/errors.hpp"

namespace latint {

std::vector<ProductJoinIrreducible> normal_decomposition(const ProductLattice& lattice, const ProductElement& x) {
  lattice.validate(x);
  std::vector<ProductJoinIrreducible> out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (ElementId i : normal_decomposition(lattice.lattice(k), x[k])) out.push_back({k, i});
  }
  return out;
}

std::vector<ProductJoinIrreducible> minimal_decomposition(const ProductLattice& lattice, const ProductElement& y) {
  lattice.validate(y);
  std::vector<ProductJoinIrreducible> out;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] == lattice.lattice(k).bottom()) continue;
    for (ElementId i : minimal_decomposition(lattice.lattice(k), y[k])) out.push_back({k, i});
  }
  return out;
}

Rational derivative_single(const ProductFunction& f, const ProductJoinIrreducible& i, const ProductElement& x) {
  const ProductLattice& P = f.lattice();
  P.validate(x);
  if (i.attribute >= P.dimension() || !P.lattice(i.attribute).join_irreducibles().contains(i.element)) {
    throw NotJoinIrreducible("direction is not a join-irreducible of the product");
  }
  const FiniteLattice& L = P.lattice(i.attribute);
  if (L.leq(i.element, x[i.attribute])) return 0;
  ProductElement moved = x;
  moved[i.attribute] = L.join(x[i.attribute], i.element);
  return f(moved) - f(x);
}

Rational derivative_single(const ProductFunction& f, const ProductElement& i, const ProductElement& x) {
  return derivative_single(f, as_join_irreducible(f.lattice(), i), x);
}

Rational iterated_derivative(const ProductFunction& f, std::span<const ProductJoinIrreducible> directions,
                             const ProductElement& x) {
  const ProductLattice& P = f.lattice();
  P.validate(x);
  const std::size_t d = directions.size();
  if (d > 30) throw SizeError("iterated derivative over more than 30 directions");
  for (const auto& i : directions) {
    if (i.attribute >= P.dimension() || !P.lattice(i.attribute).join_irreducibles().contains(i.element)) {
      throw NotJoinIrreducible("direction is not a join-irreducible of the product");
    }
    if (P.lattice(i.attribute).leq(i.element, x[i.attribute])) return 0;
  }

  Rational total = 0;
  ProductElement z;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    z = x;
    for (std::size_t b = 0; b < d; ++b) {
      if (mask & (1u << b)) {
        const auto& i = directions[b];
        z[i.attribute] = P.lattice(i.attribute).join(z[i.attribute], i.element);
      }
    }
    if ((d - static_cast<std::size_t>(__builtin_popcount(mask))) % 2 == 0) {
      total += f(z);
    } else {
      total -= f(z);
    }
  }
  return total;
}

Rational derivative(const ProductFunction& f, const ProductElement& y, const ProductElement& x) {
  const auto directions = minimal_decomposition(f.lattice(), y);
  return iterated_derivative(f, directions, x);
}

DerivativeKind classify_derivative(const ProductLattice& lattice, const ProductElement& y, const ProductElement& x) {
  lattice.validate(x);
  const auto directions = minimal_decomposition(lattice, y);
  for (const auto& i : directions) {
    if (lattice.lattice(i.attribute).leq(i.element, x[i.attribute])) return DerivativeKind::zero;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    const FiniteLattice& L = lattice.lattice(k);
    const Bitset& irreducible = L.join_irreducibles().membership;
    Bitset expected = L.down_row(x[k]) & irreducible;
    for (const auto& i : directions) {
      if (i.attribute == k) expected.set(i.element);
    }
    const ElementId upper = L.join(x[k], y[k]);
    const Bitset actual = L.down_row(upper) & irreducible;
    if (actual != expected) return DerivativeKind::non_boolean;
    // The join-irreducible test only characterizes Boolean intervals through
    // Birkhoff's representation; elsewhere check the interval itself.
    if (!L.flags().is_distributive) {
      std::size_t count = 0;
      for (const auto& i : directions) count += i.attribute == k;
      if (!is_boolean_interval(L, x[k], upper) || interval(L, x[k], upper).size() != (std::size_t{1} << count)) {
        return DerivativeKind::non_boolean;
      }
    }
  }
  return DerivativeKind::boolean;
}

bool is_boolean_derivative(const ProductLattice& lattice, const ProductElement& y, const ProductElement& x) {
  return classify_derivative(lattice, y, x) == DerivativeKind::boolean;
}

Rational derivative_via_mobius(const ProductFunction& mobius, const ProductElement& y, const ProductElement& x) {
  const ProductLattice& P = mobius.lattice();
  if (!is_boolean_derivative(P, y, x)) {
    throw NotBoolean("derivative w.r.t. " + P.format(y) + " at " + P.format(x) + " is not Boolean");
  }
  Rational total = 0;
  for (const ProductElement& z : interval(P, y, P.join(x, y))) total += mobius(z);
  return total;
}

}  // namespace latint
