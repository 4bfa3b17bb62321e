#include "latint/interaction.hpp"

#include "latint/derivative.hpp"
#include "latint/errors.hpp"
#include "latint/lattice.hpp"

namespace latint {

namespace {

// alpha^j_h(n) for h = 0..n-j.
std::vector<Rational> alpha_row(const CoefficientScheme& scheme, unsigned j, unsigned n) {
  std::vector<Rational> row;
  row.reserve(n - j + 1);
  for (unsigned h = 0; h + j <= n; ++h) row.push_back(scheme.alpha(j, h, n));
  return row;
}

LtildeWitness target_witness(const ProductLattice& P, const ProductElement& x) {
  LtildeWitness w = ltilde_witness(P, x);
  if (w.support.empty()) throw EmptyTarget("the bottom element is not an interaction target");
  return w;
}

// Support of x, after checking that every attribute is a chain.
std::vector<std::size_t> linear_support(const ProductLattice& P, const ProductElement& x) {
  P.validate(x);
  if (!P.all_attributes(&StructureFlags::is_linear)) {
    throw NotLinear("restriction and reduction need every attribute to be a chain");
  }
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const FiniteLattice& L = P.lattice(k);
    if (x[k] == L.bottom()) continue;
    if (!L.join_irreducibles().contains(x[k])) {
      throw SupportNotIrreducible("coordinate '" + P.name(k) + "' of " + P.format(x) + " is not join-irreducible");
    }
    support.push_back(k);
  }
  return support;
}

}  // namespace

Rational importance(const ProductFunction& v, const ProductJoinIrreducible& i, const CoefficientScheme& scheme) {
  const ProductLattice& P = v.lattice();
  if (i.attribute >= P.dimension() || !P.lattice(i.attribute).join_irreducibles().contains(i.element)) {
    throw NotJoinIrreducible("importance needs a join-irreducible of the product");
  }
  const unsigned n = static_cast<unsigned>(P.dimension());
  const std::vector<Rational> alpha = alpha_row(scheme, 1, n);
  const FiniteLattice& L = P.lattice(i.attribute);

  PartialAssignment fixed(n);
  fixed[i.attribute] = L.join_irreducibles().predecessor_of(i.element);
  Rational total = 0;
  for (const ProductElement& y : vertices(P, fixed)) {
    ProductElement moved = y;
    moved[i.attribute] = i.element;
    total += alpha[height(P, y)] * (v(moved) - v(y));
  }
  return total;
}

Rational interaction_direct(const ProductFunction& v, const ProductElement& x, const CoefficientScheme& scheme) {
  const ProductLattice& P = v.lattice();
  const LtildeWitness w = target_witness(P, x);
  const unsigned n = static_cast<unsigned>(P.dimension());
  const std::vector<Rational> alpha = alpha_row(scheme, static_cast<unsigned>(w.support.size()), n);
  const std::vector<ProductJoinIrreducible> directions = minimal_decomposition(P, x);

  Rational total = 0;
  for (const ProductElement& y : vertices(P, w.underline)) {
    total += alpha[height(P, y)] * iterated_derivative(v, directions, y);
  }
  return total;
}

Rational interaction_mobius(const ProductFunction& m, const ProductElement& x, const CoefficientScheme& scheme) {
  const ProductLattice& P = m.lattice();
  if (!P.all_attributes(&StructureFlags::is_distributive)) {
    throw NotDistributive("the Möbius form needs every attribute to be distributive");
  }
  const LtildeWitness w = target_witness(P, x);
  const unsigned n = static_cast<unsigned>(P.dimension());
  const std::vector<Rational> beta = beta_from_alpha(scheme, static_cast<unsigned>(w.support.size()), n);

  ProductElement upper = P.top();
  for (std::size_t k : w.support) upper[k] = x[k];
  Rational total = 0;
  for (const ProductElement& z : interval(P, x, upper)) total += beta[nonbottom_count(P, z)] * m(z);
  return total;
}

EfficiencyResult efficiency_check(const ProductFunction& v, const CoefficientScheme& scheme) {
  const ProductLattice& P = v.lattice();
  EfficiencyResult result;
  for (const ProductJoinIrreducible& i : product_join_irreducibles(P)) result.lhs += importance(v, i, scheme);
  result.rhs = v(P.top()) - v(P.bottom());
  result.pass = result.lhs == result.rhs;
  result.applicable = scheme.kind() == SchemeKind::shapley && P.all_attributes(&StructureFlags::is_linear);
  return result;
}

ProductFunction restricted_function(const ProductFunction& v, const ProductElement& x,
                                    const std::vector<std::size_t>& K) {
  const ProductLattice& P = v.lattice();
  const std::vector<std::size_t> support = linear_support(P, x);

  std::vector<bool> frozen(P.dimension(), false);
  for (std::size_t k : K) {
    if (k >= P.dimension()) throw IndexOutOfRange("attribute index " + std::to_string(k) + " out of range");
    if (x[k] == P.lattice(k).bottom()) {
      throw Error("attribute '" + P.name(k) + "' is not in the support of " + P.format(x));
    }
    frozen[k] = true;
  }

  ProductElement base = P.bottom();
  std::vector<Attribute> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t k = 0; k < P.dimension(); ++k) {
    if (frozen[k]) {
      base[k] = P.lattice(k).join_irreducibles().predecessor_of(x[k]);
    } else {
      kept.push_back(P.attribute(k));
      kept_index.push_back(k);
    }
  }
  if (kept.empty()) throw SizeError("restriction would leave no attribute");

  return ProductFunction::computed(make_product(std::move(kept)),
                                   [v, base, kept_index](const ProductElement& y) {
                                     ProductElement full = base;
                                     for (std::size_t r = 0; r < kept_index.size(); ++r) full[kept_index[r]] = y[r];
                                     return v(full);
                                   });
}

ProductFunction reduced_function(const ProductFunction& v, const ProductElement& x) {
  const ProductLattice& P = v.lattice();
  const std::vector<std::size_t> support = linear_support(P, x);
  if (support.empty()) throw EmptyTarget("cannot reduce to the bottom element");

  std::vector<Attribute> kept;
  std::vector<std::size_t> kept_index;
  std::string merged = "[";
  std::size_t s = 0;
  for (std::size_t k = 0; k < P.dimension(); ++k) {
    if (s < support.size() && support[s] == k) {
      merged += (s == 0 ? "" : ",") + P.name(k);
      ++s;
    } else {
      kept.push_back(P.attribute(k));
      kept_index.push_back(k);
    }
  }
  merged += "]";
  kept.push_back({merged, std::make_shared<const FiniteLattice>(make_boolean())});

  ProductElement low = P.bottom();
  for (std::size_t k : support) low[k] = P.lattice(k).join_irreducibles().predecessor_of(x[k]);
  ProductElement high = low;
  for (std::size_t k : support) high[k] = x[k];

  auto lattice = make_product(std::move(kept));
  const ElementId merged_bottom = lattice->lattice(kept_index.size()).bottom();
  return ProductFunction::computed(lattice, [v, low, high, kept_index, merged_bottom](const ProductElement& y) {
    ProductElement full = y[kept_index.size()] == merged_bottom ? low : high;
    for (std::size_t r = 0; r < kept_index.size(); ++r) full[kept_index[r]] = y[r];
    return v(full);
  });
}

RecursionResult recursion_check(const ProductFunction& v, const ProductElement& x, const CoefficientScheme& scheme) {
  const ProductLattice& P = v.lattice();
  const std::vector<std::size_t> J = linear_support(P, x);
  if (J.empty()) throw EmptyTarget("the bottom element is not an interaction target");
  if (J.size() > 30) throw SizeError("support too large for the recursion");

  RecursionResult result;
  result.lhs = interaction_direct(v, x, scheme);

  const ProductFunction reduced = reduced_function(v, x);
  ProductElement merged_top = reduced.lattice().bottom();
  merged_top[merged_top.size() - 1] = reduced.lattice().lattice(merged_top.size() - 1).top();
  result.rhs = interaction_direct(reduced, merged_top, scheme);

  const std::uint32_t full = (1u << J.size()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<std::size_t> K;
    std::vector<bool> frozen(P.dimension(), false);
    for (std::size_t b = 0; b < J.size(); ++b) {
      if (mask & (1u << b)) {
        K.push_back(J[b]);
        frozen[J[b]] = true;
      }
    }
    const ProductFunction restricted = restricted_function(v, x, K);
    ProductElement target;
    for (std::size_t k = 0; k < P.dimension(); ++k) {
      if (!frozen[k]) target.coords.push_back(x[k]);
    }
    result.rhs -= interaction_direct(restricted, target, scheme);
  }
  result.pass = result.lhs == result.rhs;
  return result;
}

}  // namespace latint
