#pragma once

#include <functional>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "latint/lattice.hpp"
#include "latint/product.hpp"
#include "latint/rational.hpp"

namespace latint {

/// Dense real function on one explicit lattice, indexed by element id.
struct LatticeFunction {
  std::shared_ptr<const FiniteLattice> domain;
  std::vector<Rational> values;

  const Rational& operator()(ElementId x) const { return values.at(x); }
};

/// Real function on a (possibly virtual) product lattice.
///
/// Dense storage follows the lexicographic index of the product; sparse storage
/// keeps explicit points over a default value; a computed function wraps a
/// callable and is used for derived functions (restrictions, reductions).
/// Copies share storage.
class ProductFunction {
 public:
  using Evaluator = std::function<Rational(const ProductElement&)>;

  /// Throws SizeError when `values.size()` differs from |L|.
  static ProductFunction dense(std::shared_ptr<const ProductLattice> lattice, std::vector<Rational> values);
  static ProductFunction sparse(std::shared_ptr<const ProductLattice> lattice,
                                std::map<ProductElement, Rational> points, Rational default_value = 0);
  static ProductFunction computed(std::shared_ptr<const ProductLattice> lattice, Evaluator evaluator);

  Rational operator()(const ProductElement& x) const;

  const ProductLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const ProductLattice>& lattice_ptr() const { return lattice_; }

  bool is_dense() const;
  /// Dense values in lexicographic order; throws SizeError above `max_elements`.
  std::vector<Rational> to_dense(std::uint64_t max_elements = kDefaultMaxElements) const;
  /// Borrow of the dense storage; only valid when is_dense().
  const std::vector<Rational>& dense_values() const;

 private:
  struct Sparse {
    std::map<ProductElement, Rational> points;
    Rational default_value;
  };
  using Storage = std::variant<std::vector<Rational>, Sparse, Evaluator>;

  ProductFunction(std::shared_ptr<const ProductLattice> lattice, std::shared_ptr<const Storage> storage)
      : lattice_(std::move(lattice)), storage_(std::move(storage)) {}

  std::shared_ptr<const ProductLattice> lattice_;
  std::shared_ptr<const Storage> storage_;
};

/// Product of named attribute lattices, shared.
std::shared_ptr<const ProductLattice> make_product(std::vector<Attribute> attributes);
/// Product of n copies of one lattice, attributes named "1".."n".
std::shared_ptr<const ProductLattice> make_power(const FiniteLattice& lattice, std::size_t n);

}  // namespace latint
