#include "latint/function.hpp"

#include "latint/errors.hpp"

namespace latint {

ProductFunction ProductFunction::dense(std::shared_ptr<const ProductLattice> lattice, std::vector<Rational> values) {
  if (values.size() != lattice->size()) {
    throw SizeError("dense function has " + std::to_string(values.size()) + " values, lattice has " +
                    std::to_string(lattice->size()) + " elements");
  }
  return ProductFunction(std::move(lattice), std::make_shared<const Storage>(std::move(values)));
}

ProductFunction ProductFunction::sparse(std::shared_ptr<const ProductLattice> lattice,
                                        std::map<ProductElement, Rational> points, Rational default_value) {
  for (const auto& [x, value] : points) lattice->validate(x);
  return ProductFunction(std::move(lattice),
                         std::make_shared<const Storage>(Sparse{std::move(points), std::move(default_value)}));
}

ProductFunction ProductFunction::computed(std::shared_ptr<const ProductLattice> lattice, Evaluator evaluator) {
  return ProductFunction(std::move(lattice), std::make_shared<const Storage>(std::move(evaluator)));
}

Rational ProductFunction::operator()(const ProductElement& x) const {
  return std::visit(
      [&](const auto& s) -> Rational {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, std::vector<Rational>>) {
          return s[lattice_->index_of(x)];
        } else if constexpr (std::is_same_v<S, Sparse>) {
          auto it = s.points.find(x);
          return it == s.points.end() ? s.default_value : it->second;
        } else {
          return s(x);
        }
      },
      *storage_);
}

bool ProductFunction::is_dense() const { return std::holds_alternative<std::vector<Rational>>(*storage_); }

const std::vector<Rational>& ProductFunction::dense_values() const {
  return std::get<std::vector<Rational>>(*storage_);
}

std::vector<Rational> ProductFunction::to_dense(std::uint64_t max_elements) const {
  lattice_->require_enumerable(max_elements);
  if (is_dense()) return dense_values();
  const std::uint64_t count = lattice_->size();
  std::vector<Rational> out(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) out[idx] = (*this)(lattice_->element_at(idx));
  return out;
}

std::shared_ptr<const ProductLattice> make_product(std::vector<Attribute> attributes) {
  return std::make_shared<const ProductLattice>(std::move(attributes));
}

std::shared_ptr<const ProductLattice> make_power(const FiniteLattice& lattice, std::size_t n) {
  auto shared = std::make_shared<const FiniteLattice>(lattice);
  std::vector<Attribute> attributes;
  for (std::size_t k = 0; k < n; ++k) attributes.push_back({std::to_string(k + 1), shared});
  return make_product(std::move(attributes));
}

}  // namespace latint
