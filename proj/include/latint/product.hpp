#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latint/lattice.hpp"

namespace latint {

/// Coordinate tuple of a product lattice element.
struct ProductElement {
  std::vector<ElementId> coords;

  std::size_t size() const { return coords.size(); }
  ElementId operator[](std::size_t k) const { return coords[k]; }
  ElementId& operator[](std::size_t k) { return coords[k]; }

  friend bool operator==(const ProductElement&, const ProductElement&) = default;
  friend auto operator<=>(const ProductElement&, const ProductElement&) = default;
};

/// A join-irreducible of the product: i0 in J(L_attribute), bottom elsewhere.
struct ProductJoinIrreducible {
  std::size_t attribute = 0;
  ElementId element = 0;

  friend bool operator==(const ProductJoinIrreducible&, const ProductJoinIrreducible&) = default;
  friend auto operator<=>(const ProductJoinIrreducible&, const ProductJoinIrreducible&) = default;
};

struct Attribute {
  std::string name;
  std::shared_ptr<const FiniteLattice> lattice;
};

/// Partial coordinate assignment; unset coordinates are free.
using PartialAssignment = std::vector<std::optional<ElementId>>;

inline constexpr std::uint64_t kDefaultMaxElements = 1'000'000;

/// L_1 x ... x L_n with the product order. Elements are tuples; nothing is
/// materialized unless asked for.
///
/// The materialized order is lexicographic in the per-attribute linear-extension
/// ranks with the first attribute most significant, which is itself a linear
/// extension of the product order.
class ProductLattice {
 public:
  /// Throws Error when n = 0, NotALattice for a non-lattice attribute and
  /// SizeError for an attribute with fewer than two elements.
  explicit ProductLattice(std::vector<Attribute> attributes);

  std::size_t dimension() const { return attributes_.size(); }
  const Attribute& attribute(std::size_t k) const { return attributes_.at(k); }
  const FiniteLattice& lattice(std::size_t k) const { return *attributes_.at(k).lattice; }
  const std::string& name(std::size_t k) const { return attributes_.at(k).name; }

  ProductElement bottom() const;
  ProductElement top() const;

  /// Throws DimensionMismatch or InvalidElement.
  void validate(const ProductElement& x) const;

  bool leq(const ProductElement& x, const ProductElement& y) const;
  ProductElement join(const ProductElement& x, const ProductElement& y) const;
  ProductElement meet(const ProductElement& x, const ProductElement& y) const;

  /// |L|, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  /// Throws SizeError when |L| exceeds `max_elements`.
  void require_enumerable(std::uint64_t max_elements) const;
  std::uint64_t index_of(const ProductElement& x) const;
  ProductElement element_at(std::uint64_t index) const;

  std::vector<std::string> labels(const ProductElement& x) const;
  /// Per-attribute labels to element. Throws DimensionMismatch or UnknownLabel.
  ProductElement parse(const std::vector<std::string>& labels) const;
  std::string format(const ProductElement& x) const;

  /// Whether every attribute has at most four elements and n <= 32, so an
  /// element fits into one 64-bit word at two bits per coordinate.
  bool packable() const { return packable_; }
  std::uint64_t pack(const ProductElement& x) const;
  ProductElement unpack(std::uint64_t word) const;

  bool all_attributes(bool StructureFlags::*flag) const;

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 1;
  bool packable_ = false;
};

/// Vertex completions of a partial assignment: every free coordinate is set to
/// its attribute's bottom or top. Yields 2^(free count) distinct elements;
/// bit b of the running counter selects top for the b-th free coordinate.
class VertexRange {
 public:
  VertexRange(const ProductLattice& lattice, PartialAssignment fixed);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ProductElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const ProductElement*;
    using reference = const ProductElement&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.counter_ == b.counter_; }

   private:
    friend class VertexRange;
    iterator(const VertexRange* range, std::uint64_t counter);
    void load();

    const VertexRange* range_ = nullptr;
    std::uint64_t counter_ = 0;
    ProductElement current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  std::uint64_t size() const { return count_; }

 private:
  const ProductLattice* lattice_;
  ProductElement base_;
  std::vector<std::size_t> free_;
  std::uint64_t count_;
};

VertexRange vertices(const ProductLattice& lattice, PartialAssignment fixed = {});

/// h(x): coordinates equal to their attribute's top.
std::size_t height(const ProductLattice& lattice, const ProductElement& x);
/// k(x): coordinates different from their attribute's bottom.
std::size_t nonbottom_count(const ProductLattice& lattice, const ProductElement& x);

std::vector<ProductJoinIrreducible> product_join_irreducibles(const ProductLattice& lattice);
ProductElement to_element(const ProductLattice& lattice, const ProductJoinIrreducible& i);
/// Throws NotJoinIrreducible unless x has exactly one non-bottom coordinate,
/// which is join-irreducible in its attribute.
ProductJoinIrreducible as_join_irreducible(const ProductLattice& lattice, const ProductElement& x);

/// Elements z with a <= z <= b, in lexicographic order. Throws OrderError.
std::vector<ProductElement> interval(const ProductLattice& lattice, const ProductElement& a,
                                     const ProductElement& b);

/// Membership certificate for the admissible target set.
struct LtildeWitness {
  std::vector<std::size_t> support;                // K, ascending
  std::vector<std::optional<ElementId>> underline;  // set exactly on K
};

/// Throws NotInLtilde when some non-bottom coordinate has no unique element
/// covered by every member of its minimal decomposition.
LtildeWitness ltilde_witness(const ProductLattice& lattice, const ProductElement& x);
bool in_ltilde(const ProductLattice& lattice, const ProductElement& x);

/// The product as an explicit lattice; ids coincide with lexicographic indices.
FiniteLattice materialize(const ProductLattice& lattice, std::uint64_t max_elements = 4096);

}  // namespace latint
