#include "latint/product.hpp"

#include <algorithm>
#include <limits>

#include "latint/errors.hpp"

namespace latint {

ProductLattice::ProductLattice(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
  if (attributes_.empty()) throw Error("a product lattice needs at least one attribute");
  packable_ = attributes_.size() <= 32;
  for (const auto& a : attributes_) {
    if (!a.lattice) throw Error("attribute '" + a.name + "' has no lattice");
    if (a.lattice->size() < 2) {
      throw SizeError("attribute '" + a.name + "' has fewer than two elements");
    }
    if (!a.lattice->is_lattice()) throw NotALattice("attribute '" + a.name + "' is not a lattice");
    if (a.lattice->size() > 4) packable_ = false;
  }

  const std::size_t n = attributes_.size();
  stride_.assign(n, 1);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::size_t k = n; k-- > 0;) {
    stride_[k] = acc;
    const std::uint64_t m = attributes_[k].lattice->size();
    acc = acc > kMax / m ? kMax : acc * m;
  }
  size_ = acc;
}

ProductElement ProductLattice::bottom() const {
  ProductElement x;
  for (const auto& a : attributes_) x.coords.push_back(a.lattice->bottom());
  return x;
}

ProductElement ProductLattice::top() const {
  ProductElement x;
  for (const auto& a : attributes_) x.coords.push_back(a.lattice->top());
  return x;
}

void ProductLattice::validate(const ProductElement& x) const {
  if (x.size() != dimension()) {
    throw DimensionMismatch("element has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(dimension()));
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] >= lattice(k).size()) {
      throw InvalidElement("coordinate " + std::to_string(k) + " is out of range for attribute '" +
                           name(k) + "'");
    }
  }
}

bool ProductLattice::leq(const ProductElement& x, const ProductElement& y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw DimensionMismatch("leq on mismatched elements");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!lattice(k).leq(x[k], y[k])) return false;
  }
  return true;
}

ProductElement ProductLattice::join(const ProductElement& x, const ProductElement& y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw DimensionMismatch("join on mismatched elements");
  ProductElement z = x;
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = lattice(k).join(x[k], y[k]);
  return z;
}

ProductElement ProductLattice::meet(const ProductElement& x, const ProductElement& y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw DimensionMismatch("meet on mismatched elements");
  ProductElement z = x;
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = lattice(k).meet(x[k], y[k]);
  return z;
}

void ProductLattice::require_enumerable(std::uint64_t max_elements) const {
  if (size_ > max_elements) {
    throw SizeError("product lattice has " +
                    (size_ == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                         : std::to_string(size_)) +
                    " elements, above the enumeration limit of " + std::to_string(max_elements));
  }
}

std::uint64_t ProductLattice::index_of(const ProductElement& x) const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < x.size(); ++k) index += stride_[k] * lattice(k).rank(x[k]);
  return index;
}

ProductElement ProductLattice::element_at(std::uint64_t index) const {
  ProductElement x;
  x.coords.resize(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) {
    const std::uint64_t r = index / stride_[k];
    index %= stride_[k];
    x[k] = lattice(k).at_rank(static_cast<std::size_t>(r));
  }
  return x;
}

std::vector<std::string> ProductLattice::labels(const ProductElement& x) const {
  std::vector<std::string> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back(lattice(k).label(x[k]));
  return out;
}

ProductElement ProductLattice::parse(const std::vector<std::string>& labels) const {
  if (labels.size() != dimension()) {
    throw DimensionMismatch("point has " + std::to_string(labels.size()) + " labels, expected " +
                            std::to_string(dimension()));
  }
  ProductElement x;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    auto id = lattice(k).find(labels[k]);
    if (!id) throw UnknownLabel("attribute '" + name(k) + "' has no element '" + labels[k] + "'");
    x.coords.push_back(*id);
  }
  return x;
}

std::string ProductLattice::format(const ProductElement& x) const {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ",";
    s += lattice(k).label(x[k]);
  }
  return s + ")";
}

std::uint64_t ProductLattice::pack(const ProductElement& x) const {
  if (!packable_) throw SizeError("product lattice is not packable into one word");
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < x.size(); ++k) word |= std::uint64_t{x[k]} << (2 * k);
  return word;
}

ProductElement ProductLattice::unpack(std::uint64_t word) const {
  if (!packable_) throw SizeError("product lattice is not packable into one word");
  ProductElement x;
  for (std::size_t k = 0; k < dimension(); ++k) x.coords.push_back(static_cast<ElementId>((word >> (2 * k)) & 3u));
  return x;
}

bool ProductLattice::all_attributes(bool StructureFlags::*flag) const {
  for (const auto& a : attributes_) {
    if (!(a.lattice->flags().*flag)) return false;
  }
  return true;
}

VertexRange::VertexRange(const ProductLattice& lattice, PartialAssignment fixed) : lattice_(&lattice) {
  const std::size_t n = lattice.dimension();
  if (fixed.empty()) fixed.resize(n);
  if (fixed.size() != n) throw DimensionMismatch("partial assignment has the wrong number of coordinates");
  base_.coords.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (fixed[k]) {
      if (*fixed[k] >= lattice.lattice(k).size()) throw InvalidElement("fixed coordinate out of range");
      base_[k] = *fixed[k];
    } else {
      base_[k] = lattice.lattice(k).bottom();
      free_.push_back(k);
    }
  }
  if (free_.size() >= 63) throw SizeError("too many free coordinates to enumerate vertices");
  count_ = std::uint64_t{1} << free_.size();
}

VertexRange::iterator::iterator(const VertexRange* range, std::uint64_t counter)
    : range_(range), counter_(counter) {
  load();
}

void VertexRange::iterator::load() {
  if (counter_ >= range_->count_) return;
  current_ = range_->base_;
  for (std::size_t b = 0; b < range_->free_.size(); ++b) {
    const std::size_t k = range_->free_[b];
    const auto& L = range_->lattice_->lattice(k);
    current_[k] = (counter_ >> b) & 1u ? L.top() : L.bottom();
  }
}

VertexRange::iterator& VertexRange::iterator::operator++() {
  ++counter_;
  load();
  return *this;
}

VertexRange vertices(const ProductLattice& lattice, PartialAssignment fixed) {
  return VertexRange(lattice, std::move(fixed));
}

std::size_t height(const ProductLattice& lattice, const ProductElement& x) {
  lattice.validate(x);
  std::size_t h = 0;
  for (std::size_t k = 0; k < x.size(); ++k) h += x[k] == lattice.lattice(k).top();
  return h;
}

std::size_t nonbottom_count(const ProductLattice& lattice, const ProductElement& x) {
  lattice.validate(x);
  std::size_t count = 0;
  for (std::size_t k = 0; k < x.size(); ++k) count += x[k] != lattice.lattice(k).bottom();
  return count;
}

std::vector<ProductJoinIrreducible> product_join_irreducibles(const ProductLattice& lattice) {
  std::vector<ProductJoinIrreducible> out;
  for (std::size_t k = 0; k < lattice.dimension(); ++k) {
    for (ElementId i : lattice.lattice(k).join_irreducibles().members) out.push_back({k, i});
  }
  return out;
}

ProductElement to_element(const ProductLattice& lattice, const ProductJoinIrreducible& i) {
  ProductElement x = lattice.bottom();
  x.coords.at(i.attribute) = i.element;
  return x;
}

ProductJoinIrreducible as_join_irreducible(const ProductLattice& lattice, const ProductElement& x) {
  lattice.validate(x);
  std::optional<ProductJoinIrreducible> found;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == lattice.lattice(k).bottom()) continue;
    if (found) throw NotJoinIrreducible(lattice.format(x) + " has more than one non-bottom coordinate");
    found = ProductJoinIrreducible{k, x[k]};
  }
  if (!found) throw NotJoinIrreducible("the bottom element is not join-irreducible");
  if (!lattice.lattice(found->attribute).join_irreducibles().contains(found->element)) {
    throw NotJoinIrreducible(lattice.format(x) + " is not join-irreducible");
  }
  return *found;
}

std::vector<ProductElement> interval(const ProductLattice& lattice, const ProductElement& a,
                                     const ProductElement& b) {
  lattice.validate(a);
  lattice.validate(b);
  if (!lattice.leq(a, b)) throw OrderError("interval bounds " + lattice.format(a) + " and " + lattice.format(b) + " are not ordered");
  std::vector<std::vector<ElementId>> axes;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const FiniteLattice& L = lattice.lattice(k);
    std::vector<ElementId> axis = interval(L, a[k], b[k]);
    std::sort(axis.begin(), axis.end(), [&](ElementId p, ElementId q) { return L.rank(p) < L.rank(q); });
    axes.push_back(std::move(axis));
  }
  std::vector<ProductElement> out;
  std::vector<std::size_t> pos(a.size(), 0);
  while (true) {
    ProductElement z;
    for (std::size_t k = 0; k < a.size(); ++k) z.coords.push_back(axes[k][pos[k]]);
    out.push_back(std::move(z));
    std::size_t k = a.size();
    while (k > 0) {
      --k;
      if (++pos[k] < axes[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

LtildeWitness ltilde_witness(const ProductLattice& lattice, const ProductElement& x) {
  lattice.validate(x);
  LtildeWitness w;
  w.underline.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const FiniteLattice& L = lattice.lattice(k);
    if (x[k] == L.bottom()) continue;

    std::vector<ElementId> decomposition;
    try {
      decomposition = minimal_decomposition(L, x[k]);
    } catch (const NotLLDError& e) {
      throw NotInLtilde(lattice.format(x) + ": coordinate '" + lattice.name(k) +
                        "' has no unique minimal decomposition (" + e.what() + ")");
    }

    std::optional<ElementId> common;
    for (ElementId c : L.lower_covers(decomposition.front())) {
      bool all = true;
      for (ElementId i : decomposition) all = all && L.covers(i, c);
      if (!all) continue;
      if (common) {
        throw NotInLtilde(lattice.format(x) + ": coordinate '" + lattice.name(k) +
                          "' has several common predecessors");
      }
      common = c;
    }
    if (!common) {
      throw NotInLtilde(lattice.format(x) + ": members of the minimal decomposition of coordinate '" +
                        lattice.name(k) + "' do not cover a common element");
    }
    w.support.push_back(k);
    w.underline[k] = *common;
  }
  return w;
}

bool in_ltilde(const ProductLattice& lattice, const ProductElement& x) {
  try {
    ltilde_witness(lattice, x);
    return true;
  } catch (const NotInLtilde&) {
    return false;
  }
}

FiniteLattice materialize(const ProductLattice& lattice, std::uint64_t max_elements) {
  lattice.require_enumerable(max_elements);
  const std::uint64_t count = lattice.size();
  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> covers;
  labels.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ProductElement x = lattice.element_at(idx);
    labels.push_back(lattice.format(x));
    for (std::size_t k = 0; k < x.size(); ++k) {
      const ElementId original = x[k];
      for (ElementId up : lattice.lattice(k).upper_covers(original)) {
        x[k] = up;
        covers.emplace_back(static_cast<ElementId>(idx), static_cast<ElementId>(lattice.index_of(x)));
      }
      x[k] = original;
    }
  }
  return build_lattice(std::move(labels), covers);
}

}  // namespace latint
