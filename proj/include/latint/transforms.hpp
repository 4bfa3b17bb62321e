#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "latint/errors.hpp"
#include "latint/function.hpp"
#include "latint/lattice.hpp"
#include "latint/product.hpp"

// Möbius / zeta pair: g(x) = sum_{y <= x} m(y).
//
// All transforms are templates over the value type so the same code runs in
// exact (Rational) and floating-point (double) mode.

namespace latint {

inline constexpr unsigned kDefaultBooleanLimit = 24;

namespace detail {

/// m(x) = g(x) - sum_{y < x} m(y), visiting x in `order`. Correct only when
/// `order` is a linear extension.
template <class T>
std::vector<T> mobius_in_order(const FiniteLattice& L, std::span<const T> g, std::span<const ElementId> order) {
  if (g.size() != L.size()) throw SizeError("function size does not match the lattice");
  std::vector<T> m(g.begin(), g.end());
  for (ElementId x : order) {
    const Bitset& below = L.down_row(x);
    T acc = g[x];
    for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
      if (y != x) acc -= m[y];
    }
    m[x] = acc;
  }
  return m;
}

template <class T, bool Inverse>
void product_axis_pass(const ProductLattice& P, std::span<T> values) {
  const std::size_t n = P.dimension();
  for (std::size_t k = 0; k < n; ++k) {
    const FiniteLattice& L = P.lattice(k);
    const std::size_t width = L.size();
    std::uint64_t inner = 1, outer = 1;
    for (std::size_t l = k + 1; l < n; ++l) inner *= P.lattice(l).size();
    for (std::size_t l = 0; l < k; ++l) outer *= P.lattice(l).size();

    // Strictly-below lists in rank coordinates.
    std::vector<std::vector<std::size_t>> below(width);
    for (std::size_t r = 0; r < width; ++r) {
      const ElementId x = L.at_rank(r);
      for (std::size_t s = 0; s < r; ++s) {
        if (L.leq(L.at_rank(s), x)) below[r].push_back(s);
      }
    }

    for (std::uint64_t o = 0; o < outer; ++o) {
      for (std::uint64_t i = 0; i < inner; ++i) {
        const std::uint64_t base = o * width * inner + i;
        auto at = [&](std::size_t r) -> T& { return values[base + r * inner]; };
        if constexpr (Inverse) {
          for (std::size_t r = 0; r < width; ++r) {
            for (std::size_t s : below[r]) at(r) -= at(s);
          }
        } else {
          for (std::size_t r = width; r-- > 0;) {
            for (std::size_t s : below[r]) at(r) += at(s);
          }
        }
      }
    }
  }
}

inline unsigned boolean_dimension(std::size_t size, unsigned max_n) {
  if (size == 0 || !std::has_single_bit(size)) throw SizeError("boolean transform needs a power-of-two length");
  const auto n = static_cast<unsigned>(std::countr_zero(size));
  if (n > max_n) {
    throw SizeError("boolean transform on 2^" + std::to_string(n) + " exceeds the limit 2^" + std::to_string(max_n));
  }
  return n;
}

}  // namespace detail

/// Möbius transform on an explicit lattice, in its Kahn linear extension.
template <class T>
std::vector<T> mobius(const FiniteLattice& L, std::span<const T> g) {
  return detail::mobius_in_order(L, g, std::span<const ElementId>(L.linear_extension()));
}

/// Zeta transform by direct summation over down-sets.
template <class T>
std::vector<T> zeta(const FiniteLattice& L, std::span<const T> m) {
  if (m.size() != L.size()) throw SizeError("function size does not match the lattice");
  std::vector<T> g(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    const Bitset& below = L.down_row(static_cast<ElementId>(x));
    T acc = 0;
    for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) acc += m[y];
    g[x] = acc;
  }
  return g;
}

/// Möbius transform over the materialized product (lexicographic order),
/// one attribute axis at a time.
template <class T>
std::vector<T> mobius(const ProductLattice& P, std::span<const T> g,
                      std::uint64_t max_elements = kDefaultMaxElements) {
  P.require_enumerable(max_elements);
  if (g.size() != P.size()) throw SizeError("function size does not match the product lattice");
  std::vector<T> m(g.begin(), g.end());
  detail::product_axis_pass<T, true>(P, std::span<T>(m));
  return m;
}

template <class T>
std::vector<T> zeta(const ProductLattice& P, std::span<const T> m,
                    std::uint64_t max_elements = kDefaultMaxElements) {
  P.require_enumerable(max_elements);
  if (m.size() != P.size()) throw SizeError("function size does not match the product lattice");
  std::vector<T> g(m.begin(), m.end());
  detail::product_axis_pass<T, false>(P, std::span<T>(g));
  return g;
}

/// In-place Möbius transform of a set function stored by subset bitmask.
template <class T>
void fast_boolean_mobius(std::span<T> values, unsigned max_n = kDefaultBooleanLimit) {
  const unsigned n = detail::boolean_dimension(values.size(), max_n);
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & step) values[mask] -= values[mask ^ step];
    }
  }
}

template <class T>
void fast_boolean_zeta(std::span<T> values, unsigned max_n = kDefaultBooleanLimit) {
  const unsigned n = detail::boolean_dimension(values.size(), max_n);
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < values.size(); ++mask) {
      if (mask & step) values[mask] += values[mask ^ step];
    }
  }
}

inline LatticeFunction mobius(const LatticeFunction& g) {
  return {g.domain, mobius(*g.domain, std::span<const Rational>(g.values))};
}

inline LatticeFunction zeta(const LatticeFunction& m) {
  return {m.domain, zeta(*m.domain, std::span<const Rational>(m.values))};
}

inline ProductFunction mobius(const ProductFunction& g, std::uint64_t max_elements = kDefaultMaxElements) {
  const std::vector<Rational> values = g.to_dense(max_elements);
  return ProductFunction::dense(g.lattice_ptr(), mobius(g.lattice(), std::span<const Rational>(values), max_elements));
}

inline ProductFunction zeta(const ProductFunction& m, std::uint64_t max_elements = kDefaultMaxElements) {
  const std::vector<Rational> values = m.to_dense(max_elements);
  return ProductFunction::dense(m.lattice_ptr(), zeta(m.lattice(), std::span<const Rational>(values), max_elements));
}

}  // namespace latint
