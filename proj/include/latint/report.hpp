#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latint/coefficients.hpp"
#include "latint/function.hpp"
#include "latint/product.hpp"
#include "latint/rational.hpp"

namespace latint {

enum class Method { direct, mobius, both };

std::string to_string(Method method);
/// "direct", "mobius" or "both"; throws Error otherwise.
Method parse_method(std::string_view text);

struct InteractionEntry {
  ProductElement target;
  std::vector<std::size_t> support;  // K
  std::optional<Rational> direct;
  std::optional<Rational> mobius;
  /// Set when the target was rejected; no value is present then.
  std::string skipped;

  bool computed() const { return direct.has_value() || mobius.has_value(); }
  /// The direct value when present, the Möbius value otherwise.
  const Rational& value() const { return direct ? *direct : *mobius; }
  /// Both values present and equal.
  bool agree() const { return direct && mobius && *direct == *mobius; }
};

struct InteractionReport {
  std::string scheme;
  Method requested = Method::direct;
  Method used = Method::direct;
  std::uint64_t lattice_fingerprint = 0;
  std::uint64_t function_fingerprint = 0;
  /// Some target with |K| > 1 was evaluated on a non-chain attribute, where
  /// the coefficient extension alpha^j_k(n) = alpha1_k(n-j+1) is unproven.
  bool extended = false;
  std::vector<std::string> warnings;
  std::vector<InteractionEntry> entries;  // in target order

  /// Rows computed with both methods whose values differ.
  std::size_t disagreements() const;
};

struct InteractionOptions {
  Method method = Method::direct;
  unsigned threads = 1;
  std::uint64_t max_elements = kDefaultMaxElements;
};

/// Evaluates every target, skipping those outside the admissible set with a
/// reason. A Möbius request on a non-distributive product falls back to the
/// direct form with a warning. Entries follow the order of `targets` for any
/// thread count.
InteractionReport compute_interactions(const ProductFunction& v, std::span<const ProductElement> targets,
                                       const CoefficientScheme& scheme, const InteractionOptions& options);

/// Join-irreducibles of the product, attribute by attribute.
std::vector<ProductElement> irreducible_targets(const ProductLattice& lattice);
/// Every non-bottom admissible target, in lexicographic order.
std::vector<ProductElement> ltilde_targets(const ProductLattice& lattice,
                                           std::uint64_t max_elements = kDefaultMaxElements);

/// FNV-1a over attribute names, labels and cover pairs.
std::uint64_t fingerprint(const ProductLattice& lattice);
/// FNV-1a over the dense values in lexicographic order, as "p/q" strings.
std::uint64_t fingerprint(const ProductFunction& function, std::uint64_t max_elements = kDefaultMaxElements);

}  // namespace latint
