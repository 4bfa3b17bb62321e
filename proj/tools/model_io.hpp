#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "latint/classical.hpp"
#include "latint/function.hpp"
#include "latint/product.hpp"

namespace latint::cli {

using nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError naming the file and offset.
json read_json(const std::filesystem::path& path);

/// Attribute list of a model document. Accepts explicit attributes
/// {"name", "elements", "covers"}, attribute shorthands {"kind": "boolean" |
/// "ternary"} and {"chain": m}, and the whole-model shorthand
/// {"kind": ..., "size": n} or {"chain": m, "size": n}.
/// Non-lattice attributes are returned as they are; ProductLattice rejects them.
std::vector<Attribute> parse_attributes(const json& model);

/// Exact value of a JSON number or of a "p/q" / decimal string.
Rational parse_number(const json& value, const std::string& context);

struct Values {
  ProductFunction function;
  std::optional<Capacity> capacity;      // set for the capacity shorthand
  std::optional<BiCapacity> bicapacity;  // set for the bicapacity shorthand
};

/// Interprets a values document against `lattice`. A null lattice is allowed
/// for the capacity and bicapacity shorthands, which then define the product.
/// Report documents {"rows": [{"point", <column>}]} are read through `column`.
Values parse_values(const json& values, std::shared_ptr<const ProductLattice> lattice, const std::string& column,
                    std::uint64_t max_elements);

/// "(l1,l2,...)" or "l1,l2,..."; commas inside braces or brackets belong to
/// the label. Throws ParseError, UnknownLabel or DimensionMismatch.
ProductElement parse_element(const ProductLattice& lattice, std::string_view text);

}  // namespace latint::cli
