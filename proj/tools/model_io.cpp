#include "model_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "latint/errors.hpp"
#include "latint/lattice.hpp"

namespace latint::cli {

namespace {

const json& require(const json& object, const char* key, const std::string& context) {
  if (!object.is_object() || !object.contains(key)) throw ParseError(context + ": missing field '" + key + "'");
  return object.at(key);
}

std::string require_string(const json& value, const std::string& context) {
  if (!value.is_string()) throw ParseError(context + ": expected a string");
  return value.get<std::string>();
}

std::uint64_t require_count(const json& value, const std::string& context) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(context + ": expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

FiniteLattice shorthand_lattice(const json& entry, const std::string& context) {
  if (entry.contains("chain")) {
    const std::uint64_t m = require_count(entry.at("chain"), context + ".chain");
    if (m < 2) throw ParseError(context + ".chain: a chain needs at least two elements");
    return make_chain(static_cast<std::size_t>(m));
  }
  const std::string kind = require_string(entry.at("kind"), context + ".kind");
  if (kind == "boolean") return make_boolean();
  if (kind == "ternary") return make_ternary();
  if (kind == "chain") {
    const std::uint64_t m = require_count(require(entry, "size", context), context + ".size");
    if (m < 2) throw ParseError(context + ".size: a chain needs at least two elements");
    return make_chain(static_cast<std::size_t>(m));
  }
  throw ParseError(context + ".kind: unknown kind '" + kind + "' (expected boolean, ternary or chain)");
}

FiniteLattice explicit_lattice(const json& entry, const std::string& context) {
  const json& elements = require(entry, "elements", context);
  if (!elements.is_array()) throw ParseError(context + ".elements: expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(require_string(elements[i], context + ".elements[" + std::to_string(i) + "]"));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (entry.contains("covers")) {
    const json& list = entry.at("covers");
    if (!list.is_array()) throw ParseError(context + ".covers: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = context + ".covers[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) throw ParseError(where + ": expected [lower, upper]");
      covers.emplace_back(require_string(list[i][0], where), require_string(list[i][1], where));
    }
  }
  try {
    return build_lattice(std::move(labels), covers);
  } catch (const Error& e) {
    throw ParseError(context + ": " + e.what());
  }
}

// Coalition of the coordinates at top; when `bottom` is given, also the
// coordinates at bottom.
void split_coordinates(const ProductLattice& P, const ProductElement& x, Coalition& top, Coalition* bottom) {
  top = 0;
  if (bottom) *bottom = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == P.lattice(k).top()) top |= Coalition{1} << k;
    if (bottom && x[k] == P.lattice(k).bottom()) *bottom |= Coalition{1} << k;
  }
}

void require_power_of_chain(const ProductLattice& P, unsigned n, std::size_t chain, const char* what) {
  bool ok = P.dimension() == n;
  for (std::size_t k = 0; ok && k < P.dimension(); ++k) {
    ok = P.lattice(k).size() == chain && P.lattice(k).flags().is_linear;
  }
  if (!ok) {
    throw ParseError(std::string(what) + " values need a model of " + std::to_string(n) + " chains of " +
                     std::to_string(chain) + " elements");
  }
}

Coalition parse_set(std::string_view text, unsigned n, const std::string& context) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError(context + ": expected a set such as {1,3}");
  }
  text = text.substr(1, text.size() - 2);
  Coalition set = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string item(text.substr(start, end - start));
    std::size_t used = 0;
    unsigned long player = 0;
    try {
      player = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || player < 1 || player > n) {
      throw ParseError(context + ": '" + item + "' is not a player between 1 and " + std::to_string(n));
    }
    const Coalition bit = Coalition{1} << (player - 1);
    if (set & bit) throw ParseError(context + ": player " + item + " listed twice");
    set |= bit;
    start = end + 1;
  }
  return set;
}

Values capacity_values(const json& doc, std::shared_ptr<const ProductLattice> lattice) {
  const std::uint64_t n = require_count(doc.at("n"), "values.n");
  if (n == 0 || n > kMaxCapacityPlayers) {
    throw ParseError("values.n: expected 1 to " + std::to_string(kMaxCapacityPlayers) + " players");
  }
  const json& list = require(doc, "values", "values");
  if (!list.is_array()) throw ParseError("values.values: expected an array");
  std::vector<Rational> raw;
  raw.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) raw.push_back(parse_number(list[i], "values.values[" + std::to_string(i) + "]"));
  Capacity c;
  try {
    c = Capacity::from_values(static_cast<unsigned>(n), std::move(raw));
  } catch (const SizeError& e) {
    throw ParseError(std::string("values.values: ") + e.what());
  }

  if (!lattice) return Values{as_product_function(c), c, std::nullopt};
  require_power_of_chain(*lattice, c.n, 2, "capacity");
  return Values{ProductFunction::computed(lattice,
                                          [c, P = lattice.get()](const ProductElement& x) {
                                            Coalition s = 0;
                                            split_coordinates(*P, x, s, nullptr);
                                            return c(s);
                                          }),
                c, std::nullopt};
}

Values bicapacity_values(const json& doc, std::shared_ptr<const ProductLattice> lattice) {
  const std::uint64_t n = require_count(require(doc, "n", "values"), "values.n");
  if (n == 0 || n > kMaxBiCapacityPlayers) {
    throw ParseError("values.n: expected 1 to " + std::to_string(kMaxBiCapacityPlayers) + " players");
  }
  const json& entries = doc.at("bicapacity");
  if (!entries.is_object()) throw ParseError("values.bicapacity: expected an object keyed by \"{A}|{B}\"");

  BiCapacity b{static_cast<unsigned>(n), {}};
  std::uint64_t size = 1;
  for (unsigned i = 0; i < b.n; ++i) size *= 3;
  std::vector<bool> seen(size, false);
  b.values.assign(size, Rational(0));
  for (const auto& [key, value] : entries.items()) {
    const std::string context = "values.bicapacity[\"" + key + "\"]";
    const std::size_t bar = key.find('|');
    if (bar == std::string::npos) throw ParseError(context + ": key must read {A}|{B}");
    const Coalition a = parse_set(std::string_view(key).substr(0, bar), b.n, context);
    const Coalition neg = parse_set(std::string_view(key).substr(bar + 1), b.n, context);
    if (a & neg) throw ParseError(context + ": A and B are not disjoint");
    const std::uint64_t index = b.index(a, neg);
    if (seen[index]) throw ParseError(context + ": pair listed twice");
    seen[index] = true;
    b.values[index] = parse_number(value, context);
  }
  const bool has_default = doc.contains("default");
  const Rational fallback = has_default ? parse_number(doc.at("default"), "values.default") : Rational(0);
  for (std::uint64_t index = 0; index < size; ++index) {
    if (seen[index]) continue;
    if (!has_default) {
      const BiCoalition pair = b.coalition(index);
      throw ParseError("values.bicapacity: no value for pair index " + std::to_string(index) + " (A mask " +
                       std::to_string(pair.positive) + ", B mask " + std::to_string(pair.negative) +
                       ") and no default");
    }
    b.values[index] = fallback;
  }

  if (!lattice) return Values{as_product_function(b), std::nullopt, b};
  require_power_of_chain(*lattice, b.n, 3, "bicapacity");
  return Values{ProductFunction::computed(lattice,
                                          [b, P = lattice.get()](const ProductElement& x) {
                                            Coalition a = 0;
                                            Coalition neg = 0;
                                            split_coordinates(*P, x, a, &neg);
                                            return b(a, neg);
                                          }),
                std::nullopt, b};
}

std::vector<std::string> point_labels(const json& point, const std::string& context) {
  if (!point.is_array()) throw ParseError(context + ": expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < point.size(); ++i) {
    labels.push_back(require_string(point[i], context + "[" + std::to_string(i) + "]"));
  }
  return labels;
}

ProductElement parse_point(const ProductLattice& P, const json& point, const std::string& context) {
  try {
    return P.parse(point_labels(point, context));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(context + ": " + e.what());
  }
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Rational parse_number(const json& value, const std::string& context) {
  try {
    if (value.is_number_integer()) return parse_rational(value.dump());
    if (value.is_number_float()) return rational_from_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(context + ": " + e.what());
  }
  throw ParseError(context + ": expected a number or a \"p/q\" string");
}

std::vector<Attribute> parse_attributes(const json& model) {
  if (!model.is_object()) throw ParseError("model: expected an object");
  std::vector<Attribute> out;
  if (!model.contains("attributes")) {
    if (!model.contains("size")) throw ParseError("model: missing field 'attributes'");
    const std::uint64_t n = require_count(model.at("size"), "model.size");
    if (n == 0) throw ParseError("model.size: need at least one attribute");
    auto lattice = std::make_shared<const FiniteLattice>(shorthand_lattice(model, "model"));
    for (std::uint64_t k = 0; k < n; ++k) out.push_back({std::to_string(k + 1), lattice});
    return out;
  }

  const json& list = model.at("attributes");
  if (!list.is_array() || list.empty()) throw ParseError("model.attributes: expected a non-empty array");
  std::set<std::string> names;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string context = "model.attributes[" + std::to_string(k) + "]";
    const json& entry = list[k];
    if (!entry.is_object()) throw ParseError(context + ": expected an object");
    std::string name = entry.contains("name") ? require_string(entry.at("name"), context + ".name") : std::to_string(k + 1);
    if (!names.insert(name).second) throw ParseError(context + ".name: duplicate attribute '" + name + "'");
    FiniteLattice lattice = entry.contains("elements") ? explicit_lattice(entry, context)
                            : (entry.contains("kind") || entry.contains("chain"))
                                ? shorthand_lattice(entry, context)
                                : throw ParseError(context + ": needs 'elements' or a shorthand 'kind'/'chain'");
    out.push_back({std::move(name), std::make_shared<const FiniteLattice>(std::move(lattice))});
  }
  return out;
}

Values parse_values(const json& doc, std::shared_ptr<const ProductLattice> lattice, const std::string& column,
                    std::uint64_t max_elements) {
  if (!doc.is_object()) throw ParseError("values: expected an object");
  if (doc.contains("bicapacity")) return bicapacity_values(doc, lattice);
  if (doc.contains("n")) return capacity_values(doc, lattice);
  if (!lattice) throw ParseError("values: a model is required unless the values use the capacity or bicapacity form");
  const ProductLattice& P = *lattice;

  if (doc.contains("values")) {
    if (doc.contains("order") && doc.at("order") != "lex") {
      throw ParseError("values.order: only \"lex\" is supported");
    }
    const json& list = doc.at("values");
    if (!list.is_array()) throw ParseError("values.values: expected an array");
    P.require_enumerable(max_elements);
    if (list.size() != P.size()) {
      throw ParseError("values.values: expected " + std::to_string(P.size()) + " entries in lexicographic order, got " +
                       std::to_string(list.size()));
    }
    std::vector<Rational> dense;
    dense.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) dense.push_back(parse_number(list[i], "values.values[" + std::to_string(i) + "]"));
    return Values{ProductFunction::dense(lattice, std::move(dense)), std::nullopt, std::nullopt};
  }

  const bool rows = doc.contains("rows");
  const char* list_key = rows ? "rows" : "points";
  if (!doc.contains(list_key)) throw ParseError("values: expected 'values', 'points', 'rows', 'n' or 'bicapacity'");
  const json& list = doc.at(list_key);
  if (!list.is_array()) throw ParseError(std::string("values.") + list_key + ": expected an array");
  const std::string value_key = rows ? column : "value";

  std::map<ProductElement, Rational> points;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string context = std::string("values.") + list_key + "[" + std::to_string(i) + "]";
    const ProductElement x = parse_point(P, require(list[i], "point", context), context + ".point");
    Rational value = parse_number(require(list[i], value_key.c_str(), context), context + "." + value_key);
    if (!points.emplace(x, std::move(value)).second) {
      throw ParseError(context + ".point: " + P.format(x) + " listed twice");
    }
  }
  const Rational fallback = doc.contains("default") ? parse_number(doc.at("default"), "values.default") : Rational(0);
  return Values{ProductFunction::sparse(lattice, std::move(points), fallback), std::nullopt, std::nullopt};
}

ProductElement parse_element(const ProductLattice& lattice, std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<std::string> labels;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      labels.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in element '" + std::string(text) + "'");
  labels.push_back(current);
  return lattice.parse(labels);
}

}  // namespace latint::cli
