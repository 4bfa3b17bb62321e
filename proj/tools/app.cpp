#include "app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "latint/classical.hpp"
#include "latint/derivative.hpp"
#include "latint/errors.hpp"
#include "latint/interaction.hpp"
#include "latint/parallel.hpp"
#include "latint/report.hpp"
#include "latint/transforms.hpp"
#include "model_io.hpp"

namespace latint::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { csv, json };

struct Options {
  std::string model;
  std::string values;
  std::string out;
  std::string format;
  unsigned threads = 0;            // 0: one per hardware thread
  std::uint64_t max_elements = 0;  // 0: environment or built-in default
  std::string scheme = "shapley";
  std::string method = "direct";
  bool verify = false;
  std::string target = "all-ltilde";
  std::string x;
  std::string y;
  bool inverse = false;
  std::vector<std::string> suites;
};

std::uint64_t element_limit(const Options& o) {
  if (o.max_elements != 0) return o.max_elements;
  if (const char* env = std::getenv("LATINT_MAX_ELEMENTS"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw ParseError("LATINT_MAX_ELEMENTS must be a positive integer");
    return value;
  }
  return kDefaultMaxElements;
}

unsigned thread_count(const Options& o) { return o.threads != 0 ? o.threads : default_threads(); }

Format output_format(const Options& o) {
  if (o.format == "csv") return Format::csv;
  if (o.format == "json") return Format::json;
  const std::string_view out = o.out;
  return out.size() >= 4 && out.substr(out.size() - 4) == ".csv" ? Format::csv : Format::json;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

class Csv {
 public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) text_ << (i ? "," : "") << csv_field(fields[i]);
    text_ << "\n";
  }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write '" + o.out + "'");
  file << text;
  if (!file) throw Error("failed writing '" + o.out + "'");
}

std::string emit_json(const ojson& doc) { return doc.dump(2) + "\n"; }

std::string hex(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::vector<std::string> attribute_names(const ProductLattice& P) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < P.dimension(); ++k) names.push_back(P.name(k));
  return names;
}

std::shared_ptr<const ProductLattice> load_lattice(const std::string& path) {
  std::vector<Attribute> attributes = parse_attributes(read_json(path));
  for (const Attribute& a : attributes) {
    if (!a.lattice->is_lattice()) throw NotALattice("attribute '" + a.name + "' is not a lattice");
  }
  return make_product(std::move(attributes));
}

Values load_values(const Options& o, const std::string& column) {
  if (o.values.empty()) throw ParseError("--values is required");
  std::shared_ptr<const ProductLattice> lattice;
  if (!o.model.empty()) lattice = load_lattice(o.model);
  return parse_values(read_json(o.values), lattice, column, element_limit(o));
}

const std::vector<std::pair<const char*, bool StructureFlags::*>>& flag_fields() {
  static const std::vector<std::pair<const char*, bool StructureFlags::*>> fields = {
      {"is_lattice", &StructureFlags::is_lattice},
      {"is_distributive", &StructureFlags::is_distributive},
      {"is_modular", &StructureFlags::is_modular},
      {"is_lower_semimodular", &StructureFlags::is_lower_semimodular},
      {"is_lower_locally_distributive", &StructureFlags::is_lower_locally_distributive},
      {"is_linear", &StructureFlags::is_linear},
      {"is_boolean", &StructureFlags::is_boolean},
      {"is_atomistic", &StructureFlags::is_atomistic},
  };
  return fields;
}

// check

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.model.empty()) throw ParseError("--model is required");
  const std::vector<Attribute> attributes = parse_attributes(read_json(o.model));

  bool all_lattices = true;
  std::size_t irreducible_total = 0;
  std::vector<std::string> warnings;
  ojson doc{{"command", "check"}};
  ojson rows = ojson::array();
  Csv csv;
  std::vector<std::string> header = {"attribute", "elements", "join_irreducibles"};
  for (const auto& [name, field] : flag_fields()) header.push_back(name);
  csv.row(header);

  for (const Attribute& a : attributes) {
    const FiniteLattice& L = *a.lattice;
    const StructureFlags& flags = L.flags();
    all_lattices = all_lattices && flags.is_lattice;
    irreducible_total += L.join_irreducibles().size();
    if (!flags.is_lattice) {
      warnings.push_back("attribute '" + a.name + "' is not a lattice");
    } else if (!flags.is_lower_locally_distributive) {
      warnings.push_back("attribute '" + a.name +
                         "' is not lower locally distributive; elements without a unique minimal decomposition "
                         "cannot be derivative directions or interaction targets");
    }
    ojson row{{"name", a.name}, {"elements", L.size()}, {"join_irreducibles", L.join_irreducibles().size()}};
    ojson flag_object;
    std::vector<std::string> fields = {a.name, std::to_string(L.size()), std::to_string(L.join_irreducibles().size())};
    for (const auto& [key, field] : flag_fields()) {
      flag_object[key] = flags.*field;
      fields.push_back(bool_text(flags.*field));
    }
    row["flags"] = flag_object;
    rows.push_back(row);
    csv.row(fields);
  }
  doc["attributes"] = rows;

  std::uint64_t size = 1;
  for (const Attribute& a : attributes) {
    const std::uint64_t factor = a.lattice->size();
    size = size > UINT64_MAX / factor ? UINT64_MAX : size * factor;
  }
  doc["product"] = ojson{{"dimension", attributes.size()}, {"size", size}, {"join_irreducibles", irreducible_total}};
  doc["warnings"] = warnings;
  csv.row({"*", std::to_string(size), std::to_string(irreducible_total)});

  for (const std::string& w : warnings) err << "warning: " << w << "\n";
  emit(o, out, output_format(o) == Format::csv ? csv.str() : emit_json(doc));
  return all_lattices ? kExitOk : kExitInput;
}

// mobius

// Lexicographic dense values of a capacity or bi-capacity transformed on the
// bitset path, for products above the enumeration limit.
std::vector<Rational> fast_transform(const Values& values, bool inverse) {
  const ProductLattice& P = values.function.lattice();
  std::vector<Rational> native;
  if (values.capacity) {
    native = values.capacity->values;
    inverse ? fast_boolean_zeta(std::span<Rational>(native), kMaxCapacityPlayers)
            : fast_boolean_mobius(std::span<Rational>(native), kMaxCapacityPlayers);
  } else {
    if (inverse) throw SizeError("the inverse bitset path is only available for capacities");
    native = bicap_mobius(*values.bicapacity);
  }
  std::vector<Rational> lex(P.size());
  for (std::uint64_t index = 0; index < lex.size(); ++index) {
    const ProductElement x = P.element_at(index);
    Coalition top = 0;
    Coalition bottom = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == P.lattice(k).top()) top |= Coalition{1} << k;
      if (x[k] == P.lattice(k).bottom()) bottom |= Coalition{1} << k;
    }
    lex[index] = values.capacity ? native[top] : native[values.bicapacity->index(top, bottom)];
  }
  return lex;
}

int cmd_mobius(const Options& o, std::ostream& out, std::ostream&) {
  const Values values = load_values(o, o.inverse ? "m" : "v");
  const ProductLattice& P = values.function.lattice();
  const std::uint64_t limit = element_limit(o);

  std::vector<Rational> input;
  std::vector<Rational> output;
  if (P.size() <= limit) {
    input = values.function.to_dense(limit);
    output = o.inverse ? zeta(P, std::span<const Rational>(input), limit)
                       : mobius(P, std::span<const Rational>(input), limit);
  } else if (values.capacity || values.bicapacity) {
    input = values.function.to_dense(P.size());
    output = fast_transform(values, o.inverse);
  } else {
    throw SizeError("product has " + std::to_string(P.size()) + " elements, above the limit of " +
                    std::to_string(limit) +
                    "; raise --max-elements or LATINT_MAX_ELEMENTS, or give boolean and ternary models capacity or "
                    "bicapacity values to use the bitset path");
  }

  const std::vector<Rational>& v = o.inverse ? output : input;
  const std::vector<Rational>& m = o.inverse ? input : output;
  if (output_format(o) == Format::csv) {
    Csv csv;
    std::vector<std::string> header = attribute_names(P);
    for (const char* column : {"v", "v_decimal", "m", "m_decimal"}) header.push_back(column);
    csv.row(header);
    for (std::uint64_t index = 0; index < v.size(); ++index) {
      std::vector<std::string> fields = P.labels(P.element_at(index));
      fields.push_back(to_string(v[index]));
      fields.push_back(to_decimal(v[index]));
      fields.push_back(to_string(m[index]));
      fields.push_back(to_decimal(m[index]));
      csv.row(fields);
    }
    emit(o, out, csv.str());
  } else {
    ojson rows = ojson::array();
    for (std::uint64_t index = 0; index < v.size(); ++index) {
      rows.push_back(ojson{{"point", P.labels(P.element_at(index))},
                           {"v", to_string(v[index])},
                           {"v_decimal", to_decimal(v[index])},
                           {"m", to_string(m[index])},
                           {"m_decimal", to_decimal(m[index])}});
    }
    ojson doc{{"command", "mobius"}, {"inverse", o.inverse}, {"attributes", attribute_names(P)}, {"rows", rows}};
    emit(o, out, emit_json(doc));
  }
  return kExitOk;
}

// derivative

const char* kind_text(DerivativeKind kind) {
  switch (kind) {
    case DerivativeKind::zero:
      return "zero";
    case DerivativeKind::boolean:
      return "boolean";
    case DerivativeKind::non_boolean:
      return "non_boolean";
  }
  return "non_boolean";
}

int cmd_derivative(const Options& o, std::ostream& out, std::ostream&) {
  const Values values = load_values(o, "v");
  const ProductFunction& f = values.function;
  const ProductLattice& P = f.lattice();
  const ProductElement x = parse_element(P, o.x);
  const ProductElement y = parse_element(P, o.y);

  const DerivativeKind kind = classify_derivative(P, y, x);
  const Rational value = derivative(f, y, x);
  std::optional<Rational> via_mobius;
  if (kind == DerivativeKind::boolean && P.size() <= element_limit(o)) {
    via_mobius = derivative_via_mobius(mobius(f, element_limit(o)), y, x);
  }
  const bool agree = !via_mobius || *via_mobius == value;

  ojson directions = ojson::array();
  for (const ProductJoinIrreducible& i : minimal_decomposition(P, y)) {
    directions.push_back(ojson{{"attribute", P.name(i.attribute)}, {"element", P.lattice(i.attribute).label(i.element)}});
  }
  if (output_format(o) == Format::csv) {
    Csv csv;
    csv.row({"x", "y", "kind", "value", "decimal", "mobius", "agree"});
    csv.row({P.format(x), P.format(y), kind_text(kind), to_string(value), to_decimal(value),
             via_mobius ? to_string(*via_mobius) : "", via_mobius ? bool_text(agree) : ""});
    emit(o, out, csv.str());
  } else {
    ojson doc{{"command", "derivative"}, {"x", P.labels(x)}, {"y", P.labels(y)}, {"directions", directions},
              {"kind", kind_text(kind)}, {"value", to_string(value)}, {"decimal", to_decimal(value)}};
    if (via_mobius) {
      doc["mobius"] = to_string(*via_mobius);
      doc["agree"] = agree;
    }
    emit(o, out, emit_json(doc));
  }
  return agree ? kExitOk : kExitVerification;
}

// interact

std::vector<ProductElement> resolve_targets(const ProductLattice& P, const std::string& target, std::uint64_t limit) {
  if (target == "all-irreducible") return irreducible_targets(P);
  if (target == "all-ltilde") return ltilde_targets(P, limit);
  return {parse_element(P, target)};
}

std::vector<std::string> support_names(const ProductLattice& P, const InteractionEntry& e) {
  std::vector<std::string> names;
  for (std::size_t k : e.support) names.push_back(P.name(k));
  return names;
}

std::string join(const std::vector<std::string>& parts, const char* separator) {
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? separator : "") + parts[i];
  return text;
}

int cmd_interact(const Options& o, std::ostream& out, std::ostream& err) {
  const Values values = load_values(o, "v");
  const ProductLattice& P = values.function.lattice();
  const CoefficientScheme scheme = CoefficientScheme::from_name(o.scheme);
  InteractionOptions options;
  options.method = o.verify ? Method::both : parse_method(o.method);
  options.threads = thread_count(o);
  options.max_elements = element_limit(o);

  const std::vector<ProductElement> targets = resolve_targets(P, o.target, options.max_elements);
  const InteractionReport report = compute_interactions(values.function, targets, scheme, options);
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  const bool both = report.used == Method::both;

  if (output_format(o) == Format::csv) {
    Csv csv;
    std::vector<std::string> header = attribute_names(P);
    header.push_back("K");
    if (both) {
      for (const char* c : {"direct", "direct_decimal", "mobius", "mobius_decimal", "agree"}) header.push_back(c);
    } else {
      for (const char* c : {"method", "value", "decimal"}) header.push_back(c);
    }
    header.push_back("status");
    csv.row(header);
    for (const InteractionEntry& e : report.entries) {
      std::vector<std::string> fields = P.labels(e.target);
      fields.push_back(join(support_names(P, e), ";"));
      if (!e.computed()) {
        fields.resize(fields.size() + (both ? 5 : 3));
        fields.push_back("skipped: " + e.skipped);
      } else if (both) {
        fields.push_back(to_string(*e.direct));
        fields.push_back(to_decimal(*e.direct));
        fields.push_back(to_string(*e.mobius));
        fields.push_back(to_decimal(*e.mobius));
        fields.push_back(bool_text(e.agree()));
        fields.push_back("ok");
      } else {
        fields.push_back(to_string(report.used));
        fields.push_back(to_string(e.value()));
        fields.push_back(to_decimal(e.value()));
        fields.push_back("ok");
      }
      csv.row(fields);
    }
    emit(o, out, csv.str());
  } else {
    ojson rows = ojson::array();
    for (const InteractionEntry& e : report.entries) {
      ojson row{{"target", P.labels(e.target)}, {"K", support_names(P, e)}};
      if (!e.computed()) {
        row["skipped"] = e.skipped;
      } else if (both) {
        row["direct"] = to_string(*e.direct);
        row["direct_decimal"] = to_decimal(*e.direct);
        row["mobius"] = to_string(*e.mobius);
        row["mobius_decimal"] = to_decimal(*e.mobius);
        row["agree"] = e.agree();
      } else {
        row["value"] = to_string(e.value());
        row["decimal"] = to_decimal(e.value());
      }
      rows.push_back(row);
    }
    ojson doc{{"command", "interact"},
              {"scheme", report.scheme},
              {"method_requested", to_string(report.requested)},
              {"method", to_string(report.used)},
              {"lattice_fingerprint", hex(report.lattice_fingerprint)},
              {"function_fingerprint", hex(report.function_fingerprint)},
              {"extended", report.extended},
              {"warnings", report.warnings},
              {"attributes", attribute_names(P)},
              {"rows", rows}};
    emit(o, out, emit_json(doc));
  }
  if (report.disagreements() > 0) {
    err << "error: " << report.disagreements() << " target(s) disagree between the direct and Möbius forms\n";
    return kExitVerification;
  }
  return kExitOk;
}

// verify

struct SuiteResult {
  std::string suite;
  std::string status;  // pass, fail or skipped
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<ProductElement> target;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string detail;
};

SuiteResult skipped(const std::string& suite, const std::string& reason) {
  SuiteResult r;
  r.suite = suite;
  r.status = "skipped";
  r.detail = reason;
  return r;
}

void finish(SuiteResult& r) { r.status = r.failures == 0 ? "pass" : "fail"; }

std::vector<ProductElement> nonbottom_elements(const ProductLattice& P, std::uint64_t limit) {
  P.require_enumerable(limit);
  std::vector<ProductElement> out;
  for (std::uint64_t index = 1; index < P.size(); ++index) out.push_back(P.element_at(index));
  return out;
}

SuiteResult suite_efficiency(const ProductFunction& v, const CoefficientScheme& scheme) {
  const ProductLattice& P = v.lattice();
  if (scheme.kind() != SchemeKind::shapley) return skipped("efficiency", "efficiency characterizes the Shapley scheme");
  if (!P.all_attributes(&StructureFlags::is_linear)) return skipped("efficiency", "needs every attribute to be a chain");
  const EfficiencyResult e = efficiency_check(v, scheme);
  SuiteResult r;
  r.suite = "efficiency";
  r.checked = 1;
  r.failures = e.pass ? 0 : 1;
  r.lhs = e.lhs;
  r.rhs = e.rhs;
  finish(r);
  return r;
}

SuiteResult suite_recursion(const ProductFunction& v, const CoefficientScheme& scheme, unsigned threads,
                            std::uint64_t limit) {
  const ProductLattice& P = v.lattice();
  if (!P.all_attributes(&StructureFlags::is_linear)) return skipped("recursion", "needs every attribute to be a chain");
  const std::vector<ProductElement> targets = nonbottom_elements(P, limit);
  std::vector<RecursionResult> results(targets.size());
  parallel_for(targets.size(), threads, [&](std::size_t t) { results[t] = recursion_check(v, targets[t], scheme); });

  SuiteResult r;
  r.suite = "recursion";
  r.checked = targets.size();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (results[t].pass) continue;
    if (r.failures++ == 0) {
      r.target = targets[t];
      r.lhs = results[t].lhs;
      r.rhs = results[t].rhs;
    }
  }
  finish(r);
  return r;
}

SuiteResult suite_mobius_equiv(const ProductFunction& v, const CoefficientScheme& scheme, unsigned threads,
                               std::uint64_t limit) {
  const ProductLattice& P = v.lattice();
  if (!P.all_attributes(&StructureFlags::is_distributive)) {
    return skipped("mobius-equiv", "needs every attribute to be distributive");
  }
  InteractionOptions options;
  options.method = Method::both;
  options.threads = threads;
  options.max_elements = limit;
  const std::vector<ProductElement> targets = ltilde_targets(P, limit);
  const InteractionReport report = compute_interactions(v, targets, scheme, options);

  SuiteResult r;
  r.suite = "mobius-equiv";
  for (const InteractionEntry& e : report.entries) {
    if (!e.computed()) continue;
    ++r.checked;
    if (e.agree()) continue;
    if (r.failures++ == 0) {
      r.target = e.target;
      r.lhs = *e.direct;
      r.rhs = *e.mobius;
    }
  }
  finish(r);
  return r;
}

SuiteResult suite_derivative_boolean(const ProductFunction& v, unsigned threads, std::uint64_t limit) {
  constexpr std::uint64_t kMaxPairsSide = 2048;
  const ProductLattice& P = v.lattice();
  if (!P.all_attributes(&StructureFlags::is_lower_locally_distributive)) {
    return skipped("derivative-boolean", "needs every attribute to be lower locally distributive");
  }
  if (P.size() > std::min(limit, kMaxPairsSide)) {
    return skipped("derivative-boolean", "product too large for the pairwise check (" + std::to_string(P.size()) +
                                             " elements, limit " + std::to_string(std::min(limit, kMaxPairsSide)) + ")");
  }
  const ProductFunction m = mobius(v, limit);
  const std::uint64_t size = P.size();

  struct Row {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::pair<ProductElement, ProductElement>> first;  // (y, x)
    Rational lhs, rhs;
  };
  std::vector<Row> rows(size);
  parallel_for(size, threads, [&](std::size_t yi) {
    const ProductElement y = P.element_at(yi);
    Row& row = rows[yi];
    for (std::uint64_t xi = 0; xi < size; ++xi) {
      const ProductElement x = P.element_at(xi);
      const DerivativeKind kind = classify_derivative(P, y, x);
      if (kind == DerivativeKind::non_boolean) continue;
      const Rational value = derivative(v, y, x);
      const Rational expected = kind == DerivativeKind::zero ? Rational(0) : derivative_via_mobius(m, y, x);
      ++row.checked;
      if (value != expected && row.failures++ == 0) {
        row.first = std::make_pair(y, x);
        row.lhs = value;
        row.rhs = expected;
      }
    }
  });

  SuiteResult r;
  r.suite = "derivative-boolean";
  for (const Row& row : rows) {
    r.checked += row.checked;
    if (row.failures > 0 && r.failures == 0) {
      r.target = row.first->second;
      r.lhs = row.lhs;
      r.rhs = row.rhs;
      r.detail = "y = " + P.format(row.first->first);
    }
    r.failures += row.failures;
  }
  finish(r);
  return r;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const Values values = load_values(o, "v");
  const ProductFunction& v = values.function;
  const ProductLattice& P = v.lattice();
  const CoefficientScheme scheme = CoefficientScheme::from_name(o.scheme);
  const unsigned threads = thread_count(o);
  const std::uint64_t limit = element_limit(o);
  std::vector<std::string> suites = o.suites;
  if (suites.empty()) suites = {"efficiency", "recursion", "mobius-equiv", "derivative-boolean"};

  std::vector<SuiteResult> results;
  for (const std::string& suite : suites) {
    if (suite == "efficiency") {
      results.push_back(suite_efficiency(v, scheme));
    } else if (suite == "recursion") {
      results.push_back(suite_recursion(v, scheme, threads, limit));
    } else if (suite == "mobius-equiv") {
      results.push_back(suite_mobius_equiv(v, scheme, threads, limit));
    } else {
      results.push_back(suite_derivative_boolean(v, threads, limit));
    }
  }

  bool failed = false;
  if (output_format(o) == Format::csv) {
    Csv csv;
    csv.row({"suite", "status", "checked", "failures", "target", "lhs", "rhs", "detail"});
    for (const SuiteResult& r : results) {
      failed = failed || r.status == "fail";
      csv.row({r.suite, r.status, std::to_string(r.checked), std::to_string(r.failures),
               r.target ? P.format(*r.target) : "", r.lhs ? to_string(*r.lhs) : "", r.rhs ? to_string(*r.rhs) : "",
               r.detail});
    }
    emit(o, out, csv.str());
  } else {
    ojson list = ojson::array();
    for (const SuiteResult& r : results) {
      failed = failed || r.status == "fail";
      ojson row{{"suite", r.suite}, {"status", r.status}, {"checked", r.checked}, {"failures", r.failures}};
      if (r.target) row["target"] = P.labels(*r.target);
      if (r.lhs) row["lhs"] = to_string(*r.lhs);
      if (r.rhs) row["rhs"] = to_string(*r.rhs);
      if (!r.detail.empty()) row["detail"] = r.detail;
      list.push_back(row);
    }
    emit(o, out, emit_json(ojson{{"command", "verify"}, {"scheme", scheme.name()}, {"suites", list}}));
  }
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Derivatives, Möbius transforms and interaction indices on products of finite lattices", "latint"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub, bool values) {
    sub->add_option("--model", o.model, "Model JSON file");
    if (values) sub->add_option("--values", o.values, "Values JSON file");
    sub->add_option("--out", o.out, "Output file (default: standard output)");
    sub->add_option("--format", o.format, "Output format (default: from --out, else json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", o.threads, "Worker threads (default: hardware threads)")->check(CLI::PositiveNumber);
    sub->add_option("--max-elements", o.max_elements, "Enumeration limit (default: LATINT_MAX_ELEMENTS or 1000000)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Structure report for every attribute");
  common(check, false);

  CLI::App* mob = app.add_subcommand("mobius", "Möbius transform of the values, one row per element");
  common(mob, true);
  mob->add_flag("--inverse", o.inverse, "Read the m column and rebuild v");

  CLI::App* der = app.add_subcommand("derivative", "Derivative of the values w.r.t. y at x");
  common(der, true);
  der->add_option("--x", o.x, "Point, as (l1,l2,...)")->required();
  der->add_option("--y", o.y, "Direction, as (l1,l2,...)")->required();

  CLI::App* inter = app.add_subcommand("interact", "Importance and interaction indices");
  common(inter, true);
  inter->add_option("--scheme", o.scheme, "shapley or banzhaf")->check(CLI::IsMember({"shapley", "banzhaf"}));
  inter->add_option("--target", o.target, "An element, all-irreducible or all-ltilde");
  inter->add_option("--method", o.method, "direct, mobius or both")->check(CLI::IsMember({"direct", "mobius", "both"}));
  inter->add_flag("--verify", o.verify, "Same as --method both");

  CLI::App* ver = app.add_subcommand("verify", "Identity checks on the values");
  common(ver, true);
  ver->add_option("--scheme", o.scheme, "shapley or banzhaf")->check(CLI::IsMember({"shapley", "banzhaf"}));
  ver->add_option("--suite", o.suites, "efficiency, recursion, mobius-equiv or derivative-boolean (default: all)")
      ->check(CLI::IsMember({"efficiency", "recursion", "mobius-equiv", "derivative-boolean"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (mob->parsed()) return cmd_mobius(o, out, err);
    if (der->parsed()) return cmd_derivative(o, out, err);
    if (inter->parsed()) return cmd_interact(o, out, err);
    return cmd_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "latint: error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace latint::cli
