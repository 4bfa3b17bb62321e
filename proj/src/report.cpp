#include "latint/report.hpp"

#include <algorithm>

#include "latint/errors.hpp"
#include "latint/interaction.hpp"
#include "latint/parallel.hpp"
#include "latint/transforms.hpp"

namespace latint {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv(std::uint64_t& hash, std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= kFnvPrime;
  }
  // separator so that concatenations stay distinct
  hash ^= 0xff;
  hash *= kFnvPrime;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::direct:
      return "direct";
    case Method::mobius:
      return "mobius";
    case Method::both:
      return "both";
  }
  return "direct";
}

Method parse_method(std::string_view text) {
  if (text == "direct") return Method::direct;
  if (text == "mobius") return Method::mobius;
  if (text == "both") return Method::both;
  throw Error("unknown method '" + std::string(text) + "'");
}

std::size_t InteractionReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const InteractionEntry& e) { return e.direct && e.mobius && !e.agree(); }));
}

InteractionReport compute_interactions(const ProductFunction& v, std::span<const ProductElement> targets,
                                       const CoefficientScheme& scheme, const InteractionOptions& options) {
  const ProductLattice& P = v.lattice();
  InteractionReport report;
  report.scheme = scheme.name();
  report.requested = options.method;
  report.used = options.method;
  report.lattice_fingerprint = fingerprint(P);
  report.function_fingerprint = fingerprint(v, options.max_elements);

  if (options.method != Method::direct && !P.all_attributes(&StructureFlags::is_distributive)) {
    report.used = Method::direct;
    report.warnings.push_back("some attribute is not distributive; Möbius form unavailable, using the direct form");
  }
  const bool want_direct = report.used != Method::mobius;
  const bool want_mobius = report.used != Method::direct;

  std::optional<ProductFunction> m;
  if (want_mobius) m = mobius(v, options.max_elements);

  report.entries.resize(targets.size());
  parallel_for(targets.size(), options.threads, [&](std::size_t t) {
    InteractionEntry& entry = report.entries[t];
    entry.target = targets[t];
    try {
      const LtildeWitness w = ltilde_witness(P, entry.target);
      entry.support = w.support;
      if (w.support.empty()) throw EmptyTarget("the bottom element is not an interaction target");
      if (want_direct) entry.direct = interaction_direct(v, entry.target, scheme);
      if (want_mobius) entry.mobius = interaction_mobius(*m, entry.target, scheme);
    } catch (const NotInLtilde& e) {
      entry.skipped = e.what();
    } catch (const EmptyTarget& e) {
      entry.skipped = e.what();
    }
  });

  const bool linear = P.all_attributes(&StructureFlags::is_linear);
  for (const InteractionEntry& e : report.entries) {
    if (!linear && e.computed() && e.support.size() > 1) report.extended = true;
  }
  if (report.extended) {
    report.warnings.push_back(
        "multi-attribute targets on non-chain attributes use the extended coefficients alpha^j_k(n) = "
        "alpha1_k(n-j+1)");
  }
  return report;
}

std::vector<ProductElement> irreducible_targets(const ProductLattice& lattice) {
  std::vector<ProductElement> out;
  for (const ProductJoinIrreducible& i : product_join_irreducibles(lattice)) out.push_back(to_element(lattice, i));
  return out;
}

std::vector<ProductElement> ltilde_targets(const ProductLattice& lattice, std::uint64_t max_elements) {
  // Membership is coordinate-wise, so the admissible set is a product of
  // per-attribute admissible values.
  std::vector<std::vector<ElementId>> allowed(lattice.dimension());
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < lattice.dimension(); ++k) {
    const FiniteLattice& L = lattice.lattice(k);
    for (ElementId r = 0; r < L.size(); ++r) {
      const ElementId e = L.at_rank(r);
      ProductElement probe = lattice.bottom();
      probe[k] = e;
      if (e == L.bottom() || in_ltilde(lattice, probe)) allowed[k].push_back(e);
    }
    if (total > max_elements / allowed[k].size() + 1) {
      throw SizeError("admissible target set exceeds " + std::to_string(max_elements) + " elements");
    }
    total *= allowed[k].size();
  }
  if (total - 1 > max_elements) {
    throw SizeError("admissible target set exceeds " + std::to_string(max_elements) + " elements");
  }

  std::vector<ProductElement> out;
  out.reserve(total - 1);
  std::vector<std::size_t> digit(lattice.dimension(), 0);
  ProductElement x = lattice.bottom();
  while (true) {
    // advance the mixed-radix counter, last attribute fastest
    std::size_t k = lattice.dimension();
    while (k > 0) {
      --k;
      if (++digit[k] < allowed[k].size()) {
        x[k] = allowed[k][digit[k]];
        break;
      }
      digit[k] = 0;
      x[k] = allowed[k][0];
      if (k == 0) return out;
    }
    out.push_back(x);
  }
}

std::uint64_t fingerprint(const ProductLattice& lattice) {
  std::uint64_t hash = kFnvOffset;
  for (std::size_t k = 0; k < lattice.dimension(); ++k) {
    const FiniteLattice& L = lattice.lattice(k);
    fnv(hash, lattice.name(k));
    for (const std::string& label : L.labels()) fnv(hash, label);
    for (const auto& [lower, upper] : L.cover_pairs()) {
      fnv(hash, L.label(lower));
      fnv(hash, L.label(upper));
    }
  }
  return hash;
}

std::uint64_t fingerprint(const ProductFunction& function, std::uint64_t max_elements) {
  std::uint64_t hash = kFnvOffset;
  if (function.is_dense()) {
    for (const Rational& value : function.dense_values()) fnv(hash, to_string(value));
  } else {
    for (const Rational& value : function.to_dense(max_elements)) fnv(hash, to_string(value));
  }
  return hash;
}

}  // namespace latint
