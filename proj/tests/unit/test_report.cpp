#include <doctest.h>

#include "latint/errors.hpp"
#include "latint/interaction.hpp"
#include "latint/report.hpp"
#include "support/generators.hpp"

using namespace latint;
using latint::testing::Rng;
using latint::testing::share;

TEST_SUITE("report") {
  TEST_CASE("method names") {
    for (Method m : {Method::direct, Method::mobius, Method::both}) CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_method("fast"), Error);
  }

  TEST_CASE("admissible target lists") {
    const auto P = make_power(make_ternary(), 2);
    CHECK(irreducible_targets(*P).size() == 4);
    const std::vector<ProductElement> all = ltilde_targets(*P);
    CHECK(all.size() == 8);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(P->index_of(all[i - 1]) < P->index_of(all[i]));

    const auto G = make_product({{"g", share(testing::line_convex_geometry())}});
    std::size_t admissible = 0;
    for (std::uint64_t t = 1; t < G->size(); ++t) admissible += in_ltilde(*G, G->element_at(t));
    CHECK(ltilde_targets(*G).size() == admissible);
  }

  TEST_CASE("both methods agree and entries keep target order across thread counts") {
    Rng rng(41);
    const auto P = make_product({{"d", share(make_diamond())}, {"c", share(make_chain(3))}});
    const ProductFunction v = testing::random_function(rng, P);
    const std::vector<ProductElement> targets = ltilde_targets(*P);
    InteractionOptions options;
    options.method = Method::both;
    const InteractionReport one = compute_interactions(v, targets, CoefficientScheme::shapley(), options);
    CHECK(one.disagreements() == 0);
    CHECK(one.entries.size() == targets.size());
    CHECK(one.extended);  // diamond is not a chain
    for (unsigned threads : {2u, 4u, 8u}) {
      options.threads = threads;
      const InteractionReport many = compute_interactions(v, targets, CoefficientScheme::shapley(), options);
      REQUIRE(many.entries.size() == one.entries.size());
      for (std::size_t i = 0; i < one.entries.size(); ++i) {
        CHECK(many.entries[i].target == one.entries[i].target);
        CHECK(many.entries[i].value() == one.entries[i].value());
      }
    }
  }

  TEST_CASE("chains are not extended") {
    Rng rng(42);
    const auto P = make_power(make_ternary(), 2);
    const std::vector<ProductElement> targets = ltilde_targets(*P);
    const InteractionReport r =
        compute_interactions(testing::random_function(rng, P), targets, CoefficientScheme::shapley(), {});
    CHECK_FALSE(r.extended);
    CHECK(r.used == Method::direct);
  }

  TEST_CASE("Möbius request on a non-distributive product falls back to direct") {
    Rng rng(43);
    const auto P = make_product({{"m", share(make_m3())}, {"c", share(make_chain(2))}});
    const ProductFunction v = testing::random_function(rng, P);
    std::vector<ProductElement> targets{P->parse({"a", "0"}), P->parse({"1", "0"}), P->bottom()};
    InteractionOptions options;
    options.method = Method::mobius;
    const InteractionReport r = compute_interactions(v, targets, CoefficientScheme::shapley(), options);
    CHECK(r.used == Method::direct);
    CHECK_FALSE(r.warnings.empty());
    CHECK(r.entries[0].computed());
    CHECK_FALSE(r.entries[1].computed());  // top of M3 has no unique minimal decomposition
    CHECK_FALSE(r.entries[1].skipped.empty());
    CHECK_FALSE(r.entries[2].computed());
  }

  TEST_CASE("fingerprints") {
    Rng rng(44);
    const auto P = make_power(make_ternary(), 2);
    const auto Q = make_power(make_ternary(), 2);
    CHECK(fingerprint(*P) == fingerprint(*Q));
    CHECK(fingerprint(*P) != fingerprint(*make_power(make_chain(3), 2)));
    const ProductFunction v = testing::random_function(rng, P);
    const ProductFunction w = ProductFunction::dense(Q, v.to_dense());
    CHECK(fingerprint(v) == fingerprint(w));
    std::vector<Rational> changed = v.to_dense();
    changed[4] += 1;
    CHECK(fingerprint(v) != fingerprint(ProductFunction::dense(P, changed)));
  }
}
