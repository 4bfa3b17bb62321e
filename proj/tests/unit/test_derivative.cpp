#include <doctest.h>

#include "latint/derivative.hpp"
#include "latint/errors.hpp"
#include "latint/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace latint;
using latint::testing::Rng;
using latint::testing::share;

namespace {

std::vector<std::shared_ptr<const ProductLattice>> fixtures() {
  return {make_power(make_ternary(), 2), make_power(make_boolean(), 3), testing::chain_product({4, 2}),
          make_product({{"d", share(make_diamond())}, {"c", share(make_chain(3))}}),
          make_product({{"g", share(testing::line_convex_geometry())}, {"b", share(make_boolean())}})};
}

}  // namespace

TEST_SUITE("derivative") {
  TEST_CASE("second derivative on 2^2 at the bottom") {
    const auto P = make_power(make_boolean(), 2);
    const ProductFunction v = ProductFunction::dense(P, {Rational(0), Rational(2), Rational(3), Rational(10)});
    // v(12) - v(1) - v(2) + v(empty)
    CHECK(derivative(v, P->top(), P->bottom()) == 10 - 3 - 2 + 0);
  }

  TEST_CASE("single derivative") {
    const auto P = testing::chain_product({3, 2});
    Rng rng(21);
    const ProductFunction v = testing::random_function(rng, P);
    const ProductElement x{{0, 1}};
    const ProductJoinIrreducible i{0, 1};
    CHECK(derivative_single(v, i, x) == v(ProductElement{{1, 1}}) - v(x));
    CHECK(derivative_single(v, to_element(*P, i), x) == derivative_single(v, i, x));
    CHECK_THROWS_AS(derivative_single(v, ProductElement{{1, 1}}, x), NotJoinIrreducible);
  }

  TEST_CASE("derivative matches the recursive definition") {
    Rng rng(22);
    for (const auto& P : fixtures()) {
      const ProductFunction v = testing::random_function(rng, P);
      for (std::uint64_t a = 0; a < P->size(); ++a) {
        for (std::uint64_t b = 0; b < P->size(); ++b) {
          const ProductElement y = P->element_at(a);
          const ProductElement x = P->element_at(b);
          REQUIRE(derivative(v, y, x) == oracle::oracle_derivative(v, y, x));
        }
      }
    }
  }

  TEST_CASE("zero shortcut: a member of eta*(y) below x kills the derivative") {
    Rng rng(23);
    for (const auto& P : fixtures()) {
      const ProductFunction v = testing::random_function(rng, P);
      for (std::uint64_t a = 0; a < P->size(); ++a) {
        for (std::uint64_t b = 0; b < P->size(); ++b) {
          const ProductElement y = P->element_at(a);
          const ProductElement x = P->element_at(b);
          if (classify_derivative(*P, y, x) == DerivativeKind::zero) CHECK(derivative(v, y, x) == 0);
        }
      }
    }
  }

  TEST_CASE("Boolean derivatives equal the Möbius mass of [y, x v y]") {
    Rng rng(24);
    for (const auto& P : fixtures()) {
      const ProductFunction v = testing::random_function(rng, P);
      const ProductFunction m = mobius(v);
      std::size_t boolean_pairs = 0;
      for (std::uint64_t a = 0; a < P->size(); ++a) {
        for (std::uint64_t b = 0; b < P->size(); ++b) {
          const ProductElement y = P->element_at(a);
          const ProductElement x = P->element_at(b);
          if (!is_boolean_derivative(*P, y, x)) {
            CHECK_THROWS_AS(derivative_via_mobius(m, y, x), NotBoolean);
            continue;
          }
          ++boolean_pairs;
          CHECK(classify_derivative(*P, y, x) == DerivativeKind::boolean);
          CAPTURE(P->format(x));
          CAPTURE(P->format(y));
          CHECK(derivative(v, y, x) == derivative_via_mobius(m, y, x));
        }
      }
      CHECK(boolean_pairs > 0);
    }
  }

  TEST_CASE("join-irreducible test alone would accept a chain interval in a convex geometry") {
    const auto P = make_product({{"g", share(testing::line_convex_geometry())}, {"b", share(make_boolean())}});
    // [{3}, {1,2,3}] is a 3-chain although eta({1,2,3}) = eta({3}) u {{1}, {2}}
    const ProductElement x = P->parse({"{3}", "0"});
    const ProductElement y = P->parse({"{1,2}", "0"});
    CHECK(classify_derivative(*P, y, x) == DerivativeKind::non_boolean);
    CHECK(is_boolean_derivative(*P, P->parse({"{2}", "0"}), P->parse({"{1}", "0"})));
  }

  TEST_CASE("iterated derivative over repeated and comparable directions") {
    const auto P = testing::chain_product({4});
    const ProductFunction v =
        ProductFunction::dense(P, {Rational(1), Rational(4), Rational(9), Rational(16)});
    const std::vector<ProductJoinIrreducible> both{{0, 1}, {0, 2}};
    // Delta_1 Delta_2 v(0) = v(1 v 2) - v(1) - v(2) + v(0)
    CHECK(iterated_derivative(v, both, P->bottom()) == 9 - 4 - 9 + 1);
    const std::vector<ProductJoinIrreducible> none;
    CHECK(iterated_derivative(v, none, ProductElement{{2}}) == 9);
    // direction below x
    const std::vector<ProductJoinIrreducible> low{{0, 1}};
    CHECK(iterated_derivative(v, low, ProductElement{{2}}) == 0);
  }

  TEST_CASE("decompositions of product elements") {
    const auto P = make_product({{"d", share(make_diamond())}, {"c", share(make_chain(3))}});
    const ProductElement x = P->parse({"top", "2"});
    CHECK(normal_decomposition(*P, x).size() == 4);
    CHECK(minimal_decomposition(*P, x).size() == 3);
    CHECK(minimal_decomposition(*P, P->bottom()).empty());
    const auto Q = make_product({{"m", share(make_m3())}, {"c", share(make_chain(2))}});
    CHECK_THROWS_AS(minimal_decomposition(*Q, Q->parse({"1", "0"})), NotLLDError);
  }
}
