#include <doctest.h>

#include <bit>

#include "latint/classical.hpp"
#include "latint/errors.hpp"
#include "latint/interaction.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace latint;
using latint::testing::Rng;

namespace {

// Game element with the players of s at top.
ProductElement boolean_point(const ProductLattice& P, Coalition s) {
  ProductElement x = P.bottom();
  for (std::size_t k = 0; k < P.dimension(); ++k) {
    if (s & (Coalition{1} << k)) x[k] = P.lattice(k).top();
  }
  return x;
}

// Bi-coalition (A, B) as a point of 3^n.
ProductElement ternary_point(const ProductLattice& P, Coalition a, Coalition b) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < P.dimension(); ++k) {
    const Coalition bit = Coalition{1} << k;
    labels.push_back((a & bit) ? "1" : (b & bit) ? "-1" : "0");
  }
  return P.parse(labels);
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("complementary and substitutive capacities") {
    const Capacity comp = Capacity::from_values(2, {Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(shapley_value(comp, 0) == Rational(1, 2));
    CHECK(shapley_value(comp, 1) == Rational(1, 2));
    CHECK(interaction_index(comp, 0b11, CoefficientScheme::shapley()) == 1);
    const Capacity sub = Capacity::from_values(2, {Rational(0), Rational(1), Rational(1), Rational(1)});
    CHECK(interaction_index(sub, 0b11, CoefficientScheme::shapley()) == -1);
    CHECK(capacity_mobius(comp) == std::vector<Rational>{0, 0, 0, 1});
  }

  TEST_CASE("Shapley and Banzhaf values sum rules") {
    Rng rng(51);
    for (unsigned n = 1; n <= 6; ++n) {
      const Capacity c = testing::random_capacity(rng, n);
      Rational total = 0;
      for (unsigned i = 0; i < n; ++i) {
        total += shapley_value(c, i);
        CHECK(interaction_index(c, Coalition{1} << i, CoefficientScheme::shapley()) == shapley_value(c, i));
        CHECK(interaction_index(c, Coalition{1} << i, CoefficientScheme::banzhaf()) == banzhaf_value(c, i));
      }
      CHECK(total == c(c.full()) - c(0));
    }
  }

  TEST_CASE("all-coalition indices match the pointwise definition") {
    Rng rng(52);
    for (unsigned n = 1; n <= 7; ++n) {
      const Capacity c = testing::random_capacity(rng, n);
      for (const CoefficientScheme& scheme : {CoefficientScheme::shapley(), CoefficientScheme::banzhaf()}) {
        const std::vector<Rational> all = all_interactions(c, scheme, 3);
        CHECK(all[0] == 0);
        for (Coalition s = 1; s <= c.full(); ++s) CHECK(all[s] == interaction_index(c, s, scheme));
      }
    }
  }

  TEST_CASE("Shapley interaction from the Möbius transform: 1/(r - s + 1)") {
    Rng rng(53);
    const unsigned n = 5;
    const Capacity c = testing::random_capacity(rng, n);
    const std::vector<Rational> m = capacity_mobius(c);
    for (Coalition s = 1; s <= c.full(); ++s) {
      Rational want = 0;
      for (Coalition r = 0; r <= c.full(); ++r) {
        if ((r & s) == s) want += m[r] / (std::popcount(r) - std::popcount(s) + 1);
      }
      CHECK(interaction_index(c, s, CoefficientScheme::shapley()) == want);
    }
  }

  TEST_CASE("general engine on 2^n reproduces the classical indices") {
    Rng rng(54);
    for (unsigned n = 2; n <= 4; ++n) {
      const Capacity c = testing::random_capacity(rng, n);
      const ProductFunction v = as_product_function(c);
      for (Coalition s = 1; s <= c.full(); ++s) {
        const ProductElement x = boolean_point(v.lattice(), s);
        CHECK(interaction_direct(v, x, CoefficientScheme::shapley()) ==
              interaction_index(c, s, CoefficientScheme::shapley()));
        CHECK(oracle::oracle_interaction(v, x, oracle::Weights::banzhaf) ==
              interaction_index(c, s, CoefficientScheme::banzhaf()));
      }
    }
  }

  TEST_CASE("validation") {
    Rng rng(55);
    const Capacity mono = testing::monotone_capacity(rng, 4);
    const CapacityReport r = validate(mono);
    CHECK(r.is_game);
    CHECK(r.is_monotone);
    CHECK_FALSE(r.violation);
    const Capacity bad = Capacity::from_values(2, {Rational(0), Rational(2), Rational(0), Rational(1)});
    const CapacityReport b = validate(bad);
    CHECK(b.is_game);
    CHECK(b.is_normalized);
    CHECK_FALSE(b.is_monotone);
    REQUIRE(b.violation);
    CHECK(b.violation->first == 0b01);
    CHECK(b.violation->second == 0b11);
    CHECK_FALSE(validate(Capacity::from_values(1, {Rational(1), Rational(1)})).is_game);
  }

  TEST_CASE("restriction and reduction") {
    Rng rng(56);
    const Capacity c = testing::random_capacity(rng, 4);
    const Capacity r = restrict_game(c, 0b0010);
    CHECK(r.n == 3);
    // players 0, 2, 3 become 0, 1, 2
    CHECK(r(0b110) == c(0b1100));
    CHECK(r(0b011) == c(0b0101));
    const Capacity d = reduce_game(c, 0b0101);
    CHECK(d.n == 3);
    // players 1, 3 become 0, 1; the merged player is 2
    CHECK(d(0b100) == c(0b0101));
    CHECK(d(0b011) == c(0b1010));
    CHECK(d(0b111) == c(0b1111));
    CHECK_THROWS_AS(reduce_game(c, 0), EmptyCoalition);
  }

  TEST_CASE("recursion over every coalition") {
    Rng rng(57);
    for (unsigned n = 2; n <= 5; ++n) {
      const Capacity c = testing::random_capacity(rng, n);
      for (Coalition s = 1; s <= c.full(); ++s) {
        const ClassicalRecursionResult r = classical_recursion_check(c, s, CoefficientScheme::shapley());
        CHECK(r.pass);
      }
    }
  }

  TEST_CASE("errors") {
    const Capacity c = Capacity::from_values(2, std::vector<Rational>(4));
    CHECK_THROWS_AS(shapley_value(c, 2), IndexOutOfRange);
    CHECK_THROWS_AS(interaction_index(c, 0, CoefficientScheme::shapley()), EmptyCoalition);
    CHECK_THROWS_AS(Capacity::from_values(2, std::vector<Rational>(3)), SizeError);
    CHECK_THROWS_AS(Capacity::from_values(25, {}), SizeError);
    const BiCapacity b = BiCapacity::from_values(2, std::vector<Rational>(9));
    CHECK_THROWS_AS(b.index(0b01, 0b01), NotDisjoint);
    CHECK_THROWS_AS(bicap_interaction(b, 0, 0), EmptyCoalition);
    CHECK_THROWS_AS(bicap_interaction(b, 0b01, 0b01), NotDisjoint);
    CHECK_THROWS_AS(bicap_interaction_mobius(bicap_mobius(b), 2, 0, 0b11), EmptyTarget);
  }

  TEST_CASE("bi-capacity layout") {
    const BiCapacity b = BiCapacity::from_values(2, std::vector<Rational>(9));
    CHECK(b.index(0, 0b11) == 0);
    CHECK(b.index(0, 0) == 1 + 3);
    CHECK(b.index(0b11, 0) == 8);
    for (std::uint64_t i = 0; i < 9; ++i) {
      const BiCoalition q = b.coalition(i);
      CHECK(b.index(q.positive, q.negative) == i);
    }
  }

  TEST_CASE("the four indices on 3^2") {
    Rng rng(58);
    const BiCapacity b = testing::random_bicapacity(rng, 2);
    const Coalition one = 0b01, two = 0b10, both = 0b11;
    // I_{12,{}}
    CHECK(bicap_interaction(b, both, 0) == b(both, 0) - b(two, 0) - b(one, 0) + b(0, 0));
    // I_{{},12}
    CHECK(bicap_interaction(b, 0, both) == b(0, 0) - b(0, one) - b(0, two) + b(0, both));
    // I_{1,2}
    CHECK(bicap_interaction(b, one, two) == b(one, 0) - b(0, 0) - b(one, two) + b(0, two));
    // I_{2,1}
    CHECK(bicap_interaction(b, two, one) == b(two, 0) - b(two, one) - b(0, 0) + b(0, one));
  }

  TEST_CASE("bi-capacity indices through the general engine") {
    Rng rng(59);
    for (unsigned n = 2; n <= 3; ++n) {
      const BiCapacity b = testing::random_bicapacity(rng, n);
      const ProductFunction v = as_product_function(b);
      const ProductLattice& P = v.lattice();
      const std::vector<Rational> m = bicap_mobius(b);
      const Coalition full = b.full();
      for (unsigned i = 0; i < n; ++i) {
        const Coalition bit = Coalition{1} << i;
        CHECK(bicap_importance(b, i, true) == interaction_direct(v, ternary_point(P, bit, full & ~bit),
                                                                 CoefficientScheme::shapley()));
        CHECK(bicap_importance(b, i, false) ==
              interaction_direct(v, ternary_point(P, 0, full & ~bit), CoefficientScheme::shapley()));
      }
      for (Coalition s = 0; s <= full; ++s) {
        for (Coalition t = 0; t <= full; ++t) {
          if ((s & t) || (s | t) == 0) continue;
          const ProductElement x = ternary_point(P, s, full & ~(s | t));
          const Rational want = bicap_interaction(b, s, t);
          CHECK(interaction_direct(v, x, CoefficientScheme::shapley()) == want);
          CHECK(bicap_interaction_mobius(m, n, s, full & ~(s | t)) == want);
        }
      }
    }
  }

  TEST_CASE("bi-capacity validation") {
    // v(A, B) = (|A| - |B|) / n is monotone with the standard boundary
    const unsigned n = 3;
    std::vector<Rational> values(27);
    BiCapacity b = BiCapacity::from_values(n, values);
    for (std::uint64_t i = 0; i < 27; ++i) {
      const BiCoalition q = b.coalition(i);
      b.values[i] = Rational(std::popcount(q.positive) - std::popcount(q.negative)) / n;
    }
    const BiCapacityReport r = validate(b);
    CHECK(r.boundary);
    CHECK(r.is_monotone);
    b.values[b.index(0b001, 0)] = -5;
    const BiCapacityReport bad = validate(b);
    CHECK_FALSE(bad.is_monotone);
    CHECK(bad.violation.has_value());
  }
}
