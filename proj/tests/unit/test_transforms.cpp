#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "latint/errors.hpp"
#include "latint/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace latint;
using latint::testing::Rng;
using latint::testing::share;

TEST_SUITE("transforms") {
  TEST_CASE("Möbius of the complementary capacity on 2^2") {
    const FiniteLattice B = make_boolean_lattice(2);
    std::vector<Rational> g(4, Rational(0));
    g[B.id_of("{1,2}")] = 1;
    const std::vector<Rational> m = mobius(B, std::span<const Rational>(g));
    CHECK(m[B.id_of("{}")] == 0);
    CHECK(m[B.id_of("{1}")] == 0);
    CHECK(m[B.id_of("{2}")] == 0);
    CHECK(m[B.id_of("{1,2}")] == 1);
  }

  TEST_CASE("Möbius on a chain is the first difference") {
    const FiniteLattice C = make_chain(5);
    const std::vector<Rational> g{Rational(2), Rational(3), Rational(7), Rational(7), Rational(-1)};
    const std::vector<Rational> m = mobius(C, std::span<const Rational>(g));
    CHECK(m == std::vector<Rational>{Rational(2), Rational(1), Rational(4), Rational(0), Rational(-8)});
  }

  TEST_CASE("explicit lattices: zeta inverts mobius and matches Gauss-Jordan") {
    Rng rng(11);
    std::vector<FiniteLattice> fixtures{make_m3(), make_n5(), testing::line_convex_geometry(), make_boolean_lattice(3)};
    for (int i = 0; i < 6; ++i) fixtures.push_back(testing::random_distributive(rng, 3 + i % 3));
    for (const FiniteLattice& L : fixtures) {
      for (int trial = 0; trial < 5; ++trial) {
        const std::vector<Rational> g = testing::random_values(rng, L.size());
        const std::vector<Rational> m = mobius(L, std::span<const Rational>(g));
        CHECK(m == oracle::oracle_mobius(L, g));
        CHECK(zeta(L, std::span<const Rational>(m)) == g);
      }
    }
  }

  TEST_CASE("products: axis passes match the oracle") {
    Rng rng(12);
    const auto P = make_product({{"d", share(make_diamond())}, {"c", share(make_chain(3))}, {"t", share(make_ternary())}});
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<Rational> g = testing::random_values(rng, P->size());
      const std::vector<Rational> m = mobius(*P, std::span<const Rational>(g));
      CHECK(m == oracle::oracle_mobius(*P, g));
      CHECK(zeta(*P, std::span<const Rational>(m)) == g);
    }
    // non-distributive attribute
    const auto Q = make_product({{"m", share(make_m3())}, {"c", share(make_chain(2))}});
    const std::vector<Rational> g = testing::random_values(rng, Q->size());
    CHECK(mobius(*Q, std::span<const Rational>(g)) == oracle::oracle_mobius(*Q, g));
  }

  TEST_CASE("fast Boolean transforms agree with the lattice transform") {
    Rng rng(13);
    for (unsigned n = 1; n <= 6; ++n) {
      const FiniteLattice B = make_boolean_lattice(n);
      // label {i,j,...} to bitmask
      std::vector<std::size_t> mask_of(B.size());
      for (ElementId x = 0; x < B.size(); ++x) {
        std::size_t mask = 0;
        for (ElementId y : B.join_irreducibles().members) {
          if (B.leq(y, x)) mask |= std::size_t{1} << (std::stoi(B.label(y).substr(1)) - 1);
        }
        mask_of[x] = mask;
      }
      std::vector<Rational> by_mask = testing::random_values(rng, B.size());
      std::vector<Rational> by_id(B.size());
      for (ElementId x = 0; x < B.size(); ++x) by_id[x] = by_mask[mask_of[x]];
      const std::vector<Rational> m = mobius(B, std::span<const Rational>(by_id));
      std::vector<Rational> fast = by_mask;
      fast_boolean_mobius(std::span<Rational>(fast));
      for (ElementId x = 0; x < B.size(); ++x) CHECK(fast[mask_of[x]] == m[x]);
      fast_boolean_zeta(std::span<Rational>(fast));
      CHECK(fast == by_mask);
    }
  }

  TEST_CASE("float mode tracks exact mode") {
    Rng rng(14);
    const auto P = testing::chain_product({3, 4, 2});
    const std::vector<Rational> g = testing::random_values(rng, P->size());
    std::vector<double> gd;
    for (const Rational& q : g) gd.push_back(q.get_d());
    const std::vector<Rational> m = mobius(*P, std::span<const Rational>(g));
    const std::vector<double> md = mobius(*P, std::span<const double>(gd));
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(md[i] == doctest::Approx(m[i].get_d()).epsilon(1e-12));
  }

  TEST_CASE("size checks") {
    const FiniteLattice C = make_chain(3);
    const std::vector<Rational> g(4);
    CHECK_THROWS_AS(mobius(C, std::span<const Rational>(g)), SizeError);
    std::vector<Rational> odd(6);
    CHECK_THROWS_AS(fast_boolean_mobius(std::span<Rational>(odd)), SizeError);
    std::vector<Rational> big(std::size_t{1} << 5);
    CHECK_THROWS_AS(fast_boolean_mobius(std::span<Rational>(big), 4), SizeError);
    const auto P = make_power(make_chain(10), 4);
    const std::vector<Rational> h(P->size());
    CHECK_THROWS_AS(mobius(*P, std::span<const Rational>(h), 1000), SizeError);
  }

  TEST_CASE("function wrappers keep the domain") {
    Rng rng(15);
    const auto P = testing::chain_product({2, 2, 3});
    const ProductFunction v = testing::random_function(rng, P);
    const ProductFunction m = mobius(v);
    CHECK(&m.lattice() == &v.lattice());
    CHECK(zeta(m).to_dense() == v.to_dense());
    const auto L = share(make_n5());
    const LatticeFunction f{L, testing::random_values(rng, L->size())};
    CHECK(zeta(mobius(f)).values == f.values);
  }
}
