#include <doctest.h>

#include <algorithm>

#include "latint/errors.hpp"
#include "latint/lattice.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace latint;
using latint::testing::Rng;

namespace {

std::vector<std::string> label_set(const FiniteLattice& L, std::vector<ElementId> ids) {
  std::vector<std::string> out;
  for (ElementId id : ids) out.push_back(L.label(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteLattice> fixtures() {
  std::vector<FiniteLattice> out;
  out.push_back(make_chain(1));
  out.push_back(make_chain(2));
  out.push_back(make_chain(5));
  out.push_back(make_ternary());
  out.push_back(make_diamond());
  out.push_back(make_m3());
  out.push_back(make_n5());
  out.push_back(testing::line_convex_geometry());
  for (unsigned n = 1; n <= 4; ++n) out.push_back(make_boolean_lattice(n));
  Rng rng(7);
  for (int i = 0; i < 12; ++i) out.push_back(testing::random_distributive(rng, 2 + i % 4));
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("ternary chain from explicit covers") {
    const FiniteLattice L = build_lattice({"-1", "0", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                                 {"-1", "0"}, {"0", "1"}});
    CHECK(L.is_lattice());
    CHECK(L.label(L.bottom()) == "-1");
    CHECK(L.label(L.top()) == "1");
    CHECK(L.label(L.join(L.id_of("0"), L.id_of("-1"))) == "0");
    CHECK(L.label(L.meet(L.id_of("0"), L.id_of("1"))) == "0");
    CHECK(L.flags().is_linear);
  }

  TEST_CASE("diamond joins its two middle elements to the top") {
    const FiniteLattice L = make_diamond();
    CHECK(L.join(L.id_of("a"), L.id_of("b")) == L.top());
    CHECK(L.meet(L.id_of("a"), L.id_of("b")) == L.bottom());
    CHECK(L.flags().is_boolean);
  }

  TEST_CASE("M3 and N5 structure") {
    const FiniteLattice m3 = make_m3();
    CHECK(m3.is_lattice());
    CHECK_FALSE(m3.flags().is_distributive);
    CHECK(m3.flags().is_modular);
    CHECK_FALSE(m3.flags().is_lower_locally_distributive);
    const FiniteLattice n5 = make_n5();
    CHECK_FALSE(n5.flags().is_modular);
    CHECK_FALSE(n5.flags().is_distributive);
  }

  TEST_CASE("construction errors") {
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    CHECK_THROWS_AS(build_lattice({"a", "b"}, Pairs{{"a", "c"}}), UnknownLabel);
    CHECK_THROWS_AS(build_lattice({"a", "a"}, Pairs{}), DuplicateLabel);
    CHECK_THROWS_AS(build_lattice({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}, {"a", "c"}}), NotTransitivelyReduced);
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, Pairs{{"a", "c"}, {"b", "c"}}), NoBottom);
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, Pairs{{"a", "b"}, {"a", "c"}}), NoTop);
  }

  TEST_CASE("bounded poset without joins is flagged, not rejected") {
    // two middle pairs crossing: x1, x2 both below y1 and y2
    const FiniteLattice P = build_lattice(
        {"0", "x1", "x2", "y1", "y2", "1"},
        std::vector<std::pair<std::string, std::string>>{
            {"0", "x1"}, {"0", "x2"}, {"x1", "y1"}, {"x2", "y1"}, {"x1", "y2"}, {"x2", "y2"}, {"y1", "1"}, {"y2", "1"}});
    CHECK_FALSE(P.is_lattice());
    CHECK(P.leq(P.id_of("x1"), P.id_of("y2")));
    CHECK_THROWS_AS(P.join(P.id_of("x1"), P.id_of("x2")), NotALattice);
  }

  TEST_CASE("order, join and meet agree with the oracle on every fixture") {
    for (const FiniteLattice& L : fixtures()) {
      const oracle::Order order(L);
      CHECK(L.bottom() == order.bottom());
      CHECK(L.top() == order.top());
      for (ElementId a = 0; a < L.size(); ++a) {
        CHECK(L.leq(L.bottom(), a));
        CHECK(L.leq(a, L.top()));
        for (ElementId b = 0; b < L.size(); ++b) {
          REQUIRE(L.leq(a, b) == order.le(a, b));
          REQUIRE(L.covers(b, a) == order.covers(b, a));
          REQUIRE(L.join(a, b) == order.join(a, b));
          REQUIRE(L.meet(a, b) == order.meet(a, b));
        }
      }
    }
  }

  TEST_CASE("lattice laws hold on every fixture") {
    for (const FiniteLattice& L : fixtures()) {
      for (ElementId a = 0; a < L.size(); ++a) {
        CHECK(L.join(a, a) == a);
        CHECK(L.meet(a, a) == a);
        for (ElementId b = 0; b < L.size(); ++b) {
          CHECK(L.join(a, b) == L.join(b, a));
          CHECK(L.meet(a, b) == L.meet(b, a));
          CHECK(L.join(a, L.meet(a, b)) == a);
          CHECK(L.meet(a, L.join(a, b)) == a);
          for (ElementId c = 0; c < L.size(); ++c) {
            CHECK(L.join(a, L.join(b, c)) == L.join(L.join(a, b), c));
            CHECK(L.meet(a, L.meet(b, c)) == L.meet(L.meet(a, b), c));
          }
        }
      }
    }
  }

  TEST_CASE("classify matches the definitional oracle on every fixture") {
    for (const FiniteLattice& L : fixtures()) {
      const StructureFlags& got = classify(L);
      const StructureFlags want = oracle::oracle_flags(L);
      CAPTURE(L.size());
      CHECK(got.is_lattice == want.is_lattice);
      CHECK(got.is_distributive == want.is_distributive);
      CHECK(got.is_modular == want.is_modular);
      CHECK(got.is_lower_semimodular == want.is_lower_semimodular);
      CHECK(got.is_lower_locally_distributive == want.is_lower_locally_distributive);
      CHECK(got.is_linear == want.is_linear);
      CHECK(got.is_boolean == want.is_boolean);
      CHECK(got.is_atomistic == want.is_atomistic);
    }
  }

  TEST_CASE("join-irreducibles cover exactly one element and exclude bottom") {
    for (const FiniteLattice& L : fixtures()) {
      const JoinIrreducibleSet& J = join_irreducibles(L);
      const oracle::Order order(L);
      CHECK(J.members == order.join_irreducibles());
      CHECK_FALSE(J.contains(L.bottom()));
      for (std::size_t i = 0; i < J.size(); ++i) {
        CHECK(L.lower_covers(J.members[i]).size() == 1);
        CHECK(J.predecessor[i] == L.lower_covers(J.members[i]).front());
        CHECK(J.predecessor_of(J.members[i]) == J.predecessor[i]);
      }
    }
  }

  TEST_CASE("normal and minimal decompositions") {
    for (const FiniteLattice& L : fixtures()) {
      if (!L.flags().is_lower_locally_distributive) continue;
      for (ElementId x = 0; x < L.size(); ++x) {
        const Decomposition d = decompose(L, x);
        CHECK(L.join_all(d.eta) == x);
        CHECK(L.join_all(d.eta_star) == x);
        CHECK(std::includes(d.eta.begin(), d.eta.end(), d.eta_star.begin(), d.eta_star.end()));
        for (ElementId a : d.eta_star) {
          for (ElementId b : d.eta_star) CHECK((a == b || !L.comparable(a, b)));
        }
        // no proper subset joins to x
        for (std::size_t drop = 0; drop < d.eta_star.size(); ++drop) {
          std::vector<ElementId> rest = d.eta_star;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(L.join_all(rest) != x);
        }
        std::vector<ElementId> want = oracle::oracle_minimal_decomposition(L, x);
        std::sort(want.begin(), want.end());
        CHECK(d.eta_star == want);
      }
    }
  }

  TEST_CASE("convex geometry: eta* of the top skips the middle atom") {
    const FiniteLattice L = testing::line_convex_geometry();
    CHECK(L.flags().is_lower_locally_distributive);
    CHECK(L.flags().is_atomistic);
    CHECK_FALSE(L.flags().is_distributive);
    CHECK(label_set(L, minimal_decomposition(L, L.top())) == std::vector<std::string>{"{1}", "{3}"});
    CHECK(label_set(L, normal_decomposition(L, L.top())) == std::vector<std::string>{"{1}", "{2}", "{3}"});
  }

  TEST_CASE("minimal decomposition in M3 is not unique") {
    const FiniteLattice L = make_m3();
    CHECK_THROWS_AS(minimal_decomposition(L, L.top()), NotLLDError);
    CHECK(minimal_decomposition(L, L.id_of("a")) == std::vector<ElementId>{L.id_of("a")});
  }

  TEST_CASE("Birkhoff: down-sets rebuilt from join-irreducibles on distributive fixtures") {
    for (const FiniteLattice& L : fixtures()) {
      if (!L.flags().is_distributive) continue;
      for (ElementId x = 0; x < L.size(); ++x) {
        std::vector<ElementId> scan;
        for (ElementId y = 0; y < L.size(); ++y) {
          if (L.leq(y, x)) scan.push_back(y);
        }
        std::vector<ElementId> rebuilt = downset_via_decomposition(L, x);
        std::sort(rebuilt.begin(), rebuilt.end());
        CHECK(rebuilt == scan);
        CHECK(downset(L, x) == scan);
      }
    }
  }

  TEST_CASE("intervals") {
    const FiniteLattice L = make_boolean_lattice(3);
    CHECK(interval(L, L.bottom(), L.top()).size() == 8);
    CHECK(is_boolean_interval(L, L.bottom(), L.top()));
    CHECK(interval(L, L.id_of("{1}"), L.id_of("{1,2}")).size() == 2);
    CHECK_THROWS_AS(interval(L, L.id_of("{1}"), L.id_of("{2}")), OrderError);
    const FiniteLattice C = make_chain(3);
    CHECK_FALSE(is_boolean_interval(C, C.bottom(), C.top()));
    const FiniteLattice M = make_m3();
    CHECK_FALSE(is_boolean_interval(M, M.bottom(), M.top()));
  }

  TEST_CASE("factories") {
    CHECK(make_chain(4).labels() == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(make_boolean().labels() == std::vector<std::string>{"0", "1"});
    CHECK(make_ternary().labels() == std::vector<std::string>{"-1", "0", "1"});
    const FiniteLattice B = make_boolean_lattice(2);
    CHECK(B.size() == 4);
    CHECK(B.find("{1,2}").has_value());
    CHECK(B.flags().is_boolean);
    CHECK(B.flags().is_atomistic);
    CHECK_THROWS_AS(B.id_of("{3}"), UnknownLabel);
  }

  TEST_CASE("linear extension respects the order") {
    for (const FiniteLattice& L : fixtures()) {
      for (ElementId a = 0; a < L.size(); ++a) {
        CHECK(L.at_rank(L.rank(a)) == a);
        for (ElementId b = 0; b < L.size(); ++b) {
          if (L.less(a, b)) CHECK(L.rank(a) < L.rank(b));
        }
      }
    }
  }
}
