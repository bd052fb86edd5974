#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "oracles.hpp"
#include "pcgroups/universal.hpp"

using namespace pcg;
using builders::share;
using builders::word;

TEST_CASE("deflation sentence") {
  CHECK(deflation_triangle_sentence_holds(builders::clique(3)));
  CHECK(deflation_triangle_sentence_holds(builders::p3()));

  // one pendant leaves two triangle corners with equal closed stars,
  // so the triangle still collapses; a second pendant makes all three
  // stars pairwise distinct and the deflation keeps the triangle
  SimplicialGraph one_pendant({"a", "b", "c", "d"},
                              {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}});
  CHECK(deflation_triangle_sentence_holds(one_pendant));
  SimplicialGraph two_pendants({"a", "b", "c", "d", "e"},
                               {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"b", "e"}});
  CHECK_FALSE(deflation_triangle_sentence_holds(two_pendants));

  SUBCASE("equivalent to triangle-freeness of the deflation") {
    for (const auto& g : oracles::graphs_up_to_iso(4)) {
      CHECK(deflation_triangle_sentence_holds(g) == is_triangle_free(deflation(g)));
    }
  }
}

TEST_CASE("universal equivalence decider") {
  auto p3 = builders::p3();

  SUBCASE("a graph and its inflation are equivalent") {
    UnivEqOptions options;
    options.cap = 2;
    EqVerdict v = decide_universal_equivalence(p3, inflation(p3, 2), options);
    CHECK(v.outcome == EqOutcome::Equivalent);
    REQUIRE(v.detail.has_value());
    CHECK((*v.detail)[0].outcome == Outcome::Yes);
    CHECK((*v.detail)[1].outcome == Outcome::Yes);
    CHECK(validate_witness(p3, (*v.detail)[0]));
    CHECK(validate_witness(inflation(p3, 2), (*v.detail)[1]));
  }

  SUBCASE("atomic graphs are equivalent only when isomorphic") {
    EqVerdict v = decide_universal_equivalence(builders::cycle(5), builders::cycle(6));
    CHECK(v.outcome == EqOutcome::NotEquivalent);
    CHECK(v.reason == "atomic-rigidity");

    EqVerdict same = decide_universal_equivalence(builders::cycle(5), builders::cycle(5, "w"));
    CHECK(same.outcome == EqOutcome::Equivalent);
    CHECK(same.reason == "atomic-rigidity");
  }

  SUBCASE("the deflation sentence separates") {
    SimplicialGraph two_pendants({"a", "b", "c", "d", "e"},
                                 {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"b", "e"}});
    EqVerdict v = decide_universal_equivalence(two_pendants, p3);
    CHECK(v.outcome == EqOutcome::NotEquivalent);
    CHECK(v.reason == "deflation-sentence-separation");
  }

  SUBCASE("self equivalence at radius zero for covered graphs") {
    UnivEqOptions options;
    options.cap = 0;
    for (const auto& g : oracles::graphs_up_to_iso(3)) {
      if (g.empty()) continue;
      if (!deflation_triangle_sentence_holds(g) && !is_triangle_built(g) && !is_atomic(g)) {
        continue;
      }
      EqVerdict v = decide_universal_equivalence(g, g, options);
      CHECK(v.outcome == EqOutcome::Equivalent);
    }
  }

  SUBCASE("symmetry on covered pairs") {
    std::mt19937_64 rng(89);
    int done = 0;
    UnivEqOptions options;
    options.cap = 1;
    while (done < 6) {
      auto d = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 2));
      auto g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 2));
      if (!is_triangle_free(d) || !is_triangle_free(g)) continue;
      EqVerdict forward = decide_universal_equivalence(d, g, options);
      EqVerdict backward = decide_universal_equivalence(g, d, options);
      if (forward.outcome != EqOutcome::Inconclusive &&
          backward.outcome != EqOutcome::Inconclusive) {
        CHECK(forward.outcome == backward.outcome);
      }
      ++done;
    }
  }

  SUBCASE("uncovered pairs are inconclusive") {
    // triangle with two pendants: the deflation keeps the triangle, an
    // induced four-vertex path rules out triangle-built, the pendants
    // rule out atomic
    SimplicialGraph hard({"a", "b", "c", "d", "e"},
                         {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"b", "e"}});
    CHECK_FALSE(deflation_triangle_sentence_holds(hard));
    CHECK_FALSE(is_triangle_built(hard));
    EqVerdict v = decide_universal_equivalence(hard, hard);
    CHECK(v.outcome == EqOutcome::Inconclusive);
    CHECK(v.reason == "no-covered-class");
  }

  CHECK_THROWS_AS(decide_universal_equivalence(SimplicialGraph(), p3), std::invalid_argument);
}

TEST_CASE("discriminating retraction") {
  auto p3 = builders::p3();

  SUBCASE("m = 1 with unit exponents is the identity") {
    ExponentAssignment exponents;
    for (const auto& v : p3.vertex_names()) exponents[{v, 1}] = 1;
    auto m = discriminating_retraction(p3, 1, exponents);
    CHECK(check_homomorphism(m));
    auto w = word(m.source, "a#1 b#1");
    CHECK(apply_map(m, w).str() == "a b");
  }

  SUBCASE("single vertex with exponents (1,2)") {
    SimplicialGraph point({"a"}, {});
    ExponentAssignment exponents{{{"a", 1}, 1}, {{"a", 2}, 2}};
    auto m = discriminating_retraction(point, 2, exponents);
    CHECK(apply_map(m, word(m.source, "a#1 a#2")).str() == "a a a");
  }

  SUBCASE("always a homomorphism") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 40; ++trial) {
      auto g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 3));
      const int m = 1 + static_cast<int>(rng() % 3);
      ExponentAssignment exponents;
      for (const auto& v : g.vertex_names()) {
        for (int copy = 1; copy <= m; ++copy) {
          exponents[{v, copy}] = 1 + static_cast<int>(rng() % 5);
        }
      }
      CHECK(check_homomorphism(discriminating_retraction(g, m, exponents)));
    }
  }

  SUBCASE("rejects bad exponent tables") {
    ExponentAssignment missing{{{"a", 1}, 1}};
    CHECK_THROWS_AS(discriminating_retraction(p3, 1, missing), std::invalid_argument);
    ExponentAssignment zero;
    for (const auto& v : p3.vertex_names()) zero[{v, 1}] = 0;
    CHECK_THROWS_AS(discriminating_retraction(p3, 1, zero), std::invalid_argument);
    CHECK_THROWS_AS(discriminating_retraction(p3, 0, {}), std::invalid_argument);
  }

  SUBCASE("some exponent vector separates a fixed non-trivial word") {
    std::mt19937_64 rng(101);
    auto inflated = share(inflation(p3, 2));
    int separated = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Word w(inflated, oracles::random_letters(rng, *inflated, 1 + static_cast<int>(rng() % 6)));
      if (is_trivial(w)) continue;
      bool found = false;
      for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        ExponentAssignment exponents;
        for (const auto& v : p3.vertex_names()) {
          for (int copy = 1; copy <= 2; ++copy) {
            exponents[{v, copy}] =
                attempt == 0 ? copy : 1 + static_cast<int>(rng() % 8);
          }
        }
        found = !is_trivial(apply_map(discriminating_retraction(p3, 2, exponents), w));
      }
      CHECK(found);
      if (found) ++separated;
    }
    CHECK(separated > 0);
  }
}
