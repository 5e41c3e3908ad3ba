#include <doctest.h>

#include <random>
#include <set>

#include "meccount/counting.hpp"
#include "meccount/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace meccount;
using namespace meccount::oracle;

namespace {

std::vector<VertexPair> arcs(const PartiallyDirectedGraph& g) { return g.directed_edges(); }

}  // namespace

TEST_CASE("oracle counts the small example classes") {
  CHECK(oracle_count({fx::mec1(), {}}) == 12);
  CHECK(oracle_count({fx::mec1(), fx::mec1_example1()}) == 2);
  CHECK(oracle_count({fx::mec1(), fx::mec1_example2()}) == bf::count(fx::mec1(), fx::mec1_example2()));
  CHECK(oracle_count({fx::mec2(), fx::mec2_example3()}) == bf::count(fx::mec2(), fx::mec2_example3()));
  CHECK(oracle_count({fx::mec2(), fx::mec2_example4()}) == bf::count(fx::mec2(), fx::mec2_example4()));
  CHECK(oracle_count({fx::as_pdg(fx::complete(3)), {}}) == 6);
  CHECK(oracle_count({fx::as_pdg(fx::path3()), {}}) == 3);
  CHECK(oracle_count({fx::mec1(), BackgroundKnowledge({{fx::c, fx::d}})}) == 0);
  CHECK(oracle_count({PartiallyDirectedGraph(1, {}, {}), {}}) == 1);
}

TEST_CASE("oracle caps and input errors") {
  CHECK_THROWS_AS(oracle_count({fx::as_pdg(fx::complete(10)), {}}), OracleCapError);
  CHECK_THROWS_AS(enumerate_amos(fx::as_pdg(fx::complete(5)), {}, 4), OracleCapError);
  CHECK_THROWS_AS(amos_by_permutation(fx::as_pdg(fx::complete(5)), {}, 4), OracleCapError);
  CHECK_THROWS_AS(enumerate_amos(fx::as_pdg(fx::complete(3)), {}, kMaxOracleCap + 1), InputError);
  CHECK_THROWS_AS(oracle_count({fx::as_pdg(fx::path3()), BackgroundKnowledge({{0, 2}})}),
                  InputError);
  try {
    oracle_count({fx::as_pdg(fx::complete(12)), {}}, 9);
    FAIL("expected a cap error");
  } catch (const OracleCapError& e) {
    CHECK(e.n() == 12);
    CHECK(e.cap() == 9);
  }
  CHECK_THROWS_AS(union_graph(OrientationSet{}), InputError);
}

TEST_CASE("v-structures and acyclicity") {
  const auto vs = v_structures(fx::mec1());
  CHECK(vs == std::vector<VStructure>{{fx::a, fx::c, fx::d}, {fx::b, fx::c, fx::d}});
  CHECK(is_acyclic(fx::mec1()));
  const PartiallyDirectedGraph loop(3, {}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(is_acyclic(loop));
  CHECK(v_structures(loop).empty());
}

TEST_CASE("orient_by_order and the consistency check") {
  const auto g = fx::as_pdg(fx::path3());
  const auto chain = orient_by_order(g, {0, 1, 2});
  CHECK(arcs(chain) == std::vector<VertexPair>{{0, 1}, {1, 2}});
  CHECK(is_consistent_amo(g, chain, {}));
  const auto collider = orient_by_order(g, {0, 2, 1});
  CHECK_FALSE(is_consistent_amo(g, collider, {}));
  CHECK_FALSE(is_consistent_amo(g, chain, BackgroundKnowledge({{1, 0}})));
  CHECK_FALSE(is_consistent_amo(g, g, {}));
}

TEST_CASE("the two enumerators agree with each other and with the test oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = bf::random_essential_graph(n, 0.45, rng);
    const auto k = bf::random_knowledge(g, 0.3, trial % 3, rng);
    const auto back = enumerate_amos(g, k);
    const auto perm = amos_by_permutation(g, k);
    REQUIRE(back.size() == perm.size());
    CHECK(back.members == perm.members);
    CHECK(back.size() == bf::count(g, k));
    for (const auto& o : back.members) CHECK(is_consistent_amo(g, o, k));
  }
}

TEST_CASE("union of the class is the essential graph") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = bf::random_essential_graph(2 + rng() % 6, 0.5, rng);
    CHECK(union_graph(enumerate_amos(g, {})) == g);
  }
}

TEST_CASE("represented orientations direct every edge leaving the clique outward") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = bf::random_chordal(2 + rng() % 6, rng);
    std::set<std::vector<VertexPair>> seen;
    for (const auto& c : maximal_cliques(g)) {
      const auto reps = amos_represented_by(g, c);
      REQUIRE_FALSE(reps.empty());
      for (const auto& o : reps.members) {
        CHECK(is_consistent_amo(fx::as_pdg(g), o, {}));
        seen.insert(o.directed_edges());
        for (const auto& [u, v] : o.directed_edges()) {
          if (c.contains(v)) CHECK(c.contains(u));
        }
      }
    }
    // Every orientation is represented by at least one clique.
    CHECK(seen == bf::amos(fx::as_pdg(g), {}));
  }
}
