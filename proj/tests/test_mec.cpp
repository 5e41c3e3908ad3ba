#include <doctest.h>

#include <random>

#include "meccount/counting.hpp"
#include "meccount/mec.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace meccount;
using namespace fx;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  for (const auto& v : vs) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("knowledge set") {
  const BackgroundKnowledge k({{2, 1}, {0, 1}, {2, 1}});
  CHECK(k.size() == 2);
  CHECK(k.contains(2, 1));
  CHECK_FALSE(k.contains(1, 2));
  CHECK(k.endpoints() == VertexSet{0, 1, 2});
}

TEST_CASE("validate") {
  CHECK(validate({mec1(), mec1_example1()}).empty());
  CHECK(validate({mec2(), mec2_example4()}).empty());

  const auto c4 = validate({as_pdg(cycle(4)), {}});
  CHECK(has_kind(c4, ViolationKind::NonChordalComponent));

  const auto absent = validate({mec1(), BackgroundKnowledge({{a, f}})});
  REQUIRE(absent.size() == 1);
  CHECK(absent[0].kind == ViolationKind::KnowledgeNotInGraph);

  // Directed edge inside an undirected component.
  const PartiallyDirectedGraph inside(3, {{0, 1}, {1, 2}}, {{0, 2}});
  CHECK(has_kind(validate({inside, {}}), ViolationKind::PartiallyDirectedCycle));

  // Directed cycle through singleton components.
  const PartiallyDirectedGraph loop(3, {}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(has_kind(validate({loop, {}}), ViolationKind::PartiallyDirectedCycle));
}

TEST_CASE("chordal components") {
  const auto comps = chordal_components(mec1());
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].to_parent == VertexSet{a, b});
  CHECK(comps[1].to_parent == VertexSet{c});
  CHECK(comps[2].to_parent == VertexSet{d, e, f});
  CHECK(comps[2].graph.edge_count() == 3);

  const PartiallyDirectedGraph dag(3, {}, {{0, 1}, {1, 2}});
  CHECK(chordal_components(dag).size() == 3);
  CHECK(chordal_components(mec2()).size() == 1);
}

TEST_CASE("restrict knowledge") {
  const BackgroundKnowledge k({{a, b}, {e, d}, {f, d}});
  CHECK(restrict_knowledge(k, {d, e, f}) == BackgroundKnowledge({{e, d}, {f, d}}));
  CHECK(restrict_knowledge(k, {}).empty());
  CHECK(restrict_knowledge(BackgroundKnowledge({{a, b}}), {a, c}).empty());
  CHECK(localize_knowledge(k, {d, e, f}) == BackgroundKnowledge({{1, 0}, {2, 0}}));
}

TEST_CASE("max clique knowledge of the four example instances") {
  CHECK(max_clique_knowledge({mec1(), mec1_example1()}) == 3);
  CHECK(max_clique_knowledge({mec1(), mec1_example2()}) == 2);
  CHECK(max_clique_knowledge({mec2(), mec2_example3()}) == 2);
  CHECK(max_clique_knowledge({mec2(), mec2_example4()}) == 3);
  CHECK(max_clique_knowledge({mec2(), {}}) == 0);
}

TEST_CASE("count examples") {
  CHECK(count_amo({mec1(), {}}) == 12);
  CHECK(count_amo({mec1(), mec1_example1()}) == 2);
  // c <- d reversed by the knowledge.
  CHECK(count_amo({mec1(), BackgroundKnowledge({{c, d}})}) == 0);
  // Agreeing with a directed edge changes nothing.
  CHECK(count_amo({mec1(), BackgroundKnowledge({{d, c}})}) == 12);
  // Contradictory claims count zero without error.
  CHECK(count_amo({mec1(), BackgroundKnowledge({{a, b}, {b, a}})}) == 0);
  CHECK(count_amo({PartiallyDirectedGraph(1, {}, {}), {}}) == 1);
  CHECK_THROWS_AS(count_amo({as_pdg(cycle(4)), {}}), ValidationError);
}

TEST_CASE("components partition the vertices and undirected edges") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = bf::random_essential_graph(n, 0.45, rng);
    std::vector<int> seen(n, 0);
    std::size_t edges = 0;
    for (const auto& comp : chordal_components(g)) {
      for (VertexId v : comp.to_parent) ++seen[v];
      for (const auto& [x, y] : comp.graph.edges()) {
        CHECK(g.has_undirected(comp.to_parent[x], comp.to_parent[y]));
        ++edges;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    CHECK(edges == g.undirected_edges().size());
  }
}

TEST_CASE("class size without knowledge matches exhaustive enumeration") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto g = bf::random_essential_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    REQUIRE(validate({g, {}}).empty());
    CHECK(count_amo({g, {}}) == bf::count(g, {}));
  }
}

TEST_CASE("more knowledge never increases the count") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = bf::random_essential_graph(n, 0.5, rng);
    const auto big = bf::random_knowledge(g, 0.5, 0, rng);
    std::vector<VertexPair> some;
    for (const auto& e : big.edges()) {
      if (rng() % 2) some.push_back(e);
    }
    const BackgroundKnowledge small(some);
    CHECK(count_amo({g, big}) <= count_amo({g, small}));
  }
}

TEST_CASE("max clique knowledge bounds") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto skeleton = bf::random_chordal(n, rng);
    const auto g = as_pdg(skeleton);
    const auto k = bf::random_knowledge(g, 0.3, 1, rng);
    const std::size_t mck = max_clique_knowledge({g, k});
    std::size_t largest = 0;
    bool inside_some_clique = false;
    for (const auto& c : bf::maximal_cliques(skeleton)) {
      largest = std::max(largest, c.size());
      for (const auto& [u, v] : k.edges()) {
        inside_some_clique = inside_some_clique || (std::count(c.begin(), c.end(), u) &&
                                                    std::count(c.begin(), c.end(), v));
      }
    }
    CHECK(mck <= largest);
    CHECK((mck == 0) == !inside_some_clique);
  }
}
