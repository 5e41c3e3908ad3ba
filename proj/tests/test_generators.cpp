#include <doctest.h>

#include <algorithm>

#include "meccount/generators.hpp"
#include "meccount/oracle.hpp"

using namespace meccount;

namespace {

std::size_t coverage(const BackgroundKnowledge& k, const Clique& c) {
  return restrict_knowledge(k, c.members).endpoints().size();
}

bool acyclic(std::size_t n, const BackgroundKnowledge& k) {
  return oracle::is_acyclic(PartiallyDirectedGraph(n, {}, k.edges()));
}

GenConfig config(std::size_t n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("seeded rng is reproducible and stream separated") {
  SeededRng a(7), b(7), c(7, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  SeededRng r(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  std::vector<int> items{1, 2, 3, 4, 5, 6};
  r.shuffle(items);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("random chordal graphs are connected, chordal and reproducible") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const auto g = random_chordal(config(n, seed));
    CHECK(g.graph.vertex_count() == n);
    CHECK(is_chordal(g.graph));
    CHECK(is_connected(g.graph));
    CHECK(g.attempts >= 1);
    if (n > 1) {
      CHECK(g.p >= 0.1);
      CHECK(g.p < 0.3);
    }
    const auto again = random_chordal(config(n, seed));
    CHECK(again.graph == g.graph);
    CHECK(again.attempts == g.attempts);
  }
  CHECK(random_chordal(config(40, 1)).graph != random_chordal(config(40, 2)).graph);
}

TEST_CASE("generator configuration errors") {
  auto cfg = config(0, 1);
  CHECK_THROWS_AS(random_chordal(cfg), InputError);
  cfg = config(10, 1);
  cfg.p_low = 0.5;
  cfg.p_high = 0.4;
  CHECK_THROWS_AS(random_chordal(cfg), InputError);
  cfg = config(10, 1);
  cfg.max_attempts = 0;
  CHECK_THROWS_AS(random_chordal(cfg), InputError);

  cfg = config(60, 1);
  cfg.p_low = 0.001;
  cfg.p_high = 0.002;
  cfg.max_attempts = 3;
  CHECK_THROWS_AS(random_chordal(cfg), GenerationError);
}

TEST_CASE("generated knowledge respects the per-clique target") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_chordal(config(5 + seed % 40, seed)).graph;
    const std::size_t k_target = 2 + seed % 6;
    const auto k = gen_background(g, k_target, seed);
    CHECK(acyclic(g.vertex_count(), k));
    for (const auto& [u, v] : k.edges()) CHECK(g.adjacent(u, v));
    const auto cliques = maximal_cliques(g);
    std::size_t best = 0;
    std::size_t largest = 0;
    for (const auto& c : cliques) {
      const std::size_t cov = coverage(k, c);
      CHECK(cov <= std::min(k_target, c.size()));
      best = std::max(best, cov);
      largest = std::max(largest, c.size());
    }
    const MecInstance inst{PartiallyDirectedGraph(g.vertex_count(), g.edges(), {}), k};
    CHECK(max_clique_knowledge(inst) == best);
    if (largest >= 2) CHECK(best >= 2);
    CHECK(gen_background(g, k_target, seed) == k);
  }
  const auto g = random_chordal(config(10, 1)).graph;
  CHECK_THROWS_AS(gen_background(g, 1, 1), InputError);
  CHECK_THROWS_AS(gen_background(UndirectedGraph(3), 2, 1), InputError);
}

TEST_CASE("grown knowledge keeps every clique's knowledge vertex set") {
  std::size_t grew = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_chordal(config(10 + seed % 60, seed)).graph;
    const auto base = gen_background(g, 3 + seed % 6, seed);
    const auto res = grow_background(g, base, seed);
    const auto& k2 = res.knowledge;
    CHECK(k2.size() <= 2 * base.size());
    CHECK(res.grown == (k2.size() > base.size()));
    grew += res.grown ? 1 : 0;
    for (const auto& e : base.edges()) CHECK(k2.contains(e.first, e.second));
    for (const auto& [u, v] : k2.edges()) CHECK(g.adjacent(u, v));
    CHECK(acyclic(g.vertex_count(), k2));
    for (const auto& c : maximal_cliques(g)) {
      CHECK(restrict_knowledge(k2, c.members).endpoints() ==
            restrict_knowledge(base, c.members).endpoints());
    }
    CHECK(grow_background(g, base, seed).knowledge == k2);
  }
  CHECK(grew > 0);
}

TEST_CASE("grow_background edge cases") {
  const std::vector<VertexPair> tri{{0, 1}, {0, 2}, {1, 2}};
  const UndirectedGraph g(3, tri);
  const auto empty = grow_background(g, {}, 1);
  CHECK_FALSE(empty.grown);
  CHECK(empty.knowledge.empty());
  CHECK_THROWS_AS(grow_background(g, BackgroundKnowledge({{0, 1}, {1, 2}, {2, 0}}), 1),
                  InputError);
  CHECK_THROWS_AS(grow_background(UndirectedGraph(3, std::vector<VertexPair>{{0, 1}, {1, 2}}),
                                  BackgroundKnowledge({{0, 2}}), 1),
                  InputError);
  // Two claims touching all three vertices leave room for the third pair.
  const auto full = grow_background(g, BackgroundKnowledge({{0, 1}, {1, 2}}), 5);
  CHECK(full.grown);
  CHECK(full.knowledge.contains(0, 2));
}
