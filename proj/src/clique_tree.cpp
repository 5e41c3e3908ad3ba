#include <algorithm>
#include <numeric>
#include <tuple>

#include "meccount/graph.hpp"

namespace meccount {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

RootedCliqueTree clique_tree(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw InputError("clique_tree on an empty graph");
  if (!is_connected(g)) throw InputError("clique_tree requires a connected graph");
  auto cliques = maximal_cliques(g);
  const std::size_t m = cliques.size();

  // Pairwise intersection sizes from the vertex -> clique incidence.
  std::vector<std::vector<std::size_t>> containing(g.vertex_count());
  for (std::size_t i = 0; i < m; ++i) {
    for (VertexId v : cliques[i].members) containing[v].push_back(i);
  }
  std::vector<std::uint32_t> weight(m * m, 0);
  for (const auto& list : containing) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        ++weight[list[a] * m + list[b]];
      }
    }
  }
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (weight[i * m + j] > 0) candidates.emplace_back(weight[i * m + j], i, j);
    }
  }
  // Heaviest first; equal weights keep the lexicographically smallest pair.
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::tie(std::get<1>(a), std::get<2>(a)) <
           std::tie(std::get<1>(b), std::get<2>(b));
  });

  DisjointSets sets(m);
  std::size_t joined = 0;
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& [w, i, j] : candidates) {
    if (sets.unite(i, j)) {
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (++joined + 1 == m) break;
    }
  }
  if (joined + 1 != m) throw InvariantError("clique intersection graph is disconnected");

  // Any parent structure will do; rerooted() rebuilds it breadth-first.
  RootedCliqueTree flat;
  flat.nodes = std::move(cliques);
  flat.parent.assign(m, RootedCliqueTree::npos);
  std::vector<char> seen(m, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    for (std::size_t nb : adj[at]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        flat.parent[nb] = at;
        stack.push_back(nb);
      }
    }
  }
  return flat.rerooted(0);
}

}  // namespace meccount
