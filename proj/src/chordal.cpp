#include <algorithm>

#include "meccount/graph.hpp"
#include "partition_refinement.hpp"

namespace meccount {

std::vector<VertexId> lbfs_order(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  const VertexSet initial[] = {all};
  detail::LbfsRefiner refiner(g, initial);
  std::vector<VertexId> order;
  order.reserve(n);
  while (!refiner.done()) order.push_back(refiner.visit_front());
  return order;
}

bool reverse_is_peo(const UndirectedGraph& g, std::span<const VertexId> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) return false;
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, unseen);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != unseen) return false;
    pos[order[i]] = i;
  }
  // For each v, its earlier neighbours minus the latest one must all be
  // adjacent to that latest one.
  for (VertexId v : order) {
    VertexId latest = v;
    bool found = false;
    for (VertexId w : g.neighbors(v)) {
      if (pos[w] < pos[v] && (!found || pos[w] > pos[latest])) {
        latest = w;
        found = true;
      }
    }
    if (!found) continue;
    for (VertexId w : g.neighbors(v)) {
      if (pos[w] < pos[v] && w != latest && !g.adjacent(latest, w)) return false;
    }
  }
  return true;
}

bool is_chordal(const UndirectedGraph& g) {
  const auto order = lbfs_order(g);
  return reverse_is_peo(g, order);
}

std::vector<Clique> maximal_cliques(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto order = lbfs_order(g);
  if (!reverse_is_peo(g, order)) {
    throw InputError("maximal_cliques requires a chordal graph");
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // In elimination order (reverse LBFS) the candidate clique of v is v plus
  // its earlier LBFS neighbours. A candidate is dominated exactly when some u
  // has v as its nearest earlier neighbour and one more earlier neighbour.
  std::vector<std::size_t> earlier(n, 0);
  std::vector<VertexId> nearest(n, 0);
  std::vector<char> has_nearest(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (pos[w] < pos[v]) {
        ++earlier[v];
        if (!has_nearest[v] || pos[w] > pos[nearest[v]]) {
          nearest[v] = w;
          has_nearest[v] = 1;
        }
      }
    }
  }
  std::vector<char> dominated(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    if (has_nearest[u] && earlier[u] == earlier[nearest[u]] + 1) {
      dominated[nearest[u]] = 1;
    }
  }
  std::vector<Clique> out;
  for (VertexId v = 0; v < n; ++v) {
    if (dominated[v]) continue;
    Clique c;
    c.members.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (pos[w] < pos[v]) c.members.push_back(w);
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace meccount
