#include <algorithm>
#include <string>

#include "engine_detail.hpp"
#include "partition_refinement.hpp"

namespace meccount {

namespace detail {

LbfsResult lbfs_background_unchecked(const UndirectedGraph& g, const Clique& c,
                                     const BackgroundKnowledge& k) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_c(n, 0);
  for (VertexId v : c.members) in_c[v] = 1;
  VertexSet rest;
  rest.reserve(n - c.size());
  for (VertexId v = 0; v < n; ++v) {
    if (!in_c[v]) rest.push_back(v);
  }

  // Claims grouped by head.
  std::vector<std::vector<VertexId>> claims_into(n);
  for (const auto& [u, v] : k.edges()) claims_into[v].push_back(u);

  const VertexSet initial[] = {c.members, rest};
  LbfsRefiner refiner(g, initial);
  std::vector<char> in_listed(n, 0);  // member of a set appended to the list
  std::vector<char> in_x(n, 0);
  LbfsResult result;
  VertexSet x;
  std::vector<VertexId> stack;

  while (!refiner.done()) {
    const VertexId v = refiner.front_min();
    if (!in_listed[v] && !in_c[v]) {
      refiner.for_each_member(refiner.front(), [&](VertexId w) { x.push_back(w); });
      for (VertexId w : x) {
        in_listed[w] = 1;
        in_x[w] = 1;
      }
      // Components of G[X], appended in order of their smallest vertex.
      for (VertexId s : x) {
        if (!in_x[s]) continue;
        VertexSet comp;
        in_x[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
          const VertexId a = stack.back();
          stack.pop_back();
          comp.push_back(a);
          for (VertexId b : g.neighbors(a)) {
            if (in_x[b]) {
              in_x[b] = 0;
              stack.push_back(b);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        result.components.push_back(std::move(comp));
      }
      x.clear();
    }
    for (VertexId u : claims_into[v]) {
      if (!in_listed[u] && !in_c[u]) result.flag = false;
    }
    refiner.visit_front();
  }
  return result;
}

}  // namespace detail

LbfsResult lbfs_background(const UndirectedGraph& g, const Clique& c,
                           const BackgroundKnowledge& k) {
  const std::size_t n = g.vertex_count();
  if (c.members.empty()) throw InputError("lbfs_background needs a nonempty clique");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.members[i] >= n || (i > 0 && c.members[i - 1] >= c.members[i])) {
      throw InputError("clique members must be sorted vertex ids of the graph");
    }
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!g.adjacent(c.members[i], c.members[j])) {
        throw InputError("vertex set is not a clique of the graph");
      }
    }
  }
  // Maximal: no outside vertex is adjacent to every member.
  std::vector<std::size_t> hits(n, 0);
  for (VertexId v : c.members) {
    for (VertexId w : g.neighbors(v)) ++hits[w];
  }
  for (VertexId w = 0; w < n; ++w) {
    if (!c.contains(w) && hits[w] == c.size()) {
      throw InputError("clique is not maximal: vertex " + std::to_string(w) +
                       " extends it");
    }
  }
  for (const auto& [u, v] : k.edges()) {
    if (u >= n || v >= n || u == v || !g.adjacent(u, v)) {
      throw InputError("knowledge claim " + std::to_string(u) + "->" +
                       std::to_string(v) + " is not an edge of the graph");
    }
  }
  return detail::lbfs_background_unchecked(g, c, k);
}

}  // namespace meccount
