#include "meccount/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace meccount {

namespace {

void check_pair(std::size_t n, VertexPair e, const char* what) {
  if (e.first >= n || e.second >= n) {
    throw InputError(std::string(what) + " (" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + ") references a vertex >= " +
                     std::to_string(n));
  }
  if (e.first == e.second) {
    throw InputError(std::string(what) + " self-loop at vertex " +
                     std::to_string(e.first));
  }
}

VertexPair unordered(VertexPair e) {
  return e.first < e.second ? e : VertexPair{e.second, e.first};
}

}  // namespace

const char* engine_version() noexcept { return MECCOUNT_VERSION_STRING; }

UndirectedGraph::UndirectedGraph(std::size_t n) : adjacency_(n) {}

UndirectedGraph::UndirectedGraph(std::size_t n,
                                 std::span<const VertexPair> edges)
    : adjacency_(n) {
  for (const auto& e : edges) {
    check_pair(n, e, "edge");
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool UndirectedGraph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexPair> UndirectedGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const VertexId> vertices) {
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());

  constexpr VertexId absent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> local(g.vertex_count(), absent);
  for (VertexId i = 0; i < out.to_parent.size(); ++i) {
    local[out.to_parent[i]] = i;
  }
  std::vector<VertexPair> edges;
  for (VertexId i = 0; i < out.to_parent.size(); ++i) {
    for (VertexId w : g.neighbors(out.to_parent[i])) {
      const VertexId j = local[w];
      if (j != absent && i < j) edges.emplace_back(i, j);
    }
  }
  out.graph = UndirectedGraph(out.to_parent.size(), edges);
  return out;
}

PartiallyDirectedGraph::PartiallyDirectedGraph(std::size_t n,
                                               std::vector<VertexPair> undirected,
                                               std::vector<VertexPair> directed)
    : n_(n), undirected_(std::move(undirected)), directed_(std::move(directed)) {
  for (auto& e : undirected_) {
    check_pair(n, e, "undirected edge");
    e = unordered(e);
  }
  for (const auto& e : directed_) check_pair(n, e, "directed edge");
  std::sort(undirected_.begin(), undirected_.end());
  undirected_.erase(std::unique(undirected_.begin(), undirected_.end()),
                    undirected_.end());
  std::sort(directed_.begin(), directed_.end());
  directed_.erase(std::unique(directed_.begin(), directed_.end()),
                  directed_.end());

  std::vector<VertexPair> projected;
  projected.reserve(directed_.size());
  for (const auto& e : directed_) projected.push_back(unordered(e));
  std::sort(projected.begin(), projected.end());
  if (std::adjacent_find(projected.begin(), projected.end()) != projected.end()) {
    throw InputError("a vertex pair is directed in both orientations");
  }
  for (const auto& e : projected) {
    if (std::binary_search(undirected_.begin(), undirected_.end(), e)) {
      throw InputError("pair (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) +
                       ") is both undirected and directed");
    }
  }
}

bool PartiallyDirectedGraph::has_undirected(VertexId u, VertexId v) const {
  return std::binary_search(undirected_.begin(), undirected_.end(),
                            unordered({u, v}));
}

bool PartiallyDirectedGraph::has_directed(VertexId from, VertexId to) const {
  return std::binary_search(directed_.begin(), directed_.end(),
                            VertexPair{from, to});
}

bool PartiallyDirectedGraph::adjacent(VertexId u, VertexId v) const {
  return has_undirected(u, v) || has_directed(u, v) || has_directed(v, u);
}

UndirectedGraph PartiallyDirectedGraph::skeleton() const {
  std::vector<VertexPair> all = undirected_;
  all.insert(all.end(), directed_.begin(), directed_.end());
  return UndirectedGraph(n_, all);
}

UndirectedGraph PartiallyDirectedGraph::undirected_part() const {
  return UndirectedGraph(n_, undirected_);
}

bool Clique::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<std::size_t> RootedCliqueTree::path_from_root(std::size_t node) const {
  std::vector<std::size_t> path;
  for (std::size_t at = node; at != npos; at = parent[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

RootedCliqueTree RootedCliqueTree::rerooted(std::size_t new_root) const {
  if (new_root >= nodes.size()) throw InputError("root index out of range");
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (parent[i] != npos) {
      adj[i].push_back(parent[i]);
      adj[parent[i]].push_back(i);
    }
  }
  RootedCliqueTree out;
  out.nodes = nodes;
  out.root = new_root;
  out.parent.assign(nodes.size(), npos);
  out.children.assign(nodes.size(), {});
  std::vector<char> seen(nodes.size(), 0);
  std::queue<std::size_t> q;
  q.push(new_root);
  seen[new_root] = 1;
  while (!q.empty()) {
    const std::size_t at = q.front();
    q.pop();
    std::sort(adj[at].begin(), adj[at].end());
    for (std::size_t nb : adj[at]) {
      if (seen[nb]) continue;
      seen[nb] = 1;
      out.parent[nb] = at;
      out.children[at].push_back(nb);
      q.push(nb);
    }
  }
  return out;
}

std::size_t RootedCliqueTree::find(const Clique& c) const {
  auto it = std::find(nodes.begin(), nodes.end(), c);
  return it == nodes.end() ? npos : static_cast<std::size_t>(it - nodes.begin());
}

std::vector<VertexSet> connected_components(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const UndirectedGraph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace meccount
