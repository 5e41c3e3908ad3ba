#include "meccount/mec.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "meccount/counting.hpp"

namespace meccount {

BackgroundKnowledge::BackgroundKnowledge(std::vector<VertexPair> edges)
    : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool BackgroundKnowledge::contains(VertexId from, VertexId to) const {
  return std::binary_search(edges_.begin(), edges_.end(), VertexPair{from, to});
}

VertexSet BackgroundKnowledge::endpoints() const {
  VertexSet out;
  out.reserve(edges_.size() * 2);
  for (const auto& [u, v] : edges_) {
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BackgroundKnowledge restrict_knowledge(const BackgroundKnowledge& k,
                                       const VertexSet& h) {
  std::vector<VertexPair> kept;
  for (const auto& [u, v] : k.edges()) {
    if (std::binary_search(h.begin(), h.end(), u) &&
        std::binary_search(h.begin(), h.end(), v)) {
      kept.emplace_back(u, v);
    }
  }
  return BackgroundKnowledge(std::move(kept));
}

BackgroundKnowledge localize_knowledge(const BackgroundKnowledge& k,
                                       const VertexSet& to_parent) {
  std::vector<VertexPair> kept;
  for (const auto& [u, v] : k.edges()) {
    auto iu = std::lower_bound(to_parent.begin(), to_parent.end(), u);
    auto iv = std::lower_bound(to_parent.begin(), to_parent.end(), v);
    if (iu != to_parent.end() && *iu == u && iv != to_parent.end() && *iv == v) {
      kept.emplace_back(static_cast<VertexId>(iu - to_parent.begin()),
                        static_cast<VertexId>(iv - to_parent.begin()));
    }
  }
  return BackgroundKnowledge(std::move(kept));
}

std::vector<InducedSubgraph> chordal_components(const PartiallyDirectedGraph& g) {
  const auto undirected = g.undirected_part();
  std::vector<InducedSubgraph> out;
  for (const auto& comp : connected_components(undirected)) {
    out.push_back(induced_subgraph(undirected, comp));
  }
  return out;
}

namespace {

std::string describe_pair(VertexPair e, const char* arrow) {
  std::ostringstream os;
  os << e.first << arrow << e.second;
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const MecInstance& instance) {
  const auto& g = instance.graph;
  const std::size_t n = g.vertex_count();
  std::vector<Violation> out;

  const auto comps = chordal_components(g);
  std::vector<std::size_t> comp_of(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (VertexId v : comps[c].to_parent) comp_of[v] = c;
    if (!is_chordal(comps[c].graph)) {
      Violation vio{ViolationKind::NonChordalComponent,
                    "undirected component is not chordal", comps[c].to_parent, {}};
      for (const auto& [a, b] : comps[c].graph.edges()) {
        vio.edges.emplace_back(comps[c].to_parent[a], comps[c].to_parent[b]);
      }
      out.push_back(std::move(vio));
    }
  }

  // Chain graph: no directed edge inside a component, and the directed edges
  // between components form a DAG.
  std::vector<std::vector<std::size_t>> succ(comps.size());
  std::vector<std::size_t> indeg(comps.size(), 0);
  for (const auto& e : g.directed_edges()) {
    const std::size_t a = comp_of[e.first];
    const std::size_t b = comp_of[e.second];
    if (a == b) {
      out.push_back({ViolationKind::PartiallyDirectedCycle,
                     "directed edge " + describe_pair(e, "->") +
                         " joins vertices of one undirected component",
                     {std::min(e.first, e.second), std::max(e.first, e.second)},
                     {e}});
      continue;
    }
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::queue<std::size_t> ready;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (indeg[c] == 0) ready.push(c);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.front();
    ready.pop();
    ++emitted;
    for (std::size_t d : succ[c]) {
      if (--indeg[d] == 0) ready.push(d);
    }
  }
  if (emitted != comps.size()) {
    Violation vio{ViolationKind::PartiallyDirectedCycle,
                  "directed edges between components form a cycle", {}, {}};
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (indeg[c] > 0) {
        vio.vertices.insert(vio.vertices.end(), comps[c].to_parent.begin(),
                            comps[c].to_parent.end());
      }
    }
    std::sort(vio.vertices.begin(), vio.vertices.end());
    for (const auto& e : g.directed_edges()) {
      if (indeg[comp_of[e.first]] > 0 && indeg[comp_of[e.second]] > 0) {
        vio.edges.push_back(e);
      }
    }
    out.push_back(std::move(vio));
  }

  for (const auto& e : instance.knowledge.edges()) {
    if (e.first >= n || e.second >= n || e.first == e.second ||
        !g.adjacent(e.first, e.second)) {
      out.push_back({ViolationKind::KnowledgeNotInGraph,
                     "knowledge " + describe_pair(e, "->") +
                         " is not an edge of the graph",
                     {},
                     {e}});
    }
  }
  return out;
}

bool knowledge_reverses_directed_edge(const MecInstance& instance) {
  for (const auto& [u, v] : instance.knowledge.edges()) {
    if (instance.graph.has_directed(v, u)) return true;
  }
  return false;
}

std::size_t max_clique_knowledge(const MecInstance& instance) {
  std::size_t best = 0;
  for (const auto& comp : chordal_components(instance.graph)) {
    if (comp.to_parent.size() < 2) continue;
    const auto local = localize_knowledge(instance.knowledge, comp.to_parent);
    if (local.empty()) continue;
    std::vector<char> in_clique(comp.to_parent.size(), 0);
    std::vector<char> touched(comp.to_parent.size(), 0);
    for (const auto& clique : maximal_cliques(comp.graph)) {
      for (VertexId v : clique.members) in_clique[v] = 1;
      std::size_t count = 0;
      for (const auto& [u, v] : local.edges()) {
        if (!in_clique[u] || !in_clique[v]) continue;
        if (!touched[u]) {
          touched[u] = 1;
          ++count;
        }
        if (!touched[v]) {
          touched[v] = 1;
          ++count;
        }
      }
      best = std::max(best, count);
      for (VertexId v : clique.members) in_clique[v] = touched[v] = 0;
    }
  }
  return best;
}

Count count_amo(const MecInstance& instance) {
  return count_amo(instance, CountOptions{});
}

Count count_amo(const MecInstance& instance, const CountOptions& options) {
  return count_session(instance, options).count;
}

}  // namespace meccount
