#include "meccount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace meccount::oracle {

namespace {

using Mask = std::uint32_t;

void check_cap(std::size_t n, std::size_t cap) {
  if (cap > kMaxOracleCap) {
    throw InputError("oracle cap above " + std::to_string(kMaxOracleCap) +
                     " is not supported");
  }
  if (n > cap) throw OracleCapError(n, cap);
}

void check_knowledge(const PartiallyDirectedGraph& g, const BackgroundKnowledge& k) {
  for (const auto& [u, v] : k.edges()) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) {
      throw InputError("knowledge claim is not an edge of the graph");
    }
  }
}

OrientationSet finish(std::set<std::vector<VertexPair>>& arcs, std::size_t n) {
  OrientationSet out;
  out.members.reserve(arcs.size());
  for (const auto& a : arcs) out.members.emplace_back(n, std::vector<VertexPair>{}, a);
  return out;
}

// Is `to` reachable from `from` along arcs?
bool reaches(const std::vector<Mask>& out, VertexId from, VertexId to) {
  Mask seen = Mask{1} << from;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= out[static_cast<std::size_t>(__builtin_ctz(f))];
    }
    if (next & (Mask{1} << to)) return true;
    frontier = next & ~seen;
    seen |= next;
  }
  return false;
}

}  // namespace

std::vector<VStructure> v_structures(const PartiallyDirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> parents(n);
  for (const auto& [u, v] : g.directed_edges()) parents[v].push_back(u);
  std::vector<VStructure> out;
  for (VertexId b = 0; b < n; ++b) {
    const auto& p = parents[b];
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (!g.adjacent(p[i], p[j])) {
          out.push_back({std::min(p[i], p[j]), b, std::max(p[i], p[j])});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic(const PartiallyDirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<VertexId>> succ(n);
  for (const auto& [u, v] : g.directed_edges()) {
    succ[u].push_back(v);
    ++indeg[v];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++emitted;
    for (VertexId w : succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return emitted == n;
}

bool is_consistent_amo(const PartiallyDirectedGraph& g,
                       const PartiallyDirectedGraph& orientation,
                       const BackgroundKnowledge& k) {
  if (orientation.vertex_count() != g.vertex_count()) return false;
  if (!orientation.undirected_edges().empty()) return false;
  if (!(orientation.skeleton() == g.skeleton())) return false;
  for (const auto& [u, v] : g.directed_edges()) {
    if (!orientation.has_directed(u, v)) return false;
  }
  if (!is_acyclic(orientation)) return false;
  if (v_structures(orientation) != v_structures(g)) return false;
  for (const auto& [u, v] : k.edges()) {
    if (!orientation.has_directed(u, v)) return false;
  }
  return true;
}

OrientationSet enumerate_amos(const PartiallyDirectedGraph& g,
                              const BackgroundKnowledge& k, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  check_cap(n, cap);
  check_knowledge(g, k);

  const auto target_list = v_structures(g);
  const std::set<VStructure> target(target_list.begin(), target_list.end());
  std::vector<Mask> adj(n, 0);
  std::vector<Mask> out(n, 0);
  std::vector<Mask> in(n, 0);
  for (const auto& [u, v] : g.undirected_edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  for (const auto& [u, v] : g.directed_edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
    out[u] |= Mask{1} << v;
    in[v] |= Mask{1} << u;
  }

  // Candidate directions per undirected edge after applying the claims.
  struct Slot {
    VertexId a, b;
    bool forward, backward;  // a->b allowed, b->a allowed
  };
  std::vector<Slot> slots;
  for (const auto& [u, v] : g.undirected_edges()) {
    Slot s{u, v, !k.contains(v, u), !k.contains(u, v)};
    if (!s.forward && !s.backward) return {};
    slots.push_back(s);
  }
  for (const auto& [u, v] : g.directed_edges()) {
    if (k.contains(v, u)) return {};
  }

  std::set<std::vector<VertexPair>> found;
  // Adding x->y: reject if it closes a cycle or creates a collider at y
  // that the input does not have.
  auto admissible = [&](VertexId x, VertexId y) {
    if (reaches(out, y, x)) return false;
    for (Mask p = in[y]; p != 0; p &= p - 1) {
      const auto z = static_cast<VertexId>(__builtin_ctz(p));
      if ((adj[x] >> z) & 1U) continue;
      if (!target.count({std::min(x, z), y, std::max(x, z)})) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == slots.size()) {
      std::vector<VertexPair> arcs;
      for (VertexId u = 0; u < n; ++u) {
        for (Mask m = out[u]; m != 0; m &= m - 1) {
          arcs.emplace_back(u, static_cast<VertexId>(__builtin_ctz(m)));
        }
      }
      PartiallyDirectedGraph candidate(n, {}, arcs);
      if (is_consistent_amo(g, candidate, k)) found.insert(candidate.directed_edges());
      return;
    }
    const Slot& s = slots[i];
    for (int dir = 0; dir < 2; ++dir) {
      if (dir == 0 ? !s.forward : !s.backward) continue;
      const VertexId x = dir == 0 ? s.a : s.b;
      const VertexId y = dir == 0 ? s.b : s.a;
      if (!admissible(x, y)) continue;
      out[x] |= Mask{1} << y;
      in[y] |= Mask{1} << x;
      self(self, i + 1);
      out[x] &= ~(Mask{1} << y);
      in[y] &= ~(Mask{1} << x);
    }
  };
  recurse(recurse, 0);
  return finish(found, n);
}

PartiallyDirectedGraph orient_by_order(const PartiallyDirectedGraph& g,
                                       const std::vector<VertexId>& order) {
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<VertexPair> arcs = g.directed_edges();
  for (const auto& [u, v] : g.undirected_edges()) {
    arcs.push_back(pos[u] < pos[v] ? VertexPair{u, v} : VertexPair{v, u});
  }
  return PartiallyDirectedGraph(g.vertex_count(), {}, std::move(arcs));
}

OrientationSet amos_by_permutation(const PartiallyDirectedGraph& g,
                                   const BackgroundKnowledge& k, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  check_cap(n, cap);
  check_knowledge(g, k);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::set<std::vector<VertexPair>> found;
  do {
    auto candidate = orient_by_order(g, order);
    if (is_consistent_amo(g, candidate, k)) found.insert(candidate.directed_edges());
  } while (std::next_permutation(order.begin(), order.end()));
  return finish(found, n);
}

OrientationSet amos_represented_by(const UndirectedGraph& g, const Clique& c,
                                   std::size_t cap) {
  const std::size_t n = g.vertex_count();
  check_cap(n, cap);
  const PartiallyDirectedGraph as_pdg(n, g.edges(), {});

  // Labels hold (n - visit step) of visited neighbours in visit order; LBFS
  // may take any unvisited vertex whose label is lexicographically largest.
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> order;
  std::set<std::vector<VertexPair>> found;

  auto recurse = [&](auto&& self) -> void {
    const std::size_t step = order.size();
    if (step == n) {
      found.insert(orient_by_order(as_pdg, order).directed_edges());
      return;
    }
    const std::vector<std::size_t>* best = nullptr;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v] && (best == nullptr || *best < label[v])) best = &label[v];
    }
    const auto best_label = *best;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v] || label[v] != best_label) continue;
      if (step < c.size() && !c.contains(v)) continue;
      visited[v] = 1;
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!visited[w]) label[w].push_back(n - step);
      }
      self(self);
      for (VertexId w : g.neighbors(v)) {
        if (!visited[w]) label[w].pop_back();
      }
      order.pop_back();
      visited[v] = 0;
    }
  };
  recurse(recurse);
  return finish(found, n);
}

PartiallyDirectedGraph union_graph(const OrientationSet& s) {
  if (s.empty()) throw InputError("union of an empty orientation set");
  const auto& first = s.members.front();
  const auto skeleton = first.skeleton();
  for (const auto& m : s.members) {
    if (!(m.skeleton() == skeleton)) {
      throw InputError("orientations do not share one skeleton");
    }
  }
  std::vector<VertexPair> undirected;
  std::vector<VertexPair> directed;
  for (const auto& [u, v] : skeleton.edges()) {
    bool forward = false;
    bool backward = false;
    for (const auto& m : s.members) {
      forward |= m.has_directed(u, v) || m.has_undirected(u, v);
      backward |= m.has_directed(v, u) || m.has_undirected(u, v);
    }
    if (forward && backward) {
      undirected.emplace_back(u, v);
    } else if (forward) {
      directed.emplace_back(u, v);
    } else {
      directed.emplace_back(v, u);
    }
  }
  return PartiallyDirectedGraph(first.vertex_count(), std::move(undirected),
                                std::move(directed));
}

Count oracle_count(const MecInstance& instance, std::size_t cap) {
  return Count(enumerate_amos(instance.graph, instance.knowledge, cap).size());
}

}  // namespace meccount::oracle
