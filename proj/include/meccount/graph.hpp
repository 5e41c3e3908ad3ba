#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "meccount/common.hpp"

namespace meccount {

/// Simple undirected graph over vertices 0..n-1 with sorted adjacency lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);
  /// Duplicate edges are merged; self-loops and out-of-range ids throw InputError.
  UndirectedGraph(std::size_t n, std::span<const VertexPair> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<VertexPair> edges() const;

  bool operator==(const UndirectedGraph&) const = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph with local ids 0..|vertices|-1 mapped back to the parent.
struct InducedSubgraph {
  UndirectedGraph graph;
  VertexSet to_parent;  // local id -> parent id, ascending
};

/// Induces on the given vertices. Local ids follow ascending parent id.
InducedSubgraph induced_subgraph(const UndirectedGraph& g,
                                 std::span<const VertexId> vertices);

/// Chain-graph style mixed graph: undirected edges plus directed edges.
/// Also the representation of a fully oriented graph (no undirected edges).
class PartiallyDirectedGraph {
 public:
  PartiallyDirectedGraph() = default;
  /// Throws InputError on self-loops, out-of-range ids, a pair that occurs
  /// both undirected and directed, or a pair directed both ways.
  PartiallyDirectedGraph(std::size_t n, std::vector<VertexPair> undirected,
                         std::vector<VertexPair> directed);

  std::size_t vertex_count() const noexcept { return n_; }
  /// Undirected edges as (u, v), u < v, sorted.
  const std::vector<VertexPair>& undirected_edges() const noexcept {
    return undirected_;
  }
  /// Directed edges as (tail, head), sorted.
  const std::vector<VertexPair>& directed_edges() const noexcept {
    return directed_;
  }

  bool has_undirected(VertexId u, VertexId v) const;
  bool has_directed(VertexId from, VertexId to) const;
  /// Adjacent in the skeleton.
  bool adjacent(VertexId u, VertexId v) const;

  UndirectedGraph skeleton() const;
  /// Graph over all vertices keeping only the undirected edges.
  UndirectedGraph undirected_part() const;

  bool operator==(const PartiallyDirectedGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexPair> undirected_;
  std::vector<VertexPair> directed_;
};

struct Clique {
  VertexSet members;  // sorted

  bool contains(VertexId v) const;
  std::size_t size() const noexcept { return members.size(); }
  auto operator<=>(const Clique&) const = default;
};

/// Tree over the maximal cliques of a connected chordal graph.
struct RootedCliqueTree {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<Clique> nodes;
  std::vector<std::size_t> parent;  // npos for the root
  std::vector<std::vector<std::size_t>> children;
  std::size_t root = 0;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Node indices from the root down to `node`, inclusive.
  std::vector<std::size_t> path_from_root(std::size_t node) const;
  /// Same tree, hung from another node.
  RootedCliqueTree rerooted(std::size_t new_root) const;
  /// Node index of an exact clique, or npos.
  std::size_t find(const Clique& c) const;
};

// Chordal-graph algorithmics.

/// Lexicographic BFS; ties go to the lowest vertex id. Starts at the lowest
/// id of each component, so disconnected graphs are handled as a forest.
std::vector<VertexId> lbfs_order(const UndirectedGraph& g);

/// True when reversing `order` gives a perfect elimination ordering, i.e. the
/// earlier neighbours of every vertex in `order` form a clique.
bool reverse_is_peo(const UndirectedGraph& g, std::span<const VertexId> order);

bool is_chordal(const UndirectedGraph& g);

/// Maximal cliques of a chordal graph, sorted lexicographically.
/// Throws InputError on non-chordal input.
std::vector<Clique> maximal_cliques(const UndirectedGraph& g);

/// Clique tree by maximum-weight spanning tree over intersection sizes.
/// Rooted at the first clique (in lexicographic order) containing the lowest
/// vertex. Throws InputError on disconnected or non-chordal input.
RootedCliqueTree clique_tree(const UndirectedGraph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<VertexSet> connected_components(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);

// Set helpers over sorted vertex lists.
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

}  // namespace meccount
