#pragma once

// Brute-force ground truth for small instances. Nothing here is on the
// counting path; these routines exist to check the engine.

#include <array>
#include <cstddef>
#include <vector>

#include "meccount/common.hpp"
#include "meccount/graph.hpp"
#include "meccount/mec.hpp"

namespace meccount::oracle {

inline constexpr std::size_t kDefaultOracleCap = 9;
/// Bitmask representation limit of the enumerators.
inline constexpr std::size_t kMaxOracleCap = 16;

/// Unshielded collider first -> center <- second with first < second.
struct VStructure {
  VertexId first;
  VertexId center;
  VertexId second;
  auto operator<=>(const VStructure&) const = default;
};

/// Sorted v-structures of a (partially) directed graph; only directed edges
/// can take part.
std::vector<VStructure> v_structures(const PartiallyDirectedGraph& g);

/// True when the directed edges contain no cycle.
bool is_acyclic(const PartiallyDirectedGraph& g);

/// Full structural check that `orientation` is an orientation of `g` that is
/// acyclic, keeps g's directed edges, has exactly g's v-structures and honours
/// every claim of `k`.
bool is_consistent_amo(const PartiallyDirectedGraph& g,
                       const PartiallyDirectedGraph& orientation,
                       const BackgroundKnowledge& k);

/// Fully directed graphs over one skeleton, sorted and duplicate-free.
struct OrientationSet {
  std::vector<PartiallyDirectedGraph> members;

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

/// Backtracking over edge orientations with cycle and v-structure pruning.
/// Throws OracleCapError when the graph has more than `cap` vertices.
OrientationSet enumerate_amos(const PartiallyDirectedGraph& g,
                              const BackgroundKnowledge& k,
                              std::size_t cap = kDefaultOracleCap);

/// Independent strategy: orientations induced by all n! vertex orders,
/// filtered by is_consistent_amo and deduplicated.
OrientationSet amos_by_permutation(const PartiallyDirectedGraph& g,
                                   const BackgroundKnowledge& k,
                                   std::size_t cap = kDefaultOracleCap);

/// Orientations induced by every LBFS ordering of `g` whose first |c|
/// vertices are the clique `c`.
OrientationSet amos_represented_by(const UndirectedGraph& g, const Clique& c,
                                   std::size_t cap = kDefaultOracleCap);

/// Edge u -> v when every member has it, u - v when both directions occur.
/// Throws InputError on an empty set or members with different skeletons.
PartiallyDirectedGraph union_graph(const OrientationSet& s);

/// Brute-force count for a whole instance.
Count oracle_count(const MecInstance& instance,
                   std::size_t cap = kDefaultOracleCap);

/// Orientation of `g`'s undirected edges by position in `order`; directed
/// edges are kept.
PartiallyDirectedGraph orient_by_order(const PartiallyDirectedGraph& g,
                                       const std::vector<VertexId>& order);

}  // namespace meccount::oracle
