#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "meccount/common.hpp"
#include "meccount/graph.hpp"

namespace meccount {

/// Background knowledge: directed claims u -> v over skeleton edges.
/// Kept sorted and duplicate-free. Both u -> v and v -> u may be present;
/// such knowledge is contradictory and counts to zero.
class BackgroundKnowledge {
 public:
  BackgroundKnowledge() = default;
  explicit BackgroundKnowledge(std::vector<VertexPair> edges);

  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(VertexId from, VertexId to) const;

  /// Endpoints of all claims, sorted.
  VertexSet endpoints() const;

  bool operator==(const BackgroundKnowledge&) const = default;

 private:
  std::vector<VertexPair> edges_;
};

/// Claims with both endpoints in `h` (h sorted).
BackgroundKnowledge restrict_knowledge(const BackgroundKnowledge& k,
                                       const VertexSet& h);

/// Restricts to `sub.to_parent` and relabels into the subgraph's local ids.
BackgroundKnowledge localize_knowledge(const BackgroundKnowledge& k,
                                       const VertexSet& to_parent);

struct MecInstance {
  PartiallyDirectedGraph graph;
  BackgroundKnowledge knowledge;
};

enum class ViolationKind {
  NonChordalComponent,
  PartiallyDirectedCycle,
  KnowledgeNotInGraph,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  VertexSet vertices;              // vertices the violation is about
  std::vector<VertexPair> edges;   // offending edges or claims, when any
};

/// Structural checks; an empty result means the instance can be counted.
/// Semantic essential-graph validity is not checked.
std::vector<Violation> validate(const MecInstance& instance);

/// Undirected connected components after dropping directed edges, singletons
/// included, ordered by smallest vertex.
std::vector<InducedSubgraph> chordal_components(const PartiallyDirectedGraph& g);

/// Largest number of vertices of a maximal clique touched by claims lying
/// inside that clique. Requires chordal components.
std::size_t max_clique_knowledge(const MecInstance& instance);

/// True when some claim u -> v contradicts a directed edge v -> u.
bool knowledge_reverses_directed_edge(const MecInstance& instance);

struct CountOptions;

/// Number of orientations of the class consistent with the knowledge.
/// Throws ValidationError when validate() reports violations.
Count count_amo(const MecInstance& instance);
Count count_amo(const MecInstance& instance, const CountOptions& options);

}  // namespace meccount
