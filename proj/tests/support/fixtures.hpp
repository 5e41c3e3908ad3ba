#pragma once

// Small named instances used across the test suites.

#include <algorithm>
#include <vector>

#include "meccount/graph.hpp"
#include "meccount/mec.hpp"

namespace fx {

using meccount::BackgroundKnowledge;
using meccount::MecInstance;
using meccount::PartiallyDirectedGraph;
using meccount::UndirectedGraph;
using meccount::VertexPair;

// MEC 1: a-b, a->c, b->c, d->c, d-e, d-f, e-f.
enum Mec1 : meccount::VertexId { a, b, c, d, e, f };

inline PartiallyDirectedGraph mec1() {
  return PartiallyDirectedGraph(6, {{a, b}, {d, e}, {d, f}, {e, f}}, {{a, c}, {b, c}, {d, c}});
}
inline BackgroundKnowledge mec1_example1() { return BackgroundKnowledge({{a, b}, {e, d}, {f, d}}); }
inline BackgroundKnowledge mec1_example2() { return BackgroundKnowledge({{a, b}, {e, d}}); }

// MEC 2: vertices 1..7 stored as 0..6; cliques {1,2,3,4}, {3,4,5,6}, {5,6,7}.
inline constexpr meccount::VertexId v(int label) { return static_cast<meccount::VertexId>(label - 1); }

inline UndirectedGraph mec2_skeleton() {
  const std::vector<VertexPair> edges{
      {v(1), v(2)}, {v(1), v(3)}, {v(1), v(4)}, {v(2), v(3)}, {v(2), v(4)},
      {v(3), v(4)}, {v(3), v(5)}, {v(3), v(6)}, {v(4), v(5)}, {v(4), v(6)},
      {v(5), v(6)}, {v(5), v(7)}, {v(6), v(7)}};
  return UndirectedGraph(7, edges);
}
inline PartiallyDirectedGraph mec2() {
  return PartiallyDirectedGraph(7, mec2_skeleton().edges(), {});
}
inline BackgroundKnowledge mec2_example3() {
  return BackgroundKnowledge({{v(1), v(2)}, {v(3), v(6)}});
}
inline BackgroundKnowledge mec2_example4() {
  return BackgroundKnowledge({{v(1), v(2)}, {v(2), v(3)}, {v(1), v(3)},
                              {v(3), v(6)}, {v(4), v(6)}, {v(6), v(7)}});
}

// Triangle {1,2,3} plus vertex 4 adjacent to 2 and 3, as ids 0..3.
inline UndirectedGraph triangle_pendant() {
  const std::vector<VertexPair> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  return UndirectedGraph(4, edges);
}

inline UndirectedGraph path3() {
  const std::vector<VertexPair> edges{{0, 1}, {1, 2}};
  return UndirectedGraph(3, edges);
}

inline UndirectedGraph complete(std::size_t n) {
  std::vector<VertexPair> edges;
  for (meccount::VertexId i = 0; i < n; ++i) {
    for (meccount::VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph cycle(std::size_t n) {
  std::vector<VertexPair> edges;
  for (meccount::VertexId i = 0; i < n; ++i) {
    edges.emplace_back(std::min<meccount::VertexId>(i, (i + 1) % n),
                       std::max<meccount::VertexId>(i, (i + 1) % n));
  }
  return UndirectedGraph(n, edges);
}

inline PartiallyDirectedGraph as_pdg(const UndirectedGraph& g) {
  return PartiallyDirectedGraph(g.vertex_count(), g.edges(), {});
}

}  // namespace fx
