#pragma once

// Random connected chordal graphs and background knowledge with a prescribed
// max-clique-knowledge.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "meccount/common.hpp"
#include "meccount/graph.hpp"
#include "meccount/mec.hpp"

namespace meccount {

/// Seedable generator with conversions that do not depend on the standard
/// library's distribution implementations, so a seed means the same instance
/// on every platform.
class SeededRng {
 public:
  static constexpr const char* kName = "mt19937_64";

  /// `stream` separates independent uses of one user seed.
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::size_t n = 10;
  double p_low = 0.1;
  double p_high = 0.3;
  std::size_t k_target = 2;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1000;
};

struct GeneratedGraph {
  UndirectedGraph graph;
  double p = 0.0;            // edge probability of the accepted sample
  std::size_t attempts = 0;  // samples drawn, including the accepted one
};

/// Erdos-Renyi sample at a random p in [p_low, p_high), completed to a chordal
/// graph by eliminating vertices in decreasing order of a random rank, and
/// resampled until connected. Throws GenerationError when max_attempts
/// samples were all disconnected and InputError on a bad configuration.
GeneratedGraph random_chordal(const GenConfig& cfg);

/// Walks a clique tree depth first and tops every maximal clique up to
/// min(k_target, |C|) knowledge-touched vertices. Claims are oriented along
/// one seeded vertex order, so they are acyclic. Requires a connected chordal
/// graph and k_target >= 2.
BackgroundKnowledge gen_background(const UndirectedGraph& g, std::size_t k_target,
                                   std::uint64_t seed);

struct GrowResult {
  BackgroundKnowledge knowledge;
  bool grown = false;  // false when no admissible edge existed
};

/// Adds up to |base| claims between vertices that are already touched in
/// every maximal clique containing both, which leaves each clique's knowledge
/// vertex set unchanged. New claims follow a linear extension of `base`.
GrowResult grow_background(const UndirectedGraph& g, const BackgroundKnowledge& base,
                           std::uint64_t seed);

}  // namespace meccount
