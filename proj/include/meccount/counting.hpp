#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "meccount/common.hpp"
#include "meccount/graph.hpp"
#include "meccount/mec.hpp"

namespace meccount {

inline constexpr std::size_t kDefaultPsiCap = 20;
/// Hard ceiling on the Psi state space (2^24 dynamic-programming cells).
inline constexpr std::size_t kMaxPsiCap = 24;

/// Output of the background-aware LBFS started from a maximal clique C.
struct LbfsResult {
  /// False when some claim contradicts an edge direction forced by starting
  /// the traversal at C.
  bool flag = true;
  /// Undirected components left after removing C, in discovery order; each
  /// sorted.
  std::vector<VertexSet> components;
};

/// Runs LBFS on the connected chordal graph `g` from the maximal clique `c`
/// and checks `k` against the forced directions. Throws InputError if `c` is
/// not a maximal clique of `g` or a claim is not an edge of `g`.
LbfsResult lbfs_background(const UndirectedGraph& g, const Clique& c,
                           const BackgroundKnowledge& k);

/// Strictly nested vertex sets R1 < R2 < ... < Rl, smallest first.
struct PrefixChain {
  std::vector<VertexSet> sets;

  bool empty() const noexcept { return sets.empty(); }
  std::size_t size() const noexcept { return sets.size(); }
};

/// Separators on the root-to-`node` path that are subsets of that node's
/// clique, deduplicated and ordered by size. Throws InvariantError if they are
/// not strictly nested.
PrefixChain forbidden_prefixes(const RootedCliqueTree& tree, std::size_t node);
/// Same, locating the node by its clique; throws InputError if absent.
PrefixChain forbidden_prefixes(const RootedCliqueTree& tree, const Clique& c);

/// Factorials 0!, 1!, ... grown on demand.
class FactorialTable {
 public:
  FactorialTable() : table_{Count(1)} {}
  const Count& operator()(std::size_t n);
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::vector<Count> table_;
};

/// Number of orderings of `vk` putting u before v for every claim u -> v.
/// Zero if the claims contain a cycle. Throws PsiCapError if |vk| > cap and
/// InputError when a claim leaves `vk`.
Count psi(const VertexSet& vk, const BackgroundKnowledge& k,
          std::size_t cap = kDefaultPsiCap);

/// Number of permutations of `s` honouring `k` that start with none of the
/// sets in `chain`. Throws InputError when the chain is not strictly nested
/// below `s` or a claim leaves `s`.
Count phi(const VertexSet& s, const PrefixChain& chain,
          const BackgroundKnowledge& k, std::size_t psi_cap = kDefaultPsiCap);

/// Write-once map from a sorted vertex set to its count.
class MemoTable {
 public:
  const Count* find(const VertexSet& key) const;
  /// Throws InvariantError when `key` already holds a different value.
  void store(const VertexSet& key, const Count& value);
  std::size_t size() const noexcept { return table_.size(); }
  void clear() { table_.clear(); }

 private:
  std::map<VertexSet, Count> table_;
};

struct CountOptions {
  std::size_t psi_cap = kDefaultPsiCap;
  bool memoize = true;
  /// Root of the outermost clique tree, as an index into its node list.
  /// Used by count_uccg only; recursive calls keep the default root.
  std::optional<std::size_t> root_override;
};

struct ComponentStats {
  std::size_t vertices = 0;
  std::size_t maximal_cliques = 0;
  std::size_t distinct_subproblems = 0;
};

struct SessionStats {
  std::uint64_t count_calls = 0;          // every entry into the recursion
  std::uint64_t distinct_subproblems = 0; // distinct vertex sets counted
  std::uint64_t memo_hits = 0;
  std::uint64_t lbfs_calls = 0;
  std::uint64_t flag_rejections = 0;      // cliques skipped by the LBFS flag
  std::uint64_t phi_calls = 0;
  std::uint64_t psi_calls = 0;
  std::size_t max_knowledge_vertices = 0; // largest Psi argument seen
  std::vector<ComponentStats> components; // chordal components of size >= 2
};

/// Counts orientations of the connected chordal graph `g` consistent with
/// `k`. The memo is keyed by vertex sets of `g`, so reuse it only for the same
/// graph and knowledge.
Count count_uccg(const UndirectedGraph& g, const BackgroundKnowledge& k,
                 MemoTable& memo, const CountOptions& options = {},
                 SessionStats* stats = nullptr);
Count count_uccg(const UndirectedGraph& g, const BackgroundKnowledge& k,
                 const CountOptions& options = {});

/// Contribution of each clique-tree node of `g` to the top-level sum, in
/// node order; zero for cliques rejected by the LBFS flag.
std::vector<Count> clique_contributions(const UndirectedGraph& g,
                                        const BackgroundKnowledge& k,
                                        const CountOptions& options = {});

struct SessionResult {
  Count count;
  SessionStats stats;
};

/// Counts a whole instance with one shared memo and records statistics.
/// Throws ValidationError for instances rejected by validate().
SessionResult count_session(const MecInstance& instance,
                            const CountOptions& options = {});

}  // namespace meccount
