#pragma once

// Internal pieces of the counting engine shared between translation units.

#include <map>

#include "meccount/counting.hpp"

namespace meccount::detail {

/// lbfs_background without the maximal-clique and knowledge checks.
LbfsResult lbfs_background_unchecked(const UndirectedGraph& g, const Clique& c,
                                     const BackgroundKnowledge& k);

/// Evaluates Phi with two caches: Phi(X, {}, K[X]) keyed by the vertex set
/// translated through an optional host map, and, per call, the table of
/// Phi(T_a, R_1..R_i) over the chain members.
class PhiEvaluator {
 public:
  explicit PhiEvaluator(std::size_t psi_cap, SessionStats* stats = nullptr)
      : psi_cap_(psi_cap), stats_(stats) {}

  /// `k` must lie inside `s`; the chain must be strictly nested below `s`.
  /// `host` maps the ids used in `s` to the ids used as cache keys; null
  /// means identity.
  Count phi(const VertexSet& s, const PrefixChain& chain,
            const BackgroundKnowledge& k, const VertexSet* host = nullptr);

  /// Phi(X, {}, K[X]) for X inside the vertex range of `k`.
  Count phi_unconstrained(const VertexSet& x, const BackgroundKnowledge& k,
                          const VertexSet* host = nullptr);

  FactorialTable& factorials() noexcept { return factorials_; }

 private:
  std::size_t psi_cap_;
  SessionStats* stats_;
  FactorialTable factorials_;
  std::map<VertexSet, Count> unconstrained_;
};

/// Subset dynamic program counting linear extensions; no cap check.
Count count_linear_extensions(const VertexSet& vk, const BackgroundKnowledge& k,
                              FactorialTable& factorials);

}  // namespace meccount::detail
