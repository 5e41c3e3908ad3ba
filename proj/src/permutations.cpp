#include <algorithm>
#include <string>

#include "engine_detail.hpp"

namespace meccount {

const Count& FactorialTable::operator()(std::size_t n) {
  while (table_.size() <= n) {
    table_.push_back(table_.back() * static_cast<unsigned>(table_.size()));
  }
  return table_[n];
}

namespace detail {

namespace {

using Wide = unsigned __int128;

Count to_count(Wide x) {
  Count out = static_cast<std::uint64_t>(x >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(x);
  return out;
}

std::size_t index_of(const VertexSet& set, VertexId v) {
  auto it = std::lower_bound(set.begin(), set.end(), v);
  if (it == set.end() || *it != v) return set.size();
  return static_cast<std::size_t>(it - set.begin());
}

}  // namespace

Count count_linear_extensions(const VertexSet& vk, const BackgroundKnowledge& k,
                              FactorialTable& factorials) {
  const std::size_t m = vk.size();
  if (k.empty()) return factorials(m);
  if (m > kMaxPsiCap) throw PsiCapError(m, kMaxPsiCap);

  std::vector<std::uint32_t> before(m, 0);  // bit j set: j must precede i
  for (const auto& [u, v] : k.edges()) {
    const std::size_t iu = index_of(vk, u);
    const std::size_t iv = index_of(vk, v);
    if (iu == m || iv == m) {
      throw InputError("knowledge claim " + std::to_string(u) + "->" +
                       std::to_string(v) + " leaves the permuted set");
    }
    if (iu == iv) return Count(0);
    before[iv] |= std::uint32_t{1} << iu;
  }

  // dp[mask] = number of ways to order `mask` as a prefix closed under the
  // precedence constraints.
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<Wide> dp(std::size_t{1} << m, 0);
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const Wide ways = dp[mask];
    if (ways == 0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if ((mask & bit) == 0 && (before[i] & ~mask) == 0) dp[mask | bit] += ways;
    }
  }
  return to_count(dp[full]);
}

Count PhiEvaluator::phi_unconstrained(const VertexSet& x,
                                      const BackgroundKnowledge& k,
                                      const VertexSet* host) {
  VertexSet key;
  if (host != nullptr) {
    key.reserve(x.size());
    for (VertexId v : x) key.push_back((*host)[v]);
  } else {
    key = x;
  }
  if (auto it = unconstrained_.find(key); it != unconstrained_.end()) {
    return it->second;
  }
  const auto inside = restrict_knowledge(k, x);
  const auto vk = inside.endpoints();
  if (stats_ != nullptr) {
    ++stats_->psi_calls;
    stats_->max_knowledge_vertices =
        std::max(stats_->max_knowledge_vertices, vk.size());
  }
  if (vk.size() > psi_cap_) throw PsiCapError(vk.size(), psi_cap_);
  // Copy first: a later lookup may grow the table and move its storage.
  Count value = factorials_(x.size());
  value /= factorials_(vk.size());
  value *= count_linear_extensions(vk, inside, factorials_);
  unconstrained_.emplace(std::move(key), value);
  return value;
}

Count PhiEvaluator::phi(const VertexSet& s, const PrefixChain& chain,
                        const BackgroundKnowledge& k, const VertexSet* host) {
  if (stats_ != nullptr) ++stats_->phi_calls;
  const std::size_t l = chain.size();
  if (l == 0) return phi_unconstrained(s, k, host);

  // Members T_0..T_{l-1} are the chain sets, T_l is s. table[a][i] holds
  // Phi(T_a, {R_1..R_i}, K[T_a]) for i <= a.
  auto member = [&](std::size_t a) -> const VertexSet& {
    return a == l ? s : chain.sets[a];
  };
  std::vector<std::vector<Count>> table(l + 1);
  for (std::size_t a = 0; a <= l; ++a) {
    const VertexSet& t = member(a);
    table[a].resize(a + 1);
    table[a][0] = phi_unconstrained(t, k, host);
    for (std::size_t i = 1; i <= a; ++i) {
      const VertexSet& r = chain.sets[i - 1];
      bool enters_prefix = false;
      for (const auto& [u, v] : k.edges()) {
        if (std::binary_search(r.begin(), r.end(), v) &&
            !std::binary_search(r.begin(), r.end(), u) &&
            std::binary_search(t.begin(), t.end(), u)) {
          enters_prefix = true;
          break;
        }
      }
      if (enters_prefix) {
        table[a][i] = table[a][i - 1];
      } else {
        table[a][i] = table[a][i - 1] -
                      table[i - 1][i - 1] *
                          phi_unconstrained(set_difference(t, r), k, host);
      }
    }
  }
  return table[l][l];
}

}  // namespace detail

Count psi(const VertexSet& vk, const BackgroundKnowledge& k, std::size_t cap) {
  if (!std::is_sorted(vk.begin(), vk.end()) ||
      std::adjacent_find(vk.begin(), vk.end()) != vk.end()) {
    throw InputError("psi expects a sorted duplicate-free vertex set");
  }
  if (vk.size() > cap) throw PsiCapError(vk.size(), cap);
  FactorialTable factorials;
  return detail::count_linear_extensions(vk, k, factorials);
}

Count phi(const VertexSet& s, const PrefixChain& chain,
          const BackgroundKnowledge& k, std::size_t psi_cap) {
  if (!std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("phi expects a sorted duplicate-free vertex set");
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const VertexSet& r = chain.sets[i];
    const VertexSet& above = i + 1 < chain.size() ? chain.sets[i + 1] : s;
    if (!std::is_sorted(r.begin(), r.end()) || r.size() >= above.size() ||
        !is_subset(r, above)) {
      throw InputError("prefix chain is not strictly nested below the permuted set");
    }
  }
  for (const auto& [u, v] : k.edges()) {
    if (!std::binary_search(s.begin(), s.end(), u) ||
        !std::binary_search(s.begin(), s.end(), v)) {
      throw InputError("knowledge claim leaves the permuted set");
    }
  }
  detail::PhiEvaluator evaluator(psi_cap);
  return evaluator.phi(s, chain, k);
}

}  // namespace meccount
