#include "meccount/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace meccount {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum Stream : std::uint64_t {
  kGraphStream = 1,
  kKnowledgeStream = 2,
  kGrowStream = 3,
};

// Dense symmetric adjacency as bit rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool test(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set(std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Vertices already touched by claims that lie inside `members`.
std::vector<char> touched_inside(const VertexSet& members, std::size_t n,
                                 const std::vector<VertexPair>& claims) {
  std::vector<char> in(n, 0);
  for (VertexId v : members) in[v] = 1;
  std::vector<char> touched(n, 0);
  for (const auto& [u, v] : claims) {
    if (in[u] && in[v]) touched[u] = touched[v] = 1;
  }
  return touched;
}

std::vector<std::vector<std::size_t>> cliques_of_vertex(const std::vector<Clique>& cliques,
                                                        std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (VertexId v : cliques[i].members) out[v].push_back(i);
  }
  return out;
}

std::vector<std::size_t> shared(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

GeneratedGraph random_chordal(const GenConfig& cfg) {
  if (cfg.n == 0) throw InputError("generator needs at least one vertex");
  if (!(cfg.p_low > 0.0 && cfg.p_low <= cfg.p_high && cfg.p_high < 1.0)) {
    throw InputError("edge probability range must satisfy 0 < low <= high < 1");
  }
  if (cfg.max_attempts == 0) throw InputError("attempt budget must be positive");

  const std::size_t n = cfg.n;
  SeededRng rng(cfg.seed, kGraphStream);
  for (std::size_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    const double p = cfg.p_low == cfg.p_high ? cfg.p_low : rng.uniform(cfg.p_low, cfg.p_high);
    BitMatrix adj(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.uniform01() < p) adj.set(u, v);
      }
    }
    std::vector<VertexId> by_rank(n);  // by_rank[r] has rank r
    for (VertexId v = 0; v < n; ++v) by_rank[v] = v;
    rng.shuffle(by_rank);
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[by_rank[r]] = r;

    // Eliminate from the highest rank down: lower-ranked neighbours of each
    // eliminated vertex become a clique.
    std::vector<VertexId> lower;
    for (std::size_t r = n; r-- > 0;) {
      const VertexId x = by_rank[r];
      lower.clear();
      for (VertexId u = 0; u < n; ++u) {
        if (u != x && rank[u] < r && adj.test(x, u)) lower.push_back(u);
      }
      for (std::size_t i = 0; i < lower.size(); ++i) {
        for (std::size_t j = i + 1; j < lower.size(); ++j) adj.set(lower[i], lower[j]);
      }
    }

    std::vector<VertexPair> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (adj.test(u, v)) edges.emplace_back(u, v);
      }
    }
    UndirectedGraph g(n, edges);
    if (is_connected(g)) return {std::move(g), p, attempt};
  }
  throw GenerationError("no connected sample in " + std::to_string(cfg.max_attempts) +
                        " attempts");
}

BackgroundKnowledge gen_background(const UndirectedGraph& g, std::size_t k_target,
                                   std::uint64_t seed) {
  if (k_target < 2) throw InputError("knowledge target must be at least 2");
  if (g.vertex_count() == 0 || !is_connected(g) || !is_chordal(g)) {
    throw InputError("knowledge generation needs a connected chordal graph");
  }
  const std::size_t n = g.vertex_count();
  SeededRng rng(seed, kKnowledgeStream);
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  const auto tree = clique_tree(g);
  const auto incidence = cliques_of_vertex(tree.nodes, n);
  std::vector<VertexPair> claims;
  std::set<VertexPair> chosen;  // unordered, smaller id first

  auto target_of = [&](std::size_t node) {
    return std::min(k_target, tree.nodes[node].size());
  };
  auto touched_count = [&](std::size_t node) {
    const auto t = touched_inside(tree.nodes[node].members, n, claims);
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), 1));
  };
  // A new claim u-v must not push any clique holding both past its target.
  auto admissible = [&](VertexId u, VertexId v) {
    for (std::size_t other : shared(incidence[u], incidence[v])) {
      const auto t = touched_inside(tree.nodes[other].members, n, claims);
      const std::size_t after = static_cast<std::size_t>(std::count(t.begin(), t.end(), 1)) +
                                (t[u] ? 0 : 1) + (t[v] ? 0 : 1);
      if (after > target_of(other)) return false;
    }
    return true;
  };

  std::vector<std::size_t> stack{tree.root};
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    const auto& kids = tree.children[node];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);

    const std::size_t target = target_of(node);
    if (touched_count(node) >= target) continue;
    VertexSet members = tree.nodes[node].members;
    rng.shuffle(members);
    bool full = false;
    for (std::size_t i = 0; i < members.size() && !full; ++i) {
      for (std::size_t j = i + 1; j < members.size() && !full; ++j) {
        const VertexId u = members[i];
        const VertexId v = members[j];
        if (chosen.count({std::min(u, v), std::max(u, v)})) continue;
        const auto t = touched_inside(tree.nodes[node].members, n, claims);
        if (t[u] && t[v]) continue;
        if (!admissible(u, v)) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
        claims.push_back(pos[u] < pos[v] ? VertexPair{u, v} : VertexPair{v, u});
        full = touched_count(node) >= target;
      }
    }
  }
  return BackgroundKnowledge(std::move(claims));
}

GrowResult grow_background(const UndirectedGraph& g, const BackgroundKnowledge& base,
                           std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  for (const auto& [u, v] : base.edges()) {
    if (u >= n || v >= n || !g.adjacent(u, v)) {
      throw InputError("base knowledge claim is not an edge of the graph");
    }
  }
  SeededRng rng(seed, kGrowStream);

  // Linear extension of the base claims with seeded tie-breaking.
  std::vector<std::uint64_t> key(n);
  for (auto& x : key) x = rng.next();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<VertexId>> succ(n);
  for (const auto& [u, v] : base.edges()) {
    succ[u].push_back(v);
    ++indeg[v];
  }
  using Item = std::pair<std::uint64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push({key[v], v});
  }
  std::vector<std::size_t> pos(n);
  std::size_t placed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.top().second;
    ready.pop();
    pos[v] = placed++;
    for (VertexId w : succ[v]) {
      if (--indeg[w] == 0) ready.push({key[w], w});
    }
  }
  if (placed != n) throw InputError("base knowledge is cyclic");

  const auto cliques = maximal_cliques(g);
  const auto incidence = cliques_of_vertex(cliques, n);
  std::vector<std::vector<char>> touched;
  touched.reserve(cliques.size());
  for (const auto& c : cliques) touched.push_back(touched_inside(c.members, n, base.edges()));

  std::set<VertexPair> candidates;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    VertexSet inner;
    for (VertexId v : cliques[i].members) {
      if (touched[i][v]) inner.push_back(v);
    }
    for (std::size_t a = 0; a < inner.size(); ++a) {
      for (std::size_t b = a + 1; b < inner.size(); ++b) {
        const VertexId u = inner[a];
        const VertexId v = inner[b];
        if (base.contains(u, v) || base.contains(v, u)) continue;
        bool ok = true;
        for (std::size_t other : shared(incidence[u], incidence[v])) {
          ok = ok && touched[other][u] && touched[other][v];
        }
        if (ok) candidates.insert({u, v});
      }
    }
  }

  std::vector<VertexPair> pool(candidates.begin(), candidates.end());
  rng.shuffle(pool);
  pool.resize(std::min(pool.size(), base.size()));
  GrowResult result;
  result.grown = !pool.empty();
  std::vector<VertexPair> claims = base.edges();
  for (const auto& [u, v] : pool) {
    claims.push_back(pos[u] < pos[v] ? VertexPair{u, v} : VertexPair{v, u});
  }
  result.knowledge = BackgroundKnowledge(std::move(claims));
  return result;
}

}  // namespace meccount
