#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "engine_detail.hpp"

namespace meccount {

PrefixChain forbidden_prefixes(const RootedCliqueTree& tree, std::size_t node) {
  if (node >= tree.size()) throw InputError("clique-tree node out of range");
  const auto path = tree.path_from_root(node);
  const VertexSet& target = tree.nodes[node].members;
  PrefixChain chain;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto sep = set_intersection(tree.nodes[path[i]].members,
                                tree.nodes[path[i + 1]].members);
    if (is_subset(sep, target)) chain.sets.push_back(std::move(sep));
  }
  std::sort(chain.sets.begin(), chain.sets.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  chain.sets.erase(std::unique(chain.sets.begin(), chain.sets.end()),
                   chain.sets.end());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const VertexSet& above = i + 1 < chain.size() ? chain.sets[i + 1] : target;
    if (chain.sets[i].size() >= above.size() || !is_subset(chain.sets[i], above)) {
      throw InvariantError("forbidden prefixes are not strictly nested");
    }
  }
  return chain;
}

PrefixChain forbidden_prefixes(const RootedCliqueTree& tree, const Clique& c) {
  const std::size_t node = tree.find(c);
  if (node == RootedCliqueTree::npos) throw InputError("clique is not a tree node");
  return forbidden_prefixes(tree, node);
}

const Count* MemoTable::find(const VertexSet& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void MemoTable::store(const VertexSet& key, const Count& value) {
  auto [it, inserted] = table_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw InvariantError("memo entry rewritten with a different count");
  }
}

namespace {

// Recursion over induced subgraphs of one host graph with fixed knowledge.
// Vertex sets are translated to host ids for memo and Phi cache keys.
class Engine {
 public:
  Engine(MemoTable& memo, const CountOptions& options, SessionStats& stats)
      : memo_(memo), options_(options), stats_(stats), phi_(options.psi_cap, &stats) {
    if (options.psi_cap > kMaxPsiCap) {
      throw InputError("psi cap above " + std::to_string(kMaxPsiCap) +
                       " is not supported");
    }
  }

  Count solve(const UndirectedGraph& g, const VertexSet& host,
              const BackgroundKnowledge& k, bool outermost,
              std::vector<Count>* contributions = nullptr) {
    ++stats_.count_calls;
    if (options_.memoize) {
      if (const Count* hit = memo_.find(host)) {
        ++stats_.memo_hits;
        return *hit;
      }
      ++stats_.distinct_subproblems;
    } else if (seen_.insert(host).second) {
      ++stats_.distinct_subproblems;
    }

    auto tree = clique_tree(g);
    if (outermost && options_.root_override) {
      tree = tree.rerooted(*options_.root_override);
    }
    Count sum = 0;
    if (tree.size() == 1) {
      sum = phi_.phi_unconstrained(tree.nodes[0].members, k, &host);
      if (contributions != nullptr) contributions->assign(1, sum);
    } else {
      if (contributions != nullptr) contributions->assign(tree.size(), Count(0));
      std::queue<std::size_t> queue;
      queue.push(tree.root);
      while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop();
        for (std::size_t child : tree.children[node]) queue.push(child);
        const Clique& c = tree.nodes[node];
        ++stats_.lbfs_calls;
        const auto lbfs = detail::lbfs_background_unchecked(g, c, k);
        if (!lbfs.flag) {
          ++stats_.flag_rejections;
          continue;
        }
        Count product = 1;
        for (const auto& h : lbfs.components) {
          product *= solve_part(g, host, k, h);
        }
        const auto chain = forbidden_prefixes(tree, node);
        const auto inside = restrict_knowledge(k, c.members);
        Count term = product * phi_.phi(c.members, chain, inside, &host);
        if (contributions != nullptr) (*contributions)[node] = term;
        sum += term;
      }
    }
    if (options_.memoize) memo_.store(host, sum);
    return sum;
  }

 private:
  Count solve_part(const UndirectedGraph& g, const VertexSet& host,
                   const BackgroundKnowledge& k, const VertexSet& part) {
    if (part.size() == 1) {
      VertexSet key{host[part[0]]};
      ++stats_.count_calls;
      if (options_.memoize) {
        if (memo_.find(key) != nullptr) {
          ++stats_.memo_hits;
        } else {
          ++stats_.distinct_subproblems;
          memo_.store(key, Count(1));
        }
      } else if (seen_.insert(key).second) {
        ++stats_.distinct_subproblems;
      }
      return 1;
    }
    auto sub = induced_subgraph(g, part);
    VertexSet sub_host;
    sub_host.reserve(part.size());
    for (VertexId v : sub.to_parent) sub_host.push_back(host[v]);
    const auto sub_k = localize_knowledge(k, sub.to_parent);
    return solve(sub.graph, sub_host, sub_k, false);
  }

  MemoTable& memo_;
  const CountOptions& options_;
  SessionStats& stats_;
  detail::PhiEvaluator phi_;
  std::set<VertexSet> seen_;
};

void require_uccg(const UndirectedGraph& g, const BackgroundKnowledge& k) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");
  if (!is_chordal(g)) throw InputError("graph is not chordal");
  for (const auto& [u, v] : k.edges()) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v ||
        !g.adjacent(u, v)) {
      throw InputError("knowledge claim " + std::to_string(u) + "->" +
                       std::to_string(v) + " is not an edge of the graph");
    }
  }
}

VertexSet identity(std::size_t n) {
  VertexSet out(n);
  for (VertexId v = 0; v < n; ++v) out[v] = v;
  return out;
}

}  // namespace

Count count_uccg(const UndirectedGraph& g, const BackgroundKnowledge& k,
                 MemoTable& memo, const CountOptions& options,
                 SessionStats* stats) {
  require_uccg(g, k);
  SessionStats local;
  SessionStats& s = stats != nullptr ? *stats : local;
  Engine engine(memo, options, s);
  const std::size_t before = s.distinct_subproblems;
  Count result =
      g.vertex_count() == 1 ? Count(1) : engine.solve(g, identity(g.vertex_count()), k, true);
  if (g.vertex_count() > 1) {
    s.components.push_back({g.vertex_count(), maximal_cliques(g).size(),
                            static_cast<std::size_t>(s.distinct_subproblems - before)});
  }
  return result;
}

Count count_uccg(const UndirectedGraph& g, const BackgroundKnowledge& k,
                 const CountOptions& options) {
  MemoTable memo;
  return count_uccg(g, k, memo, options);
}

std::vector<Count> clique_contributions(const UndirectedGraph& g,
                                        const BackgroundKnowledge& k,
                                        const CountOptions& options) {
  require_uccg(g, k);
  MemoTable memo;
  SessionStats stats;
  if (g.vertex_count() == 1) return {Count(1)};
  Engine engine(memo, options, stats);
  std::vector<Count> contributions;
  engine.solve(g, identity(g.vertex_count()), k, true, &contributions);
  return contributions;
}

SessionResult count_session(const MecInstance& instance, const CountOptions& options) {
  const auto violations = validate(instance);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid instance:";
    for (const auto& v : violations) os << ' ' << v.message << ';';
    throw ValidationError(os.str());
  }
  SessionResult result;
  result.count = 0;
  if (knowledge_reverses_directed_edge(instance)) return result;

  CountOptions session_options = options;
  session_options.root_override.reset();
  MemoTable memo;
  Engine engine(memo, session_options, result.stats);
  result.count = 1;
  for (const auto& comp : chordal_components(instance.graph)) {
    if (comp.to_parent.size() < 2) continue;
    const std::size_t before = result.stats.distinct_subproblems;
    const auto k = localize_knowledge(instance.knowledge, comp.to_parent);
    result.count *= engine.solve(comp.graph, comp.to_parent, k, true);
    result.stats.components.push_back(
        {comp.to_parent.size(), maximal_cliques(comp.graph).size(),
         static_cast<std::size_t>(result.stats.distinct_subproblems - before)});
  }
  return result;
}

}  // namespace meccount
