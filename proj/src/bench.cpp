#include "meccount/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "meccount/counting.hpp"
#include "meccount/generators.hpp"

namespace meccount {

namespace {

struct Timed {
  double ms;
  Count count;
};

Timed time_count(const MecInstance& instance, const CountOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SessionResult result = count_session(instance, options);
  const auto stop = std::chrono::steady_clock::now();
  return {std::chrono::duration<double, std::milli>(stop - start).count(),
          std::move(result.count)};
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void check_config(const BenchConfig& cfg) {
  if (cfg.n_list.empty() || cfg.k_list.empty()) {
    throw InputError("benchmark needs nonempty n and k lists");
  }
  if (cfg.timing_runs == 0) throw InputError("timing runs must be positive");
}

GenConfig graph_config(const BenchConfig& cfg, std::size_t n, std::uint64_t seed) {
  GenConfig g;
  g.n = n;
  g.p_low = cfg.p_low;
  g.p_high = cfg.p_high;
  g.seed = seed;
  return g;
}

MecInstance as_instance(const UndirectedGraph& g, BackgroundKnowledge k) {
  return {PartiallyDirectedGraph(g.vertex_count(), g.edges(), {}), std::move(k)};
}

std::string describe_failure(std::size_t n, std::size_t k, std::uint64_t seed,
                             const std::exception& e) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " seed=" + std::to_string(seed) + ": " + e.what();
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t sweep_seed, std::size_t n, std::size_t rep) {
  return sweep_seed * 1000003ULL + static_cast<std::uint64_t>(n) * 7919ULL +
         static_cast<std::uint64_t>(rep);
}

BenchReport run_sweep(const BenchConfig& cfg) {
  check_config(cfg);
  BenchReport report;
  CountOptions options;
  options.psi_cap = cfg.psi_cap;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_cell;

  for (std::size_t n : cfg.n_list) {
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
      const std::uint64_t seed = instance_seed(cfg.seed, n, rep);
      GeneratedGraph gen;
      try {
        gen = random_chordal(graph_config(cfg, n, seed));
      } catch (const std::exception& e) {
        report.failures.push_back(describe_failure(n, 0, seed, e));
        continue;
      }
      for (std::size_t k : cfg.k_list) {
        try {
          const auto instance = as_instance(gen.graph, gen_background(gen.graph, k, seed));
          std::vector<double> runs;
          Count count;
          for (std::size_t r = 0; r < cfg.timing_runs; ++r) {
            auto t = time_count(instance, options);
            runs.push_back(t.ms);
            count = std::move(t.count);
          }
          by_cell[{n, k}].push_back(report.records.size());
          report.records.push_back({n, k, instance.knowledge.size(), seed, median(runs),
                                    count.str().size()});
        } catch (const std::exception& e) {
          report.failures.push_back(describe_failure(n, k, seed, e));
        }
      }
    }
  }

  for (std::size_t n : cfg.n_list) {
    for (std::size_t k : cfg.k_list) {
      auto it = by_cell.find({n, k});
      if (it == by_cell.end()) continue;
      BenchRow row;
      row.n = n;
      row.k = k;
      row.seed = cfg.seed;
      std::vector<double> times;
      for (std::size_t i : it->second) {
        const auto& rec = report.records[i];
        times.push_back(rec.time_ms);
        row.knowledge_size += static_cast<double>(rec.knowledge_size);
        row.count_decimal_digits += static_cast<double>(rec.count_decimal_digits);
      }
      row.instances = times.size();
      const double m = static_cast<double>(row.instances);
      row.knowledge_size /= m;
      row.count_decimal_digits /= m;
      row.mean_ms = std::accumulate(times.begin(), times.end(), 0.0) / m;
      row.median_ms = median(times);
      report.rows.push_back(row);
    }
  }
  return report;
}

Table1Report run_table1(const BenchConfig& cfg) {
  check_config(cfg);
  Table1Report report;
  CountOptions options;
  options.psi_cap = cfg.psi_cap;
  for (std::size_t n : cfg.n_list) {
    for (std::size_t k : cfg.k_list) {
      for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        const std::uint64_t seed = instance_seed(cfg.seed, n, rep);
        try {
          const auto gen = random_chordal(graph_config(cfg, n, seed));
          auto k1 = gen_background(gen.graph, k, seed);
          auto grown = grow_background(gen.graph, k1, seed);
          if (!grown.grown) {
            throw GenerationError("no admissible edge to grow the knowledge");
          }
          const auto i1 = as_instance(gen.graph, std::move(k1));
          const auto i2 = as_instance(gen.graph, std::move(grown.knowledge));
          // Warm-up, then alternate so drift affects both sides alike.
          time_count(i1, options);
          time_count(i2, options);
          std::vector<double> t1;
          std::vector<double> t2;
          for (std::size_t r = 0; r < cfg.timing_runs; ++r) {
            t1.push_back(time_count(i1, options).ms);
            t2.push_back(time_count(i2, options).ms);
          }
          report.rows.push_back({n, k, seed, i1.knowledge.size(), i2.knowledge.size(),
                                 median(t1), median(t2)});
        } catch (const std::exception& e) {
          report.failures.push_back(describe_failure(n, k, seed, e));
        }
      }
    }
  }
  return report;
}

std::string sweep_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "n,k,knowledge_size,seed,time_ms,count_decimal_digits,engine_version,median_ms\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.k << ',' << fixed(r.knowledge_size, 1) << ',' << r.seed << ','
       << fixed(r.mean_ms, 3) << ',' << fixed(r.count_decimal_digits, 1) << ','
       << engine_version() << ',' << fixed(r.median_ms, 3) << '\n';
  }
  return os.str();
}

std::string records_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "n,k,knowledge_size,seed,time_ms,count_decimal_digits,engine_version\n";
  for (const auto& r : report.records) {
    os << r.n << ',' << r.k << ',' << r.knowledge_size << ',' << r.seed << ','
       << fixed(r.time_ms, 3) << ',' << r.count_decimal_digits << ',' << engine_version()
       << '\n';
  }
  return os.str();
}

std::string table1_csv(const Table1Report& report) {
  std::ostringstream os;
  os << "n,k,seed,k1_size,k2_size,t1_ms,t2_ms,ratio\n";
  for (const auto& r : report.rows) {
    const double ratio = r.t1_ms > 0.0 ? r.t2_ms / r.t1_ms : 0.0;
    os << r.n << ',' << r.k << ',' << r.seed << ',' << r.k1_size << ',' << r.k2_size << ','
       << fixed(r.t1_ms, 3) << ',' << fixed(r.t2_ms, 3) << ',' << fixed(ratio, 4) << '\n';
  }
  return os.str();
}

}  // namespace meccount
