#pragma once

// Benchmark sweeps over generated instances. Timings cover count_session
// only; generation happens before the clock starts.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "meccount/common.hpp"

namespace meccount {

struct BenchConfig {
  std::vector<std::size_t> n_list;
  std::vector<std::size_t> k_list;
  std::size_t reps = 3;           // seeded instances per (n, k)
  std::size_t timing_runs = 1;    // timed counts per instance; the median is kept
  std::uint64_t seed = 1;
  std::size_t psi_cap = 20;
  double p_low = 0.1;
  double p_high = 0.3;
};

/// One timed instance.
struct BenchRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t knowledge_size = 0;
  std::uint64_t seed = 0;
  double time_ms = 0.0;
  std::size_t count_decimal_digits = 0;
};

/// Aggregate over the instances of one (n, k).
struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  double knowledge_size = 0.0;  // mean
  std::uint64_t seed = 0;       // sweep seed
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double count_decimal_digits = 0.0;  // mean
  std::size_t instances = 0;
};

/// Graph instance seed for repetition `rep` at size `n`. Shared across k so
/// every k sees the same graphs.
std::uint64_t instance_seed(std::uint64_t sweep_seed, std::size_t n, std::size_t rep);

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchRecord> records;
  std::vector<std::string> failures;  // one line per failed instance
};

/// Runs the (n, k) grid. Failing instances are recorded and skipped.
BenchReport run_sweep(const BenchConfig& cfg);

/// One K1 / K2 comparison.
struct Table1Row {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t k1_size = 0;
  std::size_t k2_size = 0;
  double t1_ms = 0.0;
  double t2_ms = 0.0;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  std::vector<std::string> failures;
};

/// For each (n, k) and repetition: K1 from the generator, K2 grown from K1,
/// both timed with interleaved runs and reported as medians.
Table1Report run_table1(const BenchConfig& cfg);

std::string sweep_csv(const BenchReport& report);
std::string records_csv(const BenchReport& report);
std::string table1_csv(const Table1Report& report);

}  // namespace meccount
