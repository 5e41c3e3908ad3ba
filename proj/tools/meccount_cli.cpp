// meccount: count, generate, check and benchmark orientation counts of
// Markov equivalence classes with background knowledge.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meccount/meccount.h"

namespace {

constexpr const char* kPsiCapEnv = "MECCOUNT_PSI_CAP";

enum Exit : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad arguments, I/O failure, internal error, oracle mismatch
  kExitInvalid = 2,
  kExitCap = 3,
  kExitGeneration = 4,
};

int exit_code(mc_status s) {
  switch (s) {
    case MC_OK: return kExitOk;
    case MC_ERR_PARSE:
    case MC_ERR_VALIDATION: return kExitInvalid;
    case MC_ERR_PSI_CAP:
    case MC_ERR_ORACLE_CAP: return kExitCap;
    case MC_ERR_GENERATION: return kExitGeneration;
    default: return kExitUsage;
  }
}

int report(mc_status s) {
  std::cerr << "meccount: " << mc_last_error() << '\n';
  return exit_code(s);
}

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { mc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Instance {
  mc_instance* p = nullptr;
  ~Instance() { mc_instance_free(p); }
};

struct Result {
  mc_result* p = nullptr;
  ~Result() { mc_result_free(p); }
};

// The flag wins over the environment; the default applies when neither is set.
std::optional<std::size_t> resolve_psi_cap(const std::optional<std::size_t>& flag) {
  if (flag) return flag;
  const char* env = std::getenv(kPsiCapEnv);
  if (env == nullptr || *env == '\0') {
    mc_count_options d;
    mc_count_options_init(&d);
    return d.psi_cap;
  }
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) {
    std::cerr << "meccount: " << kPsiCapEnv << " must be a positive integer, got '" << env
              << "'\n";
    return std::nullopt;
  }
  return static_cast<std::size_t>(v);
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out.flush()) {
    std::cerr << "meccount: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

int load(const std::string& path, Instance& inst) {
  const mc_status s = mc_instance_load(path.c_str(), &inst.p);
  return s == MC_OK ? kExitOk : report(s);
}

int run_count(const std::string& path, bool stats, std::size_t psi_cap) {
  Instance inst;
  if (int rc = load(path, inst)) return rc;
  mc_count_options opts;
  mc_count_options_init(&opts);
  opts.psi_cap = psi_cap;
  Result res;
  if (mc_status s = mc_count(inst.p, &opts, &res.p); s != MC_OK) return report(s);
  LibString count;
  mc_result_count(res.p, &count.p);
  std::cout << count.str() << '\n';
  if (stats) {
    LibString text;
    mc_result_stats_text(res.p, &text.p);
    std::size_t mck = 0;
    mc_instance_max_clique_knowledge(inst.p, &mck);
    std::cout << "vertices: " << mc_instance_vertex_count(inst.p) << '\n'
              << "knowledge_edges: " << mc_instance_knowledge_size(inst.p) << '\n'
              << "max_clique_knowledge: " << mck << '\n'
              << text.str();
  }
  return kExitOk;
}

int run_validate(const std::string& path) {
  Instance inst;
  if (int rc = load(path, inst)) return rc;
  LibString text;
  const mc_status s = mc_instance_validate(inst.p, &text.p);
  if (s == MC_OK) {
    std::cout << "valid\n";
    return kExitOk;
  }
  if (s != MC_ERR_VALIDATION) return report(s);
  std::cerr << text.str();
  return kExitInvalid;
}

int run_oracle(const std::string& path, bool compare, std::size_t oracle_cap,
               std::size_t psi_cap) {
  Instance inst;
  if (int rc = load(path, inst)) return rc;
  LibString brute;
  if (mc_status s = mc_oracle_count(inst.p, oracle_cap, &brute.p); s != MC_OK) return report(s);
  std::cout << brute.str() << '\n';
  if (!compare) return kExitOk;

  mc_count_options opts;
  mc_count_options_init(&opts);
  opts.psi_cap = psi_cap;
  Result res;
  if (mc_status s = mc_count(inst.p, &opts, &res.p); s != MC_OK) return report(s);
  LibString engine;
  mc_result_count(res.p, &engine.p);
  if (engine.str() != brute.str()) {
    std::cerr << "meccount: mismatch: oracle " << brute.str() << ", engine " << engine.str()
              << '\n';
    return kExitUsage;
  }
  std::cerr << "compare: engine agrees\n";
  return kExitOk;
}

int run_gen(mc_gen_options opts, const std::string& out) {
  Instance inst;
  if (mc_status s = mc_generate(&opts, &inst.p); s != MC_OK) return report(s);
  if (out.empty() || out == "-") {
    LibString text;
    if (mc_status s = mc_instance_serialize(inst.p, &text.p); s != MC_OK) return report(s);
    std::cout << text.str();
    return kExitOk;
  }
  if (mc_status s = mc_instance_save(inst.p, out.c_str()); s != MC_OK) return report(s);
  return kExitOk;
}

int run_bench(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ks,
              std::size_t reps, std::size_t runs, std::uint64_t seed, bool table1,
              std::size_t psi_cap, const std::string& out, const std::string& records_path) {
  mc_bench_options opts;
  mc_bench_options_init(&opts);
  opts.n_list = ns.data();
  opts.n_count = ns.size();
  opts.k_list = ks.data();
  opts.k_count = ks.size();
  opts.reps = reps;
  opts.seed = seed;
  opts.psi_cap = psi_cap;
  opts.table1 = table1 ? 1 : 0;
  opts.timing_runs = runs != 0 ? runs : (table1 ? 5 : 1);
  LibString csv;
  LibString records;
  LibString failures;
  std::size_t failed = 0;
  if (mc_status s = mc_bench_run(&opts, &csv.p, &records.p, &failures.p, &failed);
      s != MC_OK) {
    return report(s);
  }
  if (!write_text(out, csv.str())) return kExitUsage;
  if (!records_path.empty() && !write_text(records_path, records.str())) return kExitUsage;
  if (failed > 0) {
    std::cerr << failures.str() << "meccount: " << failed << " instance(s) failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of DAGs in a Markov equivalence class under background "
               "knowledge"};
  app.set_version_flag("--version", std::string(mc_version()));
  app.require_subcommand(1);

  std::optional<std::size_t> psi_flag;
  std::string path;
  bool stats = false;
  bool compare = false;
  std::size_t oracle_cap = 9;

  auto* count = app.add_subcommand("count", "Count the orientations of an instance file");
  count->add_option("instance", path, "Instance file")->required();
  count->add_flag("--stats", stats, "Print session statistics after the count");
  count->add_option("--psi-cap", psi_flag, "Largest knowledge vertex set per clique");

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", path, "Instance file")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force count of a small instance");
  oracle->add_option("instance", path, "Instance file")->required();
  oracle->add_flag("--compare", compare, "Also run the engine and fail on disagreement");
  oracle->add_option("--oracle-cap", oracle_cap, "Largest vertex count to enumerate")
      ->capture_default_str();
  oracle->add_option("--psi-cap", psi_flag, "Psi cap for the --compare engine run");

  mc_gen_options gen_opts;
  mc_gen_options_init(&gen_opts);
  gen_opts.k = 0;
  std::uint64_t seed = 1;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Generate a random chordal instance");
  gen->add_option("-n,--vertices", gen_opts.n, "Vertex count")->required();
  gen->add_option("-k,--knowledge", gen_opts.k, "Max-clique-knowledge target, 0 for none")
      ->capture_default_str();
  gen->add_option("--p-low", gen_opts.p_low, "Lower end of the edge probability range")
      ->capture_default_str();
  gen->add_option("--p-high", gen_opts.p_high, "Upper end of the edge probability range")
      ->capture_default_str();
  gen->add_option("--max-attempts", gen_opts.max_attempts, "Samples drawn before giving up")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--out", out, "Output file, stdout when omitted");

  std::vector<std::size_t> bench_n;
  std::vector<std::size_t> bench_k;
  std::size_t reps = 3;
  std::size_t runs = 0;
  bool table1 = false;
  std::string records_path;
  auto* bench = app.add_subcommand("bench", "Time the engine on generated instances");
  bench->add_option("-n,--vertices", bench_n, "Vertex counts, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("-k,--knowledge", bench_k, "Knowledge targets, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", reps, "Instances per (n, k)")->capture_default_str();
  bench->add_option("--runs", runs, "Timed runs per instance (default 1, or 5 with --table1)");
  bench->add_option("--seed", seed, "Sweep seed")->capture_default_str();
  bench->add_flag("--table1", table1, "Compare generated knowledge with grown knowledge");
  bench->add_option("--psi-cap", psi_flag, "Largest knowledge vertex set per clique");
  bench->add_option("--out", out, "CSV output, stdout when omitted");
  bench->add_option("--records", records_path, "Per-instance CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto psi_cap = resolve_psi_cap(psi_flag);
  if (!psi_cap) return kExitUsage;

  if (count->parsed()) return run_count(path, stats, *psi_cap);
  if (validate->parsed()) return run_validate(path);
  if (oracle->parsed()) return run_oracle(path, compare, oracle_cap, *psi_cap);
  if (gen->parsed()) {
    gen_opts.seed = seed;
    return run_gen(gen_opts, out);
  }
  return run_bench(bench_n, bench_k, reps, runs, seed, table1, *psi_cap, out, records_path);
}
