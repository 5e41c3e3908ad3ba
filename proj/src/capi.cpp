#include "meccount/meccount.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "meccount/bench.hpp"
#include "meccount/counting.hpp"
#include "meccount/generators.hpp"
#include "meccount/instance_io.hpp"
#include "meccount/oracle.hpp"

struct mc_instance {
  meccount::InstanceDocument doc;
};

struct mc_result {
  meccount::SessionResult session;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

mc_status fail(mc_status status, const std::string& message, std::size_t line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename F>
mc_status guarded(F&& body) {
  last_error.clear();
  last_error_line = 0;
  try {
    return body();
  } catch (const meccount::ParseError& e) {
    return fail(MC_ERR_PARSE, e.what(), e.line());
  } catch (const meccount::ValidationError& e) {
    return fail(MC_ERR_VALIDATION, e.what());
  } catch (const meccount::PsiCapError& e) {
    return fail(MC_ERR_PSI_CAP, e.what());
  } catch (const meccount::OracleCapError& e) {
    return fail(MC_ERR_ORACLE_CAP, e.what());
  } catch (const meccount::GenerationError& e) {
    return fail(MC_ERR_GENERATION, e.what());
  } catch (const meccount::InputError& e) {
    return fail(MC_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string validation_report(const meccount::InstanceDocument& doc) {
  std::string report;
  for (const auto& d : meccount::diagnose(doc)) {
    report += meccount::format_diagnostic(d);
    report += '\n';
  }
  return report;
}

// Counting requires a valid instance; report diagnostics with lines.
void require_valid(const meccount::InstanceDocument& doc) {
  const std::string report = validation_report(doc);
  if (!report.empty()) throw meccount::ValidationError(report.substr(0, report.size() - 1));
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

extern "C" {

const char* mc_version(void) { return meccount::engine_version(); }

const char* mc_status_name(mc_status status) {
  switch (status) {
    case MC_OK: return "ok";
    case MC_ERR_ARGUMENT: return "argument";
    case MC_ERR_PARSE: return "parse";
    case MC_ERR_VALIDATION: return "validation";
    case MC_ERR_PSI_CAP: return "psi-cap";
    case MC_ERR_ORACLE_CAP: return "oracle-cap";
    case MC_ERR_GENERATION: return "generation";
    case MC_ERR_IO: return "io";
    case MC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mc_last_error(void) { return last_error.c_str(); }

size_t mc_last_error_line(void) { return last_error_line; }

void mc_string_free(char* s) { std::free(s); }

mc_status mc_instance_parse(const char* text, mc_instance** out) {
  if (text == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new mc_instance{meccount::parse_instance(text)};
    return MC_OK;
  });
}

mc_status mc_instance_load(const char* path, mc_instance** out) {
  if (path == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::FILE* probe = std::fopen(path, "rb");
    if (probe == nullptr) return fail(MC_ERR_IO, std::string("cannot open '") + path + "'");
    std::fclose(probe);
    *out = new mc_instance{meccount::load_instance(path)};
    return MC_OK;
  });
}

mc_status mc_instance_save(const mc_instance* inst, const char* path) {
  if (inst == nullptr || path == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      meccount::save_instance(inst->doc, path);
    } catch (const meccount::InputError& e) {
      return fail(MC_ERR_IO, e.what());
    }
    return MC_OK;
  });
}

mc_status mc_instance_serialize(const mc_instance* inst, char** out) {
  if (inst == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(meccount::serialize_instance(inst->doc));
    return MC_OK;
  });
}

void mc_instance_free(mc_instance* inst) { delete inst; }

size_t mc_instance_vertex_count(const mc_instance* inst) {
  return inst == nullptr ? 0 : inst->doc.instance.graph.vertex_count();
}

size_t mc_instance_knowledge_size(const mc_instance* inst) {
  return inst == nullptr ? 0 : inst->doc.instance.knowledge.size();
}

mc_status mc_instance_validate(const mc_instance* inst, char** report) {
  if (inst == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    const std::string text = validation_report(inst->doc);
    if (report != nullptr) *report = copy_string(text);
    if (text.empty()) return MC_OK;
    return fail(MC_ERR_VALIDATION, text.substr(0, text.size() - 1));
  });
}

mc_status mc_instance_max_clique_knowledge(const mc_instance* inst, size_t* out) {
  if (inst == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    require_valid(inst->doc);
    *out = meccount::max_clique_knowledge(inst->doc.instance);
    return MC_OK;
  });
}

void mc_count_options_init(mc_count_options* opts) {
  if (opts == nullptr) return;
  opts->psi_cap = meccount::kDefaultPsiCap;
  opts->memoize = 1;
}

mc_status mc_count(const mc_instance* inst, const mc_count_options* opts, mc_result** out) {
  if (inst == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    meccount::CountOptions options;
    if (opts != nullptr) {
      if (opts->psi_cap == 0 || opts->psi_cap > meccount::kMaxPsiCap) {
        return fail(MC_ERR_ARGUMENT, "psi cap must be between 1 and " +
                                         std::to_string(meccount::kMaxPsiCap));
      }
      options.psi_cap = opts->psi_cap;
      options.memoize = opts->memoize != 0;
    }
    require_valid(inst->doc);
    *out = new mc_result{meccount::count_session(inst->doc.instance, options)};
    return MC_OK;
  });
}

mc_status mc_result_count(const mc_result* res, char** decimal) {
  if (res == nullptr || decimal == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *decimal = nullptr;
  return guarded([&] {
    *decimal = copy_string(res->session.count.str());
    return MC_OK;
  });
}

mc_status mc_result_stats(const mc_result* res, mc_stats* out) {
  if (res == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  const auto& s = res->session.stats;
  out->count_calls = s.count_calls;
  out->distinct_subproblems = s.distinct_subproblems;
  out->memo_hits = s.memo_hits;
  out->lbfs_calls = s.lbfs_calls;
  out->flag_rejections = s.flag_rejections;
  out->phi_calls = s.phi_calls;
  out->psi_calls = s.psi_calls;
  out->max_knowledge_vertices = s.max_knowledge_vertices;
  out->components = s.components.size();
  out->max_component_cliques = 0;
  out->subproblem_bound_holds = 1;
  for (const auto& c : s.components) {
    out->max_component_cliques = std::max<uint64_t>(out->max_component_cliques, c.maximal_cliques);
    if (c.distinct_subproblems + 1 > 2 * c.maximal_cliques) out->subproblem_bound_holds = 0;
  }
  last_error.clear();
  return MC_OK;
}

mc_status mc_result_stats_text(const mc_result* res, char** text) {
  if (res == nullptr || text == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *text = nullptr;
  return guarded([&] {
    const auto& s = res->session.stats;
    std::ostringstream os;
    os << "count_calls: " << s.count_calls << '\n'
       << "distinct_subproblems: " << s.distinct_subproblems << '\n'
       << "memo_hits: " << s.memo_hits << '\n'
       << "lbfs_calls: " << s.lbfs_calls << '\n'
       << "flag_rejections: " << s.flag_rejections << '\n'
       << "phi_calls: " << s.phi_calls << '\n'
       << "psi_calls: " << s.psi_calls << '\n'
       << "max_knowledge_vertices: " << s.max_knowledge_vertices << '\n'
       << "components: " << s.components.size() << '\n';
    for (std::size_t i = 0; i < s.components.size(); ++i) {
      const auto& c = s.components[i];
      os << "component " << i << ": vertices=" << c.vertices
         << " maximal_cliques=" << c.maximal_cliques
         << " distinct_subproblems=" << c.distinct_subproblems
         << " bound=" << (2 * c.maximal_cliques - 1) << '\n';
    }
    *text = copy_string(os.str());
    return MC_OK;
  });
}

void mc_result_free(mc_result* res) { delete res; }

mc_status mc_oracle_count(const mc_instance* inst, size_t cap, char** decimal) {
  if (inst == nullptr || decimal == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *decimal = nullptr;
  return guarded([&] {
    if (cap > meccount::oracle::kMaxOracleCap) {
      return fail(MC_ERR_ARGUMENT, "oracle cap must be at most " +
                                       std::to_string(meccount::oracle::kMaxOracleCap));
    }
    require_valid(inst->doc);
    const std::size_t limit = cap == 0 ? meccount::oracle::kDefaultOracleCap : cap;
    *decimal = copy_string(meccount::oracle::oracle_count(inst->doc.instance, limit).str());
    return MC_OK;
  });
}

void mc_gen_options_init(mc_gen_options* opts) {
  if (opts == nullptr) return;
  const meccount::GenConfig d;
  opts->n = d.n;
  opts->k = 0;
  opts->seed = d.seed;
  opts->p_low = d.p_low;
  opts->p_high = d.p_high;
  opts->max_attempts = d.max_attempts;
}

mc_status mc_generate(const mc_gen_options* opts, mc_instance** out) {
  if (opts == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    meccount::GenConfig cfg;
    cfg.n = opts->n;
    cfg.k_target = opts->k;
    cfg.seed = opts->seed;
    cfg.p_low = opts->p_low;
    cfg.p_high = opts->p_high;
    cfg.max_attempts = opts->max_attempts;
    if (opts->k == 1) return fail(MC_ERR_ARGUMENT, "knowledge target must be 0 or at least 2");
    auto gen = meccount::random_chordal(cfg);
    meccount::BackgroundKnowledge k;
    if (opts->k >= 2) k = meccount::gen_background(gen.graph, opts->k, opts->seed);
    meccount::MecInstance instance{
        meccount::PartiallyDirectedGraph(cfg.n, gen.graph.edges(), {}), std::move(k)};
    std::map<std::string, std::string> meta{
        {"attempts", std::to_string(gen.attempts)},
        {"k", std::to_string(opts->k)},
        {"n", std::to_string(cfg.n)},
        {"p", format_double(gen.p)},
        {"p_range", format_double(cfg.p_low) + "," + format_double(cfg.p_high)},
        {"rng", meccount::SeededRng::kName},
        {"seed", std::to_string(cfg.seed)},
    };
    *out = new mc_instance{meccount::make_document(std::move(instance), std::move(meta))};
    return MC_OK;
  });
}

mc_status mc_grow_knowledge(const mc_instance* inst, uint64_t seed, mc_instance** out,
                            int* grown) {
  if (inst == nullptr || out == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& g = inst->doc.instance.graph;
    if (!g.directed_edges().empty()) {
      return fail(MC_ERR_ARGUMENT, "knowledge growth needs a fully undirected instance");
    }
    require_valid(inst->doc);
    const auto skeleton = g.skeleton();
    if (!meccount::is_connected(skeleton)) {
      return fail(MC_ERR_ARGUMENT, "knowledge growth needs a connected graph");
    }
    auto result = meccount::grow_background(skeleton, inst->doc.instance.knowledge, seed);
    auto doc = inst->doc;
    doc.instance.knowledge = std::move(result.knowledge);
    doc.knowledge_lines.clear();
    doc.metadata["grow_seed"] = std::to_string(seed);
    if (grown != nullptr) *grown = result.grown ? 1 : 0;
    *out = new mc_instance{std::move(doc)};
    return MC_OK;
  });
}

void mc_bench_options_init(mc_bench_options* opts) {
  if (opts == nullptr) return;
  const meccount::BenchConfig d;
  opts->n_list = nullptr;
  opts->n_count = 0;
  opts->k_list = nullptr;
  opts->k_count = 0;
  opts->reps = d.reps;
  opts->timing_runs = d.timing_runs;
  opts->seed = d.seed;
  opts->psi_cap = d.psi_cap;
  opts->table1 = 0;
}

mc_status mc_bench_run(const mc_bench_options* opts, char** csv, char** records,
                       char** failures, size_t* failure_count) {
  if (opts == nullptr) return fail(MC_ERR_ARGUMENT, "null argument");
  if ((opts->n_count > 0 && opts->n_list == nullptr) ||
      (opts->k_count > 0 && opts->k_list == nullptr)) {
    return fail(MC_ERR_ARGUMENT, "null list with nonzero length");
  }
  for (char** p : {csv, records, failures}) {
    if (p != nullptr) *p = nullptr;
  }
  if (failure_count != nullptr) *failure_count = 0;
  return guarded([&] {
    meccount::BenchConfig cfg;
    cfg.n_list.assign(opts->n_list, opts->n_list + opts->n_count);
    cfg.k_list.assign(opts->k_list, opts->k_list + opts->k_count);
    cfg.reps = opts->reps;
    cfg.timing_runs = opts->timing_runs;
    cfg.seed = opts->seed;
    cfg.psi_cap = opts->psi_cap;
    if (cfg.psi_cap == 0 || cfg.psi_cap > meccount::kMaxPsiCap) {
      return fail(MC_ERR_ARGUMENT, "psi cap must be between 1 and " +
                                       std::to_string(meccount::kMaxPsiCap));
    }
    std::string table;
    std::string rows;
    std::vector<std::string> failed;
    if (opts->table1 != 0) {
      auto report = meccount::run_table1(cfg);
      table = meccount::table1_csv(report);
      failed = std::move(report.failures);
    } else {
      auto report = meccount::run_sweep(cfg);
      table = meccount::sweep_csv(report);
      rows = meccount::records_csv(report);
      failed = std::move(report.failures);
    }
    std::string failure_text;
    for (const auto& f : failed) failure_text += f + '\n';
    if (csv != nullptr) *csv = copy_string(table);
    if (records != nullptr && opts->table1 == 0) *records = copy_string(rows);
    if (failures != nullptr) *failures = copy_string(failure_text);
    if (failure_count != nullptr) *failure_count = failed.size();
    return MC_OK;
  });
}

}  // extern "C"
