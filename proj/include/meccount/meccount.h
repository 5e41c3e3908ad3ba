/* C interface to the meccount shared library.
 *
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** out-parameters are owned by the caller and
 * released with mc_string_free. Every call that returns mc_status leaves a
 * message for mc_last_error() on failure; the message is per thread.
 */
#ifndef MECCOUNT_MECCOUNT_H
#define MECCOUNT_MECCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MECCOUNT_BUILDING_LIBRARY)
#    define MC_API __declspec(dllexport)
#  else
#    define MC_API __declspec(dllimport)
#  endif
#else
#  define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_ERR_ARGUMENT = 1,   /* null pointer or bad option value */
  MC_ERR_PARSE = 2,      /* instance text malformed; see mc_last_error_line */
  MC_ERR_VALIDATION = 3, /* instance parsed but is not a valid class */
  MC_ERR_PSI_CAP = 4,    /* clique knowledge above the permutation cap */
  MC_ERR_ORACLE_CAP = 5, /* instance too large for brute force */
  MC_ERR_GENERATION = 6, /* random generation gave up */
  MC_ERR_IO = 7,
  MC_ERR_INTERNAL = 8
} mc_status;

typedef struct mc_instance mc_instance;
typedef struct mc_result mc_result;

MC_API const char* mc_version(void);
MC_API const char* mc_status_name(mc_status status);

/* Message of the last failed call on this thread, "" if none. */
MC_API const char* mc_last_error(void);
/* Source line of the last parse failure, 0 if unknown. */
MC_API size_t mc_last_error_line(void);

MC_API void mc_string_free(char* s);

/* ---- instances ---- */

MC_API mc_status mc_instance_parse(const char* text, mc_instance** out);
MC_API mc_status mc_instance_load(const char* path, mc_instance** out);
MC_API mc_status mc_instance_save(const mc_instance* inst, const char* path);
MC_API mc_status mc_instance_serialize(const mc_instance* inst, char** out);
MC_API void mc_instance_free(mc_instance* inst);

MC_API size_t mc_instance_vertex_count(const mc_instance* inst);
MC_API size_t mc_instance_knowledge_size(const mc_instance* inst);

/* MC_OK when valid. Otherwise MC_ERR_VALIDATION and, when report is not
 * null, one diagnostic per line ("line N: ..."). */
MC_API mc_status mc_instance_validate(const mc_instance* inst, char** report);

MC_API mc_status mc_instance_max_clique_knowledge(const mc_instance* inst, size_t* out);

/* ---- counting ---- */

typedef struct mc_count_options {
  size_t psi_cap; /* largest knowledge vertex set per clique, at most 24 */
  int memoize;    /* nonzero to reuse subproblem results */
} mc_count_options;

MC_API void mc_count_options_init(mc_count_options* opts);

typedef struct mc_stats {
  uint64_t count_calls;
  uint64_t distinct_subproblems;
  uint64_t memo_hits;
  uint64_t lbfs_calls;
  uint64_t flag_rejections;
  uint64_t phi_calls;
  uint64_t psi_calls;
  uint64_t max_knowledge_vertices;
  uint64_t components;          /* chordal components with an edge */
  uint64_t max_component_cliques;
  int subproblem_bound_holds;   /* per component: subproblems <= 2*cliques-1 */
} mc_stats;

/* opts may be null for defaults. */
MC_API mc_status mc_count(const mc_instance* inst, const mc_count_options* opts,
                          mc_result** out);
MC_API mc_status mc_result_count(const mc_result* res, char** decimal);
MC_API mc_status mc_result_stats(const mc_result* res, mc_stats* out);
/* "key: value" lines, one per statistic and one per component. */
MC_API mc_status mc_result_stats_text(const mc_result* res, char** text);
MC_API void mc_result_free(mc_result* res);

/* Brute-force count; cap 0 means the default of 9 vertices. */
MC_API mc_status mc_oracle_count(const mc_instance* inst, size_t cap, char** decimal);

/* ---- generation ---- */

typedef struct mc_gen_options {
  size_t n;
  size_t k;            /* knowledge target; 0 for no knowledge */
  uint64_t seed;
  double p_low;
  double p_high;
  size_t max_attempts;
} mc_gen_options;

MC_API void mc_gen_options_init(mc_gen_options* opts);
MC_API mc_status mc_generate(const mc_gen_options* opts, mc_instance** out);

/* New instance with extra knowledge that keeps max-clique-knowledge; grown is
 * set to 0 when nothing could be added. The input must be fully undirected. */
MC_API mc_status mc_grow_knowledge(const mc_instance* inst, uint64_t seed,
                                   mc_instance** out, int* grown);

/* ---- benchmarks ---- */

typedef struct mc_bench_options {
  const size_t* n_list;
  size_t n_count;
  const size_t* k_list;
  size_t k_count;
  size_t reps;
  size_t timing_runs;
  uint64_t seed;
  size_t psi_cap;
  int table1;
} mc_bench_options;

MC_API void mc_bench_options_init(mc_bench_options* opts);

/* csv receives the aggregate (or K1/K2) table, records the per-instance rows
 * (null in table1 mode) and failures one line per failed instance. Any of the
 * out-parameters may be null. Failed instances do not make the call fail. */
MC_API mc_status mc_bench_run(const mc_bench_options* opts, char** csv, char** records,
                              char** failures, size_t* failure_count);

#ifdef __cplusplus
}
#endif

#endif /* MECCOUNT_MECCOUNT_H */
