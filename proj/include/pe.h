#ifndef PE_H
#define PE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PE_API __declspec(dllexport)
#else
#define PE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible call. */
typedef enum pe_status {
    PE_OK = 0,
    PE_ERR_INPUT = 1,           /* invalid argument or precondition */
    PE_ERR_PARSE = 2,           /* malformed text, JSON or config */
    PE_ERR_RESOURCE = 3,        /* a budget or round limit was exceeded */
    PE_ERR_SPLITTER_BUDGET = 4, /* pre-core recursion ran out of splitter rounds */
    PE_ERR_INVARIANT = 5,       /* internal consistency check failed */
    PE_ERR_INTERNAL = 6
} pe_status;

typedef struct pe_graph pe_graph;
typedef struct pe_formula pe_formula;

/* Message for the last failing call on this thread; never NULL. */
PE_API const char* pe_last_error(void);
PE_API const char* pe_version(void);
PE_API const char* pe_status_name(pe_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
PE_API void pe_string_free(char* s);

/* Graphs: edge-list or DIMACS text, or a named generator family. */
PE_API pe_status pe_graph_parse(const char* text, pe_graph** out);
PE_API pe_status pe_graph_generate(const char* family, const char* params_json, uint64_t seed, pe_graph** out);
PE_API void pe_graph_free(pe_graph* g);
PE_API size_t pe_graph_vertex_count(const pe_graph* g);
PE_API size_t pe_graph_edge_count(const pe_graph* g);
PE_API pe_status pe_graph_to_text(const pe_graph* g, char** out);

/* Distance formulas: JSON {"c","d","node"} or the standard builders. */
PE_API pe_status pe_formula_parse(const char* json, pe_formula** out);
PE_API pe_status pe_formula_delta(unsigned k, unsigned r, pe_formula** out);
PE_API pe_status pe_formula_eta(unsigned k, unsigned r, pe_formula** out);
PE_API void pe_formula_free(pe_formula* f);
PE_API pe_status pe_formula_to_json(const pe_formula* f, char** out);

/* Solvers. Results are JSON objects tagged "schema": "pe/1". */
PE_API pe_status pe_solve_domset(const pe_graph* g, unsigned k, unsigned r, char** result_json);
PE_API pe_status pe_solve_formula(const pe_graph* g, const pe_formula* f, char** result_json);
PE_API pe_status pe_solve_ladder(const pe_graph* g, const pe_formula* f, unsigned p, char** result_json);
/* strategy: "ball_max_degree", "connector_echo" or "bfs_center"; NULL for the default. */
PE_API pe_status pe_solve_indep(const pe_graph* g, unsigned k, unsigned r, const char* strategy,
                                unsigned depth_budget, char** result_json);
PE_API pe_status pe_coverage_core(const pe_graph* g, const pe_formula* f, char** result_json);

/* Measurements. */
PE_API pe_status pe_measure_indices(const char* bipartite_text, char** result_json);
PE_API pe_status pe_measure_profiles(const pe_graph* g, unsigned r, unsigned m, uint64_t seed,
                                     char** result_json);

/* Benchmark suite from a JSON config. Any output pointer may be NULL. With
   include_timing == 0 the outputs are deterministic for a fixed config. */
PE_API pe_status pe_bench_run(const char* config_json, int include_timing, char** records_csv,
                              char** scaling_csv, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
