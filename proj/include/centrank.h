/*
 * centrank - PageRank / eigenvector centrality comparison toolkit.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and released through these functions; every fallible call returns a
 * centrank_status, with a human-readable message available from
 * centrank_last_error() (thread-local) until the next failing call on the
 * same thread.
 */

#ifndef CENTRANK_H
#define CENTRANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CENTRANK_API __declspec(dllexport)
#else
#define CENTRANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum centrank_status {
    CENTRANK_OK = 0,
    CENTRANK_E_ID_OUT_OF_RANGE,
    CENTRANK_E_SELF_LOOP,
    CENTRANK_E_DUPLICATE_EDGE,
    CENTRANK_E_NOT_SQUARE,
    CENTRANK_E_NEGATIVE_ENTRY,
    CENTRANK_E_NONZERO_DIAGONAL,
    CENTRANK_E_PARSE,
    CENTRANK_E_INVALID_PROBABILITY,
    CENTRANK_E_NON_CONVERGENCE,
    CENTRANK_E_ZERO_MATRIX,
    CENTRANK_E_NON_FINITE_SCORE,
    CENTRANK_E_LENGTH_MISMATCH,
    CENTRANK_E_DEGENERATE_RANKING,
    CENTRANK_E_ZERO_VARIANCE,
    CENTRANK_E_INVALID_K,
    CENTRANK_E_INVALID_ARGUMENT,
    CENTRANK_E_IO,
    CENTRANK_E_NOMEM,
} centrank_status;

CENTRANK_API const char *centrank_version(void);
CENTRANK_API const char *centrank_status_name(centrank_status status);
/* Message for the most recent failure on this thread; never NULL. */
CENTRANK_API const char *centrank_last_error(void);

/* ------------------------------------------------------------------ graphs */

typedef struct centrank_graph centrank_graph;

/* Directed graph over nodes 0..node_count-1. weights may be NULL (all 1). */
CENTRANK_API centrank_status centrank_graph_build(int64_t node_count, const int64_t *src,
                                                  const int64_t *dst, const double *weights,
                                                  size_t edge_count, centrank_graph **out);
/* Row-major order*order matrix, row = source, column = target. */
CENTRANK_API centrank_status centrank_graph_from_matrix(int64_t order, const double *row_major,
                                                        centrank_graph **out);
/* Edge-list text: '#' comments, optional "# nodes=N" header, lines
 * "src<TAB>dst" or "src<TAB>dst<TAB>weight". len 0 means strlen(text). */
CENTRANK_API centrank_status centrank_graph_parse_edge_list(const char *text, size_t len,
                                                            centrank_graph **out);
/* Matrix text: V lines of V space-separated reals. */
CENTRANK_API centrank_status centrank_graph_parse_matrix(const char *text, size_t len,
                                                         centrank_graph **out);
/* Seeded directed G(n, p); identical arguments give identical edge sets on
 * every platform. */
CENTRANK_API centrank_status centrank_graph_random(int64_t n, double p, uint64_t seed,
                                                   int ensure_out_degree, centrank_graph **out);
CENTRANK_API centrank_status centrank_graph_reversed(const centrank_graph *g,
                                                     centrank_graph **out);

CENTRANK_API int64_t centrank_graph_node_count(const centrank_graph *g);
CENTRANK_API int64_t centrank_graph_edge_count(const centrank_graph *g);
CENTRANK_API centrank_status centrank_graph_degrees(const centrank_graph *g, int64_t node,
                                                    int64_t *in_degree, int64_t *out_degree);
/* Fills caller arrays of length edge_count; any pointer may be NULL. */
CENTRANK_API centrank_status centrank_graph_edges(const centrank_graph *g, int64_t *src,
                                                  int64_t *dst, double *weights);
/* Fills caller array of length node_count^2, row-major. */
CENTRANK_API centrank_status centrank_graph_to_matrix(const centrank_graph *g, double *row_major);
CENTRANK_API void centrank_graph_free(centrank_graph *g);

/* -------------------------------------------------------------- centrality */

typedef struct centrank_solver_config {
    double damping;     /* in (0, 1) */
    double tolerance;   /* max-norm stopping threshold */
    int64_t max_iterations;
} centrank_solver_config;

CENTRANK_API void centrank_solver_config_pagerank_defaults(centrank_solver_config *cfg);
CENTRANK_API void centrank_solver_config_eigenvector_defaults(centrank_solver_config *cfg);

typedef struct centrank_scores centrank_scores;

/* cfg NULL means the method's defaults. */
CENTRANK_API centrank_status centrank_pagerank(const centrank_graph *g,
                                               const centrank_solver_config *cfg,
                                               centrank_scores **out);
/* Same fixed point, but every iteration scans the dense V x V matrix. */
CENTRANK_API centrank_status centrank_pagerank_dense(const centrank_graph *g,
                                                     const centrank_solver_config *cfg,
                                                     centrank_scores **out);
/* Right dominant eigenvector of the adjacency matrix, unit Euclidean norm. */
CENTRANK_API centrank_status centrank_eigenvector(const centrank_graph *g,
                                                  const centrank_solver_config *cfg,
                                                  centrank_scores **out);

#define CENTRANK_DEGREE_IN 0
#define CENTRANK_DEGREE_OUT 1
CENTRANK_API centrank_status centrank_degree(const centrank_graph *g, int mode,
                                             centrank_scores **out);

CENTRANK_API int64_t centrank_scores_count(const centrank_scores *s);
/* Borrowed pointer, valid until the handle is freed. */
CENTRANK_API const double *centrank_scores_data(const centrank_scores *s);
/* CENTRANK_E_INVALID_ARGUMENT when the method carries no eigenvalue. */
CENTRANK_API centrank_status centrank_scores_eigenvalue(const centrank_scores *s, double *value);
CENTRANK_API int64_t centrank_scores_iterations(const centrank_scores *s);
CENTRANK_API double centrank_scores_residual(const centrank_scores *s);
CENTRANK_API int centrank_scores_converged(const centrank_scores *s);
CENTRANK_API uint64_t centrank_scores_edge_visits(const centrank_scores *s);
CENTRANK_API void centrank_scores_free(centrank_scores *s);

/* -------------------------------------------------------- rank statistics */

#define CENTRANK_TIE_COMPETITION 0
#define CENTRANK_TIE_AVERAGE 1

/* Ranks by descending score into ranks_out (length n), rank 1 best.
 * round_decimals >= 0 compares scores rounded to that many decimals;
 * -1 compares full precision. */
CENTRANK_API centrank_status centrank_rank(const double *scores, size_t n, int tie_policy,
                                           int round_decimals, double *ranks_out);

#define CENTRANK_SPEARMAN_RANK_PEARSON 0
#define CENTRANK_SPEARMAN_CLASSIC_D2 1
CENTRANK_API centrank_status centrank_spearman(const double *ranks_a, const double *ranks_b,
                                               size_t n, int mode, double *rho);
CENTRANK_API centrank_status centrank_pearson(const double *x, const double *y, size_t n,
                                              double *r);
/* Anchored values for n = 21/50/100; a t-based one-tailed 5% approximation
 * otherwise (approximate set to 1). CENTRANK_E_INVALID_ARGUMENT for n < 4. */
CENTRANK_API centrank_status centrank_critical_value(int64_t n, double *value, int *approximate);
CENTRANK_API centrank_status centrank_top_k_agreement(const double *ranks_a,
                                                      const double *ranks_b, size_t n, int64_t k,
                                                      double *overlap);

typedef struct centrank_comparison {
    int64_t n;
    double spearman_rho;
    double pearson_r;
    double critical_value; /* NaN when n < 4 */
    int critical_is_approximate;
    int significant; /* -1 unknown, else 0/1 */
    int64_t top_k;
    double top_k_overlap;
} centrank_comparison;

#define CENTRANK_TIEMODE_DEFAULT 0 /* full-precision ranks, Pearson over ranks */
#define CENTRANK_TIEMODE_COMPAT 1  /* 4-decimal rounding, classic d^2 formula */

/* Ranks both score vectors (competition policy) and fills the report. */
CENTRANK_API centrank_status centrank_compare(const double *scores_a, const double *scores_b,
                                              size_t n, int64_t top_k, int tie_mode,
                                              centrank_comparison *out);

/* Paired points (a[i], b[i]) sorted by the first coordinate. */
CENTRANK_API centrank_status centrank_scatter(const centrank_scores *a, const centrank_scores *b,
                                              double *xs, double *ys);

/* ------------------------------------------------------------- experiments */

typedef struct centrank_suite_config {
    const int64_t *sizes; /* NULL means the default 21, 50, 100 */
    size_t size_count;
    int64_t trials_per_size; /* <= 0 means 30 */
    double density;          /* < 0 means 0.25 */
    uint64_t base_seed;
    int64_t top_k;   /* <= 0 means 5 */
    double damping;  /* <= 0 means 0.85 */
    double pagerank_tolerance;        /* <= 0 means 1e-8 */
    int64_t pagerank_max_iterations;  /* <= 0 means 200 */
    double eigenvector_tolerance;     /* <= 0 means 1e-10 */
    int64_t eigenvector_max_iterations; /* <= 0 means 1000 */
    int64_t threads; /* <= 0 means 1; never affects the report contents */
} centrank_suite_config;

CENTRANK_API void centrank_suite_config_init(centrank_suite_config *cfg);

typedef struct centrank_suite_report centrank_suite_report;

CENTRANK_API centrank_status centrank_run_suite(const centrank_suite_config *cfg,
                                                centrank_suite_report **out);

typedef struct centrank_suite_aggregate {
    int64_t size;
    int64_t trials;
    int64_t failed;
    double mean_rho;
    double min_rho;
    double max_rho;
    double significance_rate;
    double mean_top_k_overlap;
} centrank_suite_aggregate;

CENTRANK_API size_t centrank_suite_report_size_count(const centrank_suite_report *report);
CENTRANK_API centrank_status centrank_suite_report_aggregate(const centrank_suite_report *report,
                                                             size_t index,
                                                             centrank_suite_aggregate *out);
/* Serialized report; free the string with centrank_string_free. Equal
 * configurations produce byte-identical JSON. */
CENTRANK_API centrank_status centrank_suite_report_json(const centrank_suite_report *report,
                                                        char **out);
CENTRANK_API centrank_status centrank_suite_report_csv(const centrank_suite_report *report,
                                                       char **out);
CENTRANK_API void centrank_suite_report_free(centrank_suite_report *report);

typedef struct centrank_trial centrank_trial;

/* One generated graph, both centrality measures, ranks and correlation.
 * solver configs may be NULL for defaults. */
CENTRANK_API centrank_status centrank_run_trial(int64_t size, double density, uint64_t seed,
                                                const centrank_solver_config *pagerank_cfg,
                                                const centrank_solver_config *eigenvector_cfg,
                                                int64_t top_k, centrank_trial **out);
CENTRANK_API int centrank_trial_ok(const centrank_trial *trial);
CENTRANK_API centrank_status centrank_trial_report(const centrank_trial *trial,
                                                   centrank_comparison *out);
CENTRANK_API centrank_status centrank_trial_csv(const centrank_trial *trial, char **out);
CENTRANK_API centrank_status centrank_trial_json(const centrank_trial *trial, char **out);
CENTRANK_API void centrank_trial_free(centrank_trial *trial);

typedef struct centrank_bench_config {
    const int64_t *sizes; /* NULL means the default 50, 100, 200, 400 */
    size_t size_count;
    double density;      /* < 0 means 0.25 */
    uint64_t seed;
    int64_t repetitions; /* <= 0 means 5; must be >= 3 */
} centrank_bench_config;

CENTRANK_API void centrank_bench_config_init(centrank_bench_config *cfg);

typedef struct centrank_bench_report centrank_bench_report;

typedef struct centrank_bench_series {
    char method[16];         /* "pagerank" or "eigenvector" */
    char representation[8];  /* "list" or "matrix" */
    int has_slopes;          /* slopes need >= 4 sizes */
    double slope_total;      /* log-log slope of median time vs size */
    double slope_per_iteration;
} centrank_bench_series;

CENTRANK_API centrank_status centrank_run_bench(const centrank_bench_config *cfg,
                                                centrank_bench_report **out);
CENTRANK_API size_t centrank_bench_report_series_count(const centrank_bench_report *report);
CENTRANK_API centrank_status centrank_bench_report_series(const centrank_bench_report *report,
                                                          size_t index,
                                                          centrank_bench_series *out);
CENTRANK_API centrank_status centrank_bench_report_csv(const centrank_bench_report *report,
                                                       char **out);
CENTRANK_API centrank_status centrank_bench_report_json(const centrank_bench_report *report,
                                                        char **out);
CENTRANK_API void centrank_bench_report_free(centrank_bench_report *report);

CENTRANK_API void centrank_string_free(char *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CENTRANK_H */
