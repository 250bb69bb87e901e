#include "centrank.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>

#include "centrank/experiments.hpp"

struct centrank_graph {
    centrank::Graph g;
};
struct centrank_scores {
    centrank::CentralityScores s;
};
struct centrank_suite_report {
    centrank::SuiteReport r;
};
struct centrank_trial {
    centrank::TrialResult t;
};
struct centrank_bench_report {
    centrank::BenchReport r;
};

namespace {

thread_local std::string g_last_error;

centrank_status to_status(centrank::ErrorCode code) {
    using centrank::ErrorCode;
    switch (code) {
    case ErrorCode::id_out_of_range: return CENTRANK_E_ID_OUT_OF_RANGE;
    case ErrorCode::self_loop: return CENTRANK_E_SELF_LOOP;
    case ErrorCode::duplicate_edge: return CENTRANK_E_DUPLICATE_EDGE;
    case ErrorCode::not_square: return CENTRANK_E_NOT_SQUARE;
    case ErrorCode::negative_entry: return CENTRANK_E_NEGATIVE_ENTRY;
    case ErrorCode::nonzero_diagonal: return CENTRANK_E_NONZERO_DIAGONAL;
    case ErrorCode::parse: return CENTRANK_E_PARSE;
    case ErrorCode::invalid_probability: return CENTRANK_E_INVALID_PROBABILITY;
    case ErrorCode::non_convergence: return CENTRANK_E_NON_CONVERGENCE;
    case ErrorCode::zero_matrix: return CENTRANK_E_ZERO_MATRIX;
    case ErrorCode::non_finite_score: return CENTRANK_E_NON_FINITE_SCORE;
    case ErrorCode::length_mismatch: return CENTRANK_E_LENGTH_MISMATCH;
    case ErrorCode::degenerate_ranking: return CENTRANK_E_DEGENERATE_RANKING;
    case ErrorCode::zero_variance: return CENTRANK_E_ZERO_VARIANCE;
    case ErrorCode::invalid_k: return CENTRANK_E_INVALID_K;
    case ErrorCode::invalid_argument: return CENTRANK_E_INVALID_ARGUMENT;
    case ErrorCode::io: return CENTRANK_E_IO;
    }
    return CENTRANK_E_INVALID_ARGUMENT;
}

centrank_status fail(centrank_status status, const char *message) {
    g_last_error = message;
    return status;
}

template <typename F>
centrank_status guard(F &&fn) noexcept {
    try {
        return fn();
    } catch (const centrank::Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return CENTRANK_E_NOMEM;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return CENTRANK_E_INVALID_ARGUMENT;
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        return nullptr;
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

centrank_status emit_string(const std::string &s, char **out) {
    if (!out)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
    *out = copy_string(s);
    return *out ? CENTRANK_OK : fail(CENTRANK_E_NOMEM, "out of memory");
}

centrank::SolverConfig solver_from_c(const centrank_solver_config *cfg,
                                     const centrank::SolverConfig &defaults) {
    if (!cfg)
        return defaults;
    centrank::SolverConfig out;
    out.damping = cfg->damping;
    out.tolerance = cfg->tolerance;
    out.max_iterations = static_cast<int>(cfg->max_iterations);
    return out;
}

int checked_int(int64_t v, const char *what) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw centrank::Error(centrank::ErrorCode::invalid_argument,
                              std::string(what) + " out of range");
    return static_cast<int>(v);
}

centrank::TiePolicy tie_policy_from(int policy) {
    if (policy == CENTRANK_TIE_COMPETITION)
        return centrank::TiePolicy::competition;
    if (policy == CENTRANK_TIE_AVERAGE)
        return centrank::TiePolicy::average;
    throw centrank::Error(centrank::ErrorCode::invalid_argument, "unknown tie policy");
}

void fill_comparison(const centrank::CorrelationReport &rep, centrank_comparison *out) {
    out->n = rep.n;
    out->spearman_rho = rep.spearman_rho;
    out->pearson_r = rep.pearson_r;
    out->critical_value = rep.critical_value ? *rep.critical_value
                                             : std::numeric_limits<double>::quiet_NaN();
    out->critical_is_approximate = rep.critical_is_approximate ? 1 : 0;
    out->significant = rep.significant ? (*rep.significant ? 1 : 0) : -1;
    out->top_k = rep.top_k;
    out->top_k_overlap = rep.top_k_overlap;
}

centrank::SuiteConfig suite_from_c(const centrank_suite_config *cfg) {
    centrank::SuiteConfig out;
    if (!cfg)
        return out;
    if (cfg->sizes && cfg->size_count > 0) {
        out.sizes.clear();
        for (size_t i = 0; i < cfg->size_count; ++i)
            out.sizes.push_back(checked_int(cfg->sizes[i], "suite size"));
    }
    if (cfg->trials_per_size > 0)
        out.trials_per_size = static_cast<int>(cfg->trials_per_size);
    if (cfg->density >= 0.0)
        out.density = cfg->density;
    out.base_seed = cfg->base_seed;
    if (cfg->top_k > 0)
        out.top_k = static_cast<int>(cfg->top_k);
    if (cfg->damping > 0.0) {
        out.solvers.pagerank.damping = cfg->damping;
        out.solvers.eigenvector.damping = cfg->damping;
    }
    if (cfg->pagerank_tolerance > 0.0)
        out.solvers.pagerank.tolerance = cfg->pagerank_tolerance;
    if (cfg->pagerank_max_iterations > 0)
        out.solvers.pagerank.max_iterations = static_cast<int>(cfg->pagerank_max_iterations);
    if (cfg->eigenvector_tolerance > 0.0)
        out.solvers.eigenvector.tolerance = cfg->eigenvector_tolerance;
    if (cfg->eigenvector_max_iterations > 0)
        out.solvers.eigenvector.max_iterations =
            static_cast<int>(cfg->eigenvector_max_iterations);
    if (cfg->threads > 0)
        out.threads = static_cast<int>(cfg->threads);
    return out;
}

} // namespace

extern "C" {

const char *centrank_version(void) { return "0.1.0"; }

const char *centrank_status_name(centrank_status status) {
    switch (status) {
    case CENTRANK_OK: return "ok";
    case CENTRANK_E_ID_OUT_OF_RANGE: return "id_out_of_range";
    case CENTRANK_E_SELF_LOOP: return "self_loop";
    case CENTRANK_E_DUPLICATE_EDGE: return "duplicate_edge";
    case CENTRANK_E_NOT_SQUARE: return "not_square";
    case CENTRANK_E_NEGATIVE_ENTRY: return "negative_entry";
    case CENTRANK_E_NONZERO_DIAGONAL: return "nonzero_diagonal";
    case CENTRANK_E_PARSE: return "parse_error";
    case CENTRANK_E_INVALID_PROBABILITY: return "invalid_probability";
    case CENTRANK_E_NON_CONVERGENCE: return "non_convergence";
    case CENTRANK_E_ZERO_MATRIX: return "zero_matrix";
    case CENTRANK_E_NON_FINITE_SCORE: return "non_finite_score";
    case CENTRANK_E_LENGTH_MISMATCH: return "length_mismatch";
    case CENTRANK_E_DEGENERATE_RANKING: return "degenerate_ranking";
    case CENTRANK_E_ZERO_VARIANCE: return "zero_variance";
    case CENTRANK_E_INVALID_K: return "invalid_k";
    case CENTRANK_E_INVALID_ARGUMENT: return "invalid_argument";
    case CENTRANK_E_IO: return "io_error";
    case CENTRANK_E_NOMEM: return "out_of_memory";
    }
    return "unknown";
}

const char *centrank_last_error(void) { return g_last_error.c_str(); }

centrank_status centrank_graph_build(int64_t node_count, const int64_t *src, const int64_t *dst,
                                     const double *weights, size_t edge_count,
                                     centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!out || (edge_count > 0 && (!src || !dst)))
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        std::vector<centrank::Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges[i] = {checked_int(src[i], "source id"), checked_int(dst[i], "target id"),
                        weights ? weights[i] : 1.0};
        *out = new centrank_graph{centrank::build_graph(checked_int(node_count, "node count"),
                                                        edges)};
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_from_matrix(int64_t order, const double *row_major,
                                           centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!out || !row_major)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        centrank::AdjacencyMatrix m;
        m.order = checked_int(order, "matrix order");
        if (m.order < 1)
            return fail(CENTRANK_E_NOT_SQUARE, "matrix order must be >= 1");
        m.entries.assign(row_major,
                         row_major + static_cast<size_t>(m.order) * static_cast<size_t>(m.order));
        *out = new centrank_graph{centrank::from_adjacency_matrix(m)};
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_parse_edge_list(const char *text, size_t len,
                                               centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!out || !text)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        std::istringstream in(len ? std::string(text, len) : std::string(text));
        *out = new centrank_graph{centrank::load_edge_list(in)};
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_parse_matrix(const char *text, size_t len, centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!out || !text)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        std::istringstream in(len ? std::string(text, len) : std::string(text));
        *out = new centrank_graph{
            centrank::from_adjacency_matrix(centrank::parse_adjacency_matrix(in))};
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_random(int64_t n, double p, uint64_t seed, int ensure_out_degree,
                                      centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
        *out = new centrank_graph{
            centrank::random_digraph(checked_int(n, "node count"), p, seed,
                                     ensure_out_degree != 0)};
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_reversed(const centrank_graph *g, centrank_graph **out) {
    return guard([&]() -> centrank_status {
        if (!g || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        *out = new centrank_graph{g->g.reversed()};
        return CENTRANK_OK;
    });
}

int64_t centrank_graph_node_count(const centrank_graph *g) {
    return g ? g->g.node_count() : 0;
}

int64_t centrank_graph_edge_count(const centrank_graph *g) {
    return g ? static_cast<int64_t>(g->g.edge_count()) : 0;
}

centrank_status centrank_graph_degrees(const centrank_graph *g, int64_t node, int64_t *in_degree,
                                       int64_t *out_degree) {
    return guard([&]() -> centrank_status {
        if (!g)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "graph is NULL");
        const auto [in_d, out_d] = centrank::degrees(g->g, checked_int(node, "node id"));
        if (in_degree)
            *in_degree = in_d;
        if (out_degree)
            *out_degree = out_d;
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_edges(const centrank_graph *g, int64_t *src, int64_t *dst,
                                     double *weights) {
    return guard([&]() -> centrank_status {
        if (!g)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "graph is NULL");
        const auto &edges = g->g.edges();
        for (size_t i = 0; i < edges.size(); ++i) {
            if (src)
                src[i] = edges[i].src;
            if (dst)
                dst[i] = edges[i].dst;
            if (weights)
                weights[i] = edges[i].weight;
        }
        return CENTRANK_OK;
    });
}

centrank_status centrank_graph_to_matrix(const centrank_graph *g, double *row_major) {
    return guard([&]() -> centrank_status {
        if (!g || !row_major)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        const centrank::AdjacencyMatrix m = centrank::to_adjacency_matrix(g->g);
        std::memcpy(row_major, m.entries.data(), m.entries.size() * sizeof(double));
        return CENTRANK_OK;
    });
}

void centrank_graph_free(centrank_graph *g) { delete g; }

void centrank_solver_config_pagerank_defaults(centrank_solver_config *cfg) {
    if (!cfg)
        return;
    const auto d = centrank::SolverConfig::pagerank_defaults();
    *cfg = {d.damping, d.tolerance, d.max_iterations};
}

void centrank_solver_config_eigenvector_defaults(centrank_solver_config *cfg) {
    if (!cfg)
        return;
    const auto d = centrank::SolverConfig::eigenvector_defaults();
    *cfg = {d.damping, d.tolerance, d.max_iterations};
}

centrank_status centrank_pagerank(const centrank_graph *g, const centrank_solver_config *cfg,
                                  centrank_scores **out) {
    return guard([&]() -> centrank_status {
        if (!g || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        *out = new centrank_scores{
            centrank::pagerank(g->g, solver_from_c(cfg, centrank::SolverConfig::pagerank_defaults()))};
        return CENTRANK_OK;
    });
}

centrank_status centrank_pagerank_dense(const centrank_graph *g, const centrank_solver_config *cfg,
                                        centrank_scores **out) {
    return guard([&]() -> centrank_status {
        if (!g || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        const centrank::AdjacencyMatrix m = centrank::to_adjacency_matrix(g->g);
        *out = new centrank_scores{centrank::pagerank_matrix(
            m, solver_from_c(cfg, centrank::SolverConfig::pagerank_defaults()))};
        return CENTRANK_OK;
    });
}

centrank_status centrank_eigenvector(const centrank_graph *g, const centrank_solver_config *cfg,
                                     centrank_scores **out) {
    return guard([&]() -> centrank_status {
        if (!g || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        *out = new centrank_scores{centrank::eigenvector_centrality(
            g->g, solver_from_c(cfg, centrank::SolverConfig::eigenvector_defaults()))};
        return CENTRANK_OK;
    });
}

centrank_status centrank_degree(const centrank_graph *g, int mode, centrank_scores **out) {
    return guard([&]() -> centrank_status {
        if (!g || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        if (mode != CENTRANK_DEGREE_IN && mode != CENTRANK_DEGREE_OUT)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "unknown degree mode");
        *out = new centrank_scores{centrank::degree_centrality(
            g->g, mode == CENTRANK_DEGREE_IN ? centrank::DegreeMode::in : centrank::DegreeMode::out)};
        return CENTRANK_OK;
    });
}

int64_t centrank_scores_count(const centrank_scores *s) {
    return s ? static_cast<int64_t>(s->s.scores.size()) : 0;
}

const double *centrank_scores_data(const centrank_scores *s) {
    return s ? s->s.scores.data() : nullptr;
}

centrank_status centrank_scores_eigenvalue(const centrank_scores *s, double *value) {
    if (!s || !value)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
    if (!s->s.dominant_eigenvalue)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "scores carry no dominant eigenvalue");
    *value = *s->s.dominant_eigenvalue;
    return CENTRANK_OK;
}

int64_t centrank_scores_iterations(const centrank_scores *s) { return s ? s->s.iterations : 0; }

double centrank_scores_residual(const centrank_scores *s) { return s ? s->s.residual : 0.0; }

int centrank_scores_converged(const centrank_scores *s) {
    return s && s->s.converged ? 1 : 0;
}

uint64_t centrank_scores_edge_visits(const centrank_scores *s) {
    return s ? s->s.edge_visits : 0;
}

void centrank_scores_free(centrank_scores *s) { delete s; }

centrank_status centrank_rank(const double *scores, size_t n, int tie_policy, int round_decimals,
                              double *ranks_out) {
    return guard([&]() -> centrank_status {
        if (!scores || !ranks_out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        const auto ranking = centrank::rank_scores(
            std::span<const double>(scores, n), tie_policy_from(tie_policy),
            round_decimals < 0 ? std::nullopt : std::optional<int>(round_decimals));
        std::memcpy(ranks_out, ranking.ranks.data(), n * sizeof(double));
        return CENTRANK_OK;
    });
}

centrank_status centrank_spearman(const double *ranks_a, const double *ranks_b, size_t n, int mode,
                                  double *rho) {
    return guard([&]() -> centrank_status {
        if (!ranks_a || !ranks_b || !rho)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        if (mode != CENTRANK_SPEARMAN_RANK_PEARSON && mode != CENTRANK_SPEARMAN_CLASSIC_D2)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "unknown spearman mode");
        centrank::Ranking a, b;
        a.ranks.assign(ranks_a, ranks_a + n);
        b.ranks.assign(ranks_b, ranks_b + n);
        *rho = centrank::spearman_rho(a, b,
                                      mode == CENTRANK_SPEARMAN_CLASSIC_D2
                                          ? centrank::SpearmanMode::classic_d2
                                          : centrank::SpearmanMode::rank_pearson);
        return CENTRANK_OK;
    });
}

centrank_status centrank_pearson(const double *x, const double *y, size_t n, double *r) {
    return guard([&]() -> centrank_status {
        if (!x || !y || !r)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        *r = centrank::pearson_r(std::span<const double>(x, n), std::span<const double>(y, n));
        return CENTRANK_OK;
    });
}

centrank_status centrank_critical_value(int64_t n, double *value, int *approximate) {
    return guard([&]() -> centrank_status {
        if (!value)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
        const auto cv = centrank::critical_value(checked_int(n, "n"));
        if (!cv)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "no critical value for n < 4");
        *value = cv->value;
        if (approximate)
            *approximate = cv->approximate ? 1 : 0;
        return CENTRANK_OK;
    });
}

centrank_status centrank_top_k_agreement(const double *ranks_a, const double *ranks_b, size_t n,
                                         int64_t k, double *overlap) {
    return guard([&]() -> centrank_status {
        if (!ranks_a || !ranks_b || !overlap)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        centrank::Ranking a, b;
        a.ranks.assign(ranks_a, ranks_a + n);
        b.ranks.assign(ranks_b, ranks_b + n);
        *overlap = centrank::top_k_agreement(a, b, checked_int(k, "k"));
        return CENTRANK_OK;
    });
}

centrank_status centrank_compare(const double *scores_a, const double *scores_b, size_t n,
                                 int64_t top_k, int tie_mode, centrank_comparison *out) {
    return guard([&]() -> centrank_status {
        if (!scores_a || !scores_b || !out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        if (tie_mode != CENTRANK_TIEMODE_DEFAULT && tie_mode != CENTRANK_TIEMODE_COMPAT)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "unknown tie mode");
        const bool compat = tie_mode == CENTRANK_TIEMODE_COMPAT;
        const auto rep = centrank::compare(
            std::span<const double>(scores_a, n), std::span<const double>(scores_b, n),
            checked_int(top_k, "top_k"),
            compat ? centrank::SpearmanMode::classic_d2 : centrank::SpearmanMode::rank_pearson,
            compat ? std::optional<int>(4) : std::nullopt);
        fill_comparison(rep, out);
        return CENTRANK_OK;
    });
}

centrank_status centrank_scatter(const centrank_scores *a, const centrank_scores *b, double *xs,
                                 double *ys) {
    return guard([&]() -> centrank_status {
        if (!a || !b || !xs || !ys)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
        const auto points = centrank::scatter_data(a->s, b->s);
        for (size_t i = 0; i < points.size(); ++i) {
            xs[i] = points[i].first;
            ys[i] = points[i].second;
        }
        return CENTRANK_OK;
    });
}

void centrank_suite_config_init(centrank_suite_config *cfg) {
    if (!cfg)
        return;
    std::memset(cfg, 0, sizeof *cfg);
    cfg->trials_per_size = 30;
    cfg->density = 0.25;
    cfg->base_seed = 97;
    cfg->top_k = 5;
    cfg->damping = 0.85;
    cfg->pagerank_tolerance = 1e-8;
    cfg->pagerank_max_iterations = 200;
    cfg->eigenvector_tolerance = 1e-10;
    cfg->eigenvector_max_iterations = 1000;
    cfg->threads = 1;
}

centrank_status centrank_run_suite(const centrank_suite_config *cfg, centrank_suite_report **out) {
    return guard([&]() -> centrank_status {
        if (!out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
        *out = new centrank_suite_report{centrank::run_suite(suite_from_c(cfg))};
        return CENTRANK_OK;
    });
}

size_t centrank_suite_report_size_count(const centrank_suite_report *report) {
    return report ? report->r.aggregates.size() : 0;
}

centrank_status centrank_suite_report_aggregate(const centrank_suite_report *report, size_t index,
                                                centrank_suite_aggregate *out) {
    if (!report || !out)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
    if (index >= report->r.aggregates.size())
        return fail(CENTRANK_E_INVALID_ARGUMENT, "aggregate index out of range");
    const centrank::SizeAggregate &a = report->r.aggregates[index];
    *out = {a.size, a.trials,          a.failed,  a.mean_rho,
            a.min_rho, a.max_rho, a.significance_rate, a.mean_top_k_overlap};
    return CENTRANK_OK;
}

centrank_status centrank_suite_report_json(const centrank_suite_report *report, char **out) {
    if (!report)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "report is NULL");
    return guard([&] { return emit_string(centrank::to_json(report->r), out); });
}

centrank_status centrank_suite_report_csv(const centrank_suite_report *report, char **out) {
    if (!report)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "report is NULL");
    return guard([&] { return emit_string(centrank::to_csv(report->r), out); });
}

void centrank_suite_report_free(centrank_suite_report *report) { delete report; }

centrank_status centrank_run_trial(int64_t size, double density, uint64_t seed,
                                   const centrank_solver_config *pagerank_cfg,
                                   const centrank_solver_config *eigenvector_cfg, int64_t top_k,
                                   centrank_trial **out) {
    return guard([&]() -> centrank_status {
        if (!out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
        centrank::Solvers solvers;
        solvers.pagerank = solver_from_c(pagerank_cfg, centrank::SolverConfig::pagerank_defaults());
        solvers.eigenvector =
            solver_from_c(eigenvector_cfg, centrank::SolverConfig::eigenvector_defaults());
        *out = new centrank_trial{centrank::run_trial(checked_int(size, "size"), density, seed,
                                                      solvers, checked_int(top_k, "top_k"))};
        return CENTRANK_OK;
    });
}

int centrank_trial_ok(const centrank_trial *trial) { return trial && trial->t.ok ? 1 : 0; }

centrank_status centrank_trial_report(const centrank_trial *trial, centrank_comparison *out) {
    if (!trial || !out)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
    if (!trial->t.ok) {
        g_last_error = trial->t.failure;
        return trial->t.failure_code ? to_status(*trial->t.failure_code)
                                     : CENTRANK_E_INVALID_ARGUMENT;
    }
    fill_comparison(trial->t.report, out);
    return CENTRANK_OK;
}

centrank_status centrank_trial_csv(const centrank_trial *trial, char **out) {
    if (!trial)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "trial is NULL");
    return guard([&] { return emit_string(centrank::to_csv(trial->t), out); });
}

centrank_status centrank_trial_json(const centrank_trial *trial, char **out) {
    if (!trial)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "trial is NULL");
    return guard([&] { return emit_string(centrank::to_json(trial->t), out); });
}

void centrank_trial_free(centrank_trial *trial) { delete trial; }

void centrank_bench_config_init(centrank_bench_config *cfg) {
    if (!cfg)
        return;
    std::memset(cfg, 0, sizeof *cfg);
    cfg->density = 0.25;
    cfg->seed = 97;
    cfg->repetitions = 5;
}

centrank_status centrank_run_bench(const centrank_bench_config *cfg, centrank_bench_report **out) {
    return guard([&]() -> centrank_status {
        if (!out)
            return fail(CENTRANK_E_INVALID_ARGUMENT, "output pointer is NULL");
        centrank::BenchConfig bc;
        if (cfg) {
            if (cfg->sizes && cfg->size_count > 0) {
                bc.sizes.clear();
                for (size_t i = 0; i < cfg->size_count; ++i)
                    bc.sizes.push_back(checked_int(cfg->sizes[i], "bench size"));
            }
            if (cfg->density >= 0.0)
                bc.density = cfg->density;
            bc.seed = cfg->seed;
            if (cfg->repetitions > 0)
                bc.repetitions = static_cast<int>(cfg->repetitions);
        }
        *out = new centrank_bench_report{centrank::run_bench(bc)};
        return CENTRANK_OK;
    });
}

size_t centrank_bench_report_series_count(const centrank_bench_report *report) {
    return report ? report->r.series.size() : 0;
}

centrank_status centrank_bench_report_series(const centrank_bench_report *report, size_t index,
                                             centrank_bench_series *out) {
    if (!report || !out)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "required pointer is NULL");
    if (index >= report->r.series.size())
        return fail(CENTRANK_E_INVALID_ARGUMENT, "series index out of range");
    const centrank::BenchSeries &s = report->r.series[index];
    std::memset(out, 0, sizeof *out);
    std::snprintf(out->method, sizeof out->method, "%s", centrank::method_name(s.method));
    std::snprintf(out->representation, sizeof out->representation, "%s",
                  centrank::representation_name(s.representation));
    out->has_slopes = s.has_slopes ? 1 : 0;
    out->slope_total = s.slope_total;
    out->slope_per_iteration = s.slope_per_iter;
    return CENTRANK_OK;
}

centrank_status centrank_bench_report_csv(const centrank_bench_report *report, char **out) {
    if (!report)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "report is NULL");
    return guard([&] { return emit_string(centrank::to_csv(report->r), out); });
}

centrank_status centrank_bench_report_json(const centrank_bench_report *report, char **out) {
    if (!report)
        return fail(CENTRANK_E_INVALID_ARGUMENT, "report is NULL");
    return guard([&] { return emit_string(centrank::to_json(report->r), out); });
}

void centrank_bench_report_free(centrank_bench_report *report) { delete report; }

void centrank_string_free(char *s) { std::free(s); }

} // extern "C"
