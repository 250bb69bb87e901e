// centrank command-line front end. Everything goes through the public C API
// in centrank.h; diagnostics go to stderr, data to the selected output only.
//
// Exit codes: 0 success, 1 input/parse error, 2 numeric failure
// (non-convergence, degenerate ranking), 3 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "centrank.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 3;

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int exit_code_for(centrank_status status) {
    switch (status) {
    case CENTRANK_OK:
        return kExitOk;
    case CENTRANK_E_NON_CONVERGENCE:
    case CENTRANK_E_DEGENERATE_RANKING:
    case CENTRANK_E_ZERO_VARIANCE:
    case CENTRANK_E_ZERO_MATRIX:
        return kExitNumeric;
    case CENTRANK_E_IO:
        return kExitInput;
    default:
        return kExitUsage;
    }
}

[[noreturn]] void die(int code, const std::string &message) {
    std::cerr << "centrank: " << message << "\n";
    std::exit(code);
}

std::string slurp_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        die(kExitInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GraphHandle {
    centrank_graph *g = nullptr;
    ~GraphHandle() { centrank_graph_free(g); }
};

struct ScoresHandle {
    centrank_scores *s = nullptr;
    ~ScoresHandle() { centrank_scores_free(s); }
};

void load_graph(const std::string &path, const std::string &format, GraphHandle &out) {
    const std::string text = slurp_file(path);
    const centrank_status status =
        format == "matrix" ? centrank_graph_parse_matrix(text.c_str(), text.size(), &out.g)
                           : centrank_graph_parse_edge_list(text.c_str(), text.size(), &out.g);
    if (status != CENTRANK_OK)
        die(kExitInput, path + ": " + centrank_last_error());
}

void write_output(const std::string &data, const std::string &output) {
    if (output.empty() || output == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << data).flush())
        die(kExitInput, "cannot write '" + output + "'");
}

void check_status(centrank_status status, const std::string &context) {
    if (status != CENTRANK_OK)
        die(exit_code_for(status), context + ": " + centrank_last_error());
}

std::vector<int64_t> to_i64(const std::vector<int> &v) {
    return std::vector<int64_t>(v.begin(), v.end());
}

int suite_threads() {
    unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    if (const char *env = std::getenv("CENTRANK_THREADS")) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || cap < 1)
            die(kExitUsage, "CENTRANK_THREADS must be an integer >= 1");
        threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    }
    return static_cast<int>(threads);
}

// ---------------------------------------------------------------- centrality

int cmd_centrality(const std::string &input, const std::string &input_format,
                   const std::string &method, double damping, double tol, int max_iter,
                   const std::string &format, const std::string &output) {
    GraphHandle graph;
    load_graph(input, input_format, graph);

    ScoresHandle scores;
    centrank_status status = CENTRANK_OK;
    if (method == "degree-in" || method == "degree-out") {
        status = centrank_degree(graph.g,
                                 method == "degree-in" ? CENTRANK_DEGREE_IN : CENTRANK_DEGREE_OUT,
                                 &scores.s);
    } else {
        centrank_solver_config cfg;
        if (method == "pagerank")
            centrank_solver_config_pagerank_defaults(&cfg);
        else
            centrank_solver_config_eigenvector_defaults(&cfg);
        if (damping > 0)
            cfg.damping = damping;
        if (tol > 0)
            cfg.tolerance = tol;
        if (max_iter > 0)
            cfg.max_iterations = max_iter;
        status = method == "pagerank" ? centrank_pagerank(graph.g, &cfg, &scores.s)
                                      : centrank_eigenvector(graph.g, &cfg, &scores.s);
    }
    check_status(status, method);

    const int64_t n = centrank_scores_count(scores.s);
    const double *data = centrank_scores_data(scores.s);
    double lambda = 0;
    const bool has_lambda = centrank_scores_eigenvalue(scores.s, &lambda) == CENTRANK_OK;

    std::string out;
    if (format == "json") {
        out += "{\"method\":\"" + method + "\"";
        out += ",\"converged\":" + std::string(centrank_scores_converged(scores.s) ? "true" : "false");
        out += ",\"iterations\":" + std::to_string(centrank_scores_iterations(scores.s));
        out += ",\"residual\":" + g9(centrank_scores_residual(scores.s));
        if (has_lambda)
            out += ",\"lambda\":" + g9(lambda);
        out += ",\"scores\":[";
        for (int64_t i = 0; i < n; ++i)
            out += (i ? "," : "") + g9(data[i]);
        out += "]}\n";
    } else {
        out += "# method=" + method + "\n";
        out += "# converged=" + std::string(centrank_scores_converged(scores.s) ? "true" : "false") + "\n";
        out += "# iterations=" + std::to_string(centrank_scores_iterations(scores.s)) + "\n";
        out += "# residual=" + g9(centrank_scores_residual(scores.s)) + "\n";
        if (has_lambda)
            out += "# lambda=" + g9(lambda) + "\n";
        out += "vertex,score\n";
        for (int64_t i = 0; i < n; ++i)
            out += "v" + std::to_string(i + 1) + "," + g9(data[i]) + "\n";
    }
    write_output(out, output);
    return kExitOk;
}

// ------------------------------------------------------------------- compare

int cmd_compare(const std::string &input, const std::string &input_format, int top_k,
                const std::string &tie_mode, const std::string &format,
                const std::string &output) {
    GraphHandle graph;
    load_graph(input, input_format, graph);

    ScoresHandle pr;
    check_status(centrank_pagerank(graph.g, nullptr, &pr.s), "pagerank");

    // Both columns rank incoming endorsement: eigenvector runs on the
    // reversed graph, mirroring the experiment pipeline.
    GraphHandle reversed;
    check_status(centrank_graph_reversed(graph.g, &reversed.g), "reverse");
    ScoresHandle ev;
    check_status(centrank_eigenvector(reversed.g, nullptr, &ev.s), "eigenvector");

    const size_t n = static_cast<size_t>(centrank_scores_count(pr.s));
    const double *pr_data = centrank_scores_data(pr.s);
    const double *ev_data = centrank_scores_data(ev.s);

    const int mode = tie_mode == "paper-compat" ? CENTRANK_TIEMODE_COMPAT : CENTRANK_TIEMODE_DEFAULT;
    const int round_decimals = mode == CENTRANK_TIEMODE_COMPAT ? 4 : -1;

    centrank_comparison report;
    check_status(centrank_compare(pr_data, ev_data, n, top_k, mode, &report), "compare");

    std::vector<double> pr_ranks(n), ev_ranks(n);
    check_status(centrank_rank(pr_data, n, CENTRANK_TIE_COMPETITION, round_decimals, pr_ranks.data()),
                 "rank");
    check_status(centrank_rank(ev_data, n, CENTRANK_TIE_COMPETITION, round_decimals, ev_ranks.data()),
                 "rank");

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::pair(pr_ranks[a], a) < std::pair(pr_ranks[b], b);
    });

    std::string out;
    if (format == "json") {
        out += "{\"n\":" + std::to_string(report.n);
        out += ",\"spearman_rho\":" + g9(report.spearman_rho);
        out += ",\"pearson_r\":" + g9(report.pearson_r);
        if (report.significant >= 0) {
            out += ",\"critical_value\":" + g9(report.critical_value);
            out += ",\"critical_is_approximate\":" +
                   std::string(report.critical_is_approximate ? "true" : "false");
            out += ",\"significant\":" + std::string(report.significant ? "true" : "false");
        }
        out += ",\"top_k\":" + std::to_string(report.top_k);
        out += ",\"top_k_overlap\":" + g9(report.top_k_overlap);
        out += ",\"rows\":[";
        for (size_t i = 0; i < n; ++i) {
            const size_t v = order[i];
            if (i)
                out += ",";
            out += "{\"node\":" + std::to_string(v);
            out += ",\"pagerank\":" + g9(pr_data[v]);
            out += ",\"pr_rank\":" + g9(pr_ranks[v]);
            out += ",\"eigenvector\":" + g9(ev_data[v]);
            out += ",\"ev_rank\":" + g9(ev_ranks[v]) + "}";
        }
        out += "]}\n";
    } else {
        out += "vertex,pagerank,pr_rank,eigenvector,ev_rank\n";
        for (const size_t v : order) {
            out += "v" + std::to_string(v + 1) + "," + g9(pr_data[v]) + "," + g9(pr_ranks[v]) +
                   "," + g9(ev_data[v]) + "," + g9(ev_ranks[v]) + "\n";
        }
        out += "# n=" + std::to_string(report.n) + "\n";
        out += "# spearman_rho=" + g9(report.spearman_rho) + "\n";
        out += "# pearson_r=" + g9(report.pearson_r) + "\n";
        if (report.significant >= 0) {
            out += "# critical_value=" + g9(report.critical_value) + "\n";
            out += "# critical_value_approximate=" +
                   std::string(report.critical_is_approximate ? "true" : "false") + "\n";
            out += "# significant=" + std::string(report.significant ? "true" : "false") + "\n";
        }
        out += "# top_k=" + std::to_string(report.top_k) + "\n";
        out += "# top_k_overlap=" + g9(report.top_k_overlap) + "\n";
    }
    write_output(out, output);
    return kExitOk;
}

// --------------------------------------------------------------------- suite

int cmd_suite(const std::vector<int> &sizes, int trials, double density, uint64_t seed,
              const std::string &out_path) {
    centrank_suite_config cfg;
    centrank_suite_config_init(&cfg);
    const std::vector<int64_t> sizes64 = to_i64(sizes);
    if (!sizes64.empty()) {
        cfg.sizes = sizes64.data();
        cfg.size_count = sizes64.size();
    }
    cfg.trials_per_size = trials;
    cfg.density = density;
    cfg.base_seed = seed;
    cfg.threads = suite_threads();

    centrank_suite_report *report = nullptr;
    check_status(centrank_run_suite(&cfg, &report), "suite");

    for (size_t i = 0; i < centrank_suite_report_size_count(report); ++i) {
        centrank_suite_aggregate agg;
        centrank_suite_report_aggregate(report, i, &agg);
        std::cerr << "size " << agg.size << ": mean rho " << g9(agg.mean_rho) << " (min "
                  << g9(agg.min_rho) << ", max " << g9(agg.max_rho) << "), significance rate "
                  << g9(agg.significance_rate) << ", mean top-" << cfg.top_k << " overlap "
                  << g9(agg.mean_top_k_overlap) << ", failed " << agg.failed << "/" << agg.trials
                  << "\n";
    }

    char *json = nullptr;
    const centrank_status status = centrank_suite_report_json(report, &json);
    if (status != CENTRANK_OK) {
        centrank_suite_report_free(report);
        die(exit_code_for(status), centrank_last_error());
    }
    write_output(json, out_path);
    centrank_string_free(json);
    centrank_suite_report_free(report);
    return kExitOk;
}

// --------------------------------------------------------------------- bench

int cmd_bench(const std::vector<int> &sizes, double density, uint64_t seed, int reps,
              const std::string &out_path) {
    centrank_bench_config cfg;
    centrank_bench_config_init(&cfg);
    const std::vector<int64_t> sizes64 = to_i64(sizes);
    if (!sizes64.empty()) {
        cfg.sizes = sizes64.data();
        cfg.size_count = sizes64.size();
    }
    cfg.density = density;
    cfg.seed = seed;
    cfg.repetitions = reps;

    centrank_bench_report *report = nullptr;
    check_status(centrank_run_bench(&cfg, &report), "bench");

    for (size_t i = 0; i < centrank_bench_report_series_count(report); ++i) {
        centrank_bench_series series;
        centrank_bench_report_series(report, i, &series);
        std::cerr << series.method << "/" << series.representation;
        if (series.has_slopes)
            std::cerr << ": slope total " << g9(series.slope_total) << ", per-iteration "
                      << g9(series.slope_per_iteration) << "\n";
        else
            std::cerr << ": need >= 4 sizes for a slope fit\n";
    }

    char *csv = nullptr;
    const centrank_status status = centrank_bench_report_csv(report, &csv);
    if (status != CENTRANK_OK) {
        centrank_bench_report_free(report);
        die(exit_code_for(status), centrank_last_error());
    }
    write_output(csv, out_path);
    centrank_string_free(csv);
    centrank_bench_report_free(report);
    return kExitOk;
}

} // namespace

namespace {

int run_main(int argc, char **argv) {
    CLI::App app{"directed-graph centrality toolkit: PageRank, eigenvector centrality, "
                 "rank agreement statistics, experiment suites and benchmarks"};
    app.require_subcommand(1);

    // centrality
    std::string c_input, c_input_format = "edgelist", c_method, c_format = "csv", c_output;
    double c_damping = 0, c_tol = 0;
    int c_max_iter = 0;
    auto *centrality = app.add_subcommand("centrality", "Compute one centrality measure");
    centrality->add_option("--input", c_input, "graph file")->required();
    centrality->add_option("--input-format", c_input_format, "input format")
        ->check(CLI::IsMember({"edgelist", "matrix"}))
        ->capture_default_str();
    centrality->add_option("--method", c_method, "centrality measure")
        ->check(CLI::IsMember({"pagerank", "eigenvector", "degree-in", "degree-out"}))
        ->required();
    centrality->add_option("--damping", c_damping, "damping factor (default 0.85)");
    centrality->add_option("--tol", c_tol,
                           "convergence tolerance (default 1e-8 pagerank, 1e-10 eigenvector)");
    centrality->add_option("--max-iter", c_max_iter,
                           "iteration budget (default 200 pagerank, 1000 eigenvector)");
    centrality->add_option("--format", c_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    centrality->add_option("--output", c_output, "output path (default stdout)");

    // compare
    std::string p_input, p_input_format = "edgelist", p_tie_mode = "default", p_format = "csv",
                p_output;
    int p_top_k = 5;
    auto *compare = app.add_subcommand(
        "compare", "PageRank vs eigenvector centrality on one graph, with rank statistics");
    compare->add_option("--input", p_input, "graph file")->required();
    compare->add_option("--input-format", p_input_format, "input format")
        ->check(CLI::IsMember({"edgelist", "matrix"}))
        ->capture_default_str();
    compare->add_option("--top-k", p_top_k, "overlap set size")->capture_default_str();
    compare->add_option("--tie-mode", p_tie_mode,
                        "default: full-precision ranks, Pearson over ranks; paper-compat: "
                        "4-decimal rounding, classic d^2 formula")
        ->check(CLI::IsMember({"default", "paper-compat"}))
        ->capture_default_str();
    compare->add_option("--format", p_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    compare->add_option("--output", p_output, "output path (default stdout)");

    // suite
    std::vector<int> s_sizes = {21, 50, 100};
    int s_trials = 30;
    double s_density = 0.25;
    uint64_t s_seed = 97;
    std::string s_out;
    auto *suite = app.add_subcommand("suite", "Multi-trial random-graph comparison study (JSON)");
    suite->add_option("--sizes", s_sizes, "graph sizes")->delimiter(',')->capture_default_str();
    suite->add_option("--trials", s_trials, "trials per size")->capture_default_str();
    suite->add_option("--density", s_density, "edge probability")->capture_default_str();
    suite->add_option("--seed", s_seed, "base seed")->capture_default_str();
    suite->add_option("--out", s_out, "output path (default stdout)");

    // bench
    std::vector<int> b_sizes = {50, 100, 200, 400};
    double b_density = 0.25;
    uint64_t b_seed = 97;
    int b_reps = 5;
    std::string b_out;
    auto *bench = app.add_subcommand("bench", "Runtime scaling of the solvers (CSV)");
    bench->add_option("--sizes", b_sizes, "graph sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--density", b_density, "edge probability")->capture_default_str();
    bench->add_option("--seed", b_seed, "graph seed")->capture_default_str();
    bench->add_option("--reps", b_reps, "repetitions per measurement (>= 3)")
        ->capture_default_str();
    bench->add_option("--out", b_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "centrank: " << e.what() << "\n";
        return kExitUsage;
    }

    if (centrality->parsed())
        return cmd_centrality(c_input, c_input_format, c_method, c_damping, c_tol, c_max_iter,
                              c_format, c_output);
    if (compare->parsed()) {
        if (p_top_k < 1)
            die(kExitUsage, "--top-k must be >= 1");
        return cmd_compare(p_input, p_input_format, p_top_k, p_tie_mode, p_format, p_output);
    }
    if (suite->parsed()) {
        if (s_trials < 1)
            die(kExitUsage, "--trials must be >= 1");
        return cmd_suite(s_sizes, s_trials, s_density, s_seed, s_out);
    }
    if (bench->parsed())
        return cmd_bench(b_sizes, b_density, b_seed, b_reps, b_out);
    return kExitUsage;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception &e) {
        std::cerr << "centrank: " << e.what() << "\n";
        return kExitUsage;
    }
}
