#ifndef CENTRANK_EXPERIMENTS_HPP_
#define CENTRANK_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "centrank/rankstats.hpp"

namespace centrank {

struct Solvers {
    SolverConfig pagerank = SolverConfig::pagerank_defaults();
    SolverConfig eigenvector = SolverConfig::eigenvector_defaults();
};

struct SuiteConfig {
    std::vector<int> sizes = {21, 50, 100};
    int trials_per_size = 30;
    double density = 0.25;
    std::uint64_t base_seed = 97;
    Solvers solvers;
    int top_k = 5;
    // Execution policy only: the report is identical for any thread count.
    int threads = 1;
};

struct TrialRow {
    int node = 0; // 0-based id
    double pagerank = 0.0;
    double pr_rank = 0.0;
    double eigenvector = 0.0;
    double ev_rank = 0.0;
};

struct TrialResult {
    int size = 0;
    int trial_index = 0;
    std::uint64_t seed_used = 0;
    bool ok = false;
    std::string failure; // set when !ok (non-convergence, degenerate ranking)
    std::optional<ErrorCode> failure_code;
    CorrelationReport report;
    std::vector<TrialRow> rows; // sorted by pagerank rank ascending
    int pagerank_iterations = 0;
    int eigenvector_iterations = 0;
    double pagerank_ms = 0.0;   // wall clock, not serialized into suite reports
    double eigenvector_ms = 0.0;
};

struct SizeAggregate {
    int size = 0;
    int trials = 0;
    int failed = 0;
    double mean_rho = 0.0;
    double min_rho = 0.0;
    double max_rho = 0.0;
    double significance_rate = 0.0;
    double mean_top_k_overlap = 0.0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<SizeAggregate> aggregates;
    std::vector<TrialResult> trials;
};

// Seed for trial `trial_index` of size `size`: a splitmix64-mixed hash of
// (size, trial_index) xored onto base_seed, so adding sizes or trials never
// reshuffles existing ones.
std::uint64_t derive_trial_seed(std::uint64_t base_seed, int size, int trial_index);

// One generated graph, both centralities, ranks, and the comparison.
// PageRank follows in-links by definition; the eigenvector side is computed
// on the reversed graph so both measures score incoming endorsement, which
// is the comparison the rank tables make. Non-convergence and degenerate
// rankings come back as failed trials, not exceptions.
TrialResult run_trial(int size, double density, std::uint64_t seed, const Solvers &solvers,
                      int top_k);

// Full study: trials_per_size trials at every size, aggregated per size.
// Deterministic for a fixed config regardless of thread count.
SuiteReport run_suite(const SuiteConfig &cfg);

// Paired (score_a, score_b) points sorted by score_a, for scatter plots.
std::vector<std::pair<double, double>> scatter_data(const CentralityScores &a,
                                                    const CentralityScores &b);

enum class Representation { list, matrix };

const char *representation_name(Representation r);

struct BenchConfig {
    std::vector<int> sizes = {50, 100, 200, 400};
    double density = 0.25;
    std::uint64_t seed = 97;
    int repetitions = 5;
};

struct BenchRow {
    int size = 0;
    Method method = Method::pagerank;
    Representation representation = Representation::list;
    double median_ms = 0.0;
    int iterations = 0;
    std::uint64_t edge_visits = 0;
    std::size_t edge_count = 0;
};

struct BenchSeries {
    Method method = Method::pagerank;
    Representation representation = Representation::list;
    bool has_slopes = false; // requires >= 4 sizes
    double slope_total = 0.0;    // log median time vs log size
    double slope_per_iter = 0.0; // log (median time / iterations) vs log size
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
    std::vector<BenchSeries> series;
};

// Times pagerank (list), pagerank (dense matrix) and eigenvector centrality
// on identical seeded graphs, reporting medians over the repetitions plus
// iteration and edge-visit counts so per-iteration cost is separable from
// iteration count. Slopes are measured, never asserted.
BenchReport run_bench(const BenchConfig &cfg);

// Report serialization. Floating-point values are written with 9 significant
// digits; JSON key order is fixed, so equal reports serialize byte-identically.
std::string to_csv(const TrialResult &trial);
std::string to_json(const TrialResult &trial);
std::string to_csv(const SuiteReport &report);
std::string to_json(const SuiteReport &report);
std::string to_csv(const BenchReport &report);
std::string to_json(const BenchReport &report);

// Inverse of to_json(SuiteReport); parse-then-serialize is byte-identical.
SuiteReport suite_report_from_json(const std::string &text);

void write_text_file(const std::string &path, const std::string &content);

} // namespace centrank

#endif // CENTRANK_EXPERIMENTS_HPP_
