#include "centrank/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace centrank {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

template <typename F>
double time_ms(F &&f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string vertex_label(int node) { return "v" + std::to_string(node + 1); }

const char *bool_str(bool b) { return b ? "true" : "false"; }

void append_trial_report_comments(std::string &out, const TrialResult &t) {
    if (!t.ok) {
        out += "# failure=" + t.failure + "\n";
        return;
    }
    const CorrelationReport &r = t.report;
    out += "# n=" + std::to_string(r.n) + "\n";
    out += "# spearman_rho=" + g9(r.spearman_rho) + "\n";
    out += "# pearson_r=" + g9(r.pearson_r) + "\n";
    if (r.critical_value) {
        out += "# critical_value=" + g9(*r.critical_value) + "\n";
        out += "# critical_value_approximate=" + std::string(bool_str(r.critical_is_approximate)) + "\n";
        out += "# significant=" + std::string(bool_str(*r.significant)) + "\n";
    }
    out += "# top_k=" + std::to_string(r.top_k) + "\n";
    out += "# top_k_overlap=" + g9(r.top_k_overlap) + "\n";
}

void append_trial_json(std::string &out, const TrialResult &t, bool with_timings) {
    out += "{\"size\":" + std::to_string(t.size);
    out += ",\"trial_index\":" + std::to_string(t.trial_index);
    out += ",\"seed\":" + std::to_string(t.seed_used);
    out += ",\"ok\":" + std::string(bool_str(t.ok));
    if (t.ok) {
        const CorrelationReport &r = t.report;
        out += ",\"n\":" + std::to_string(r.n);
        out += ",\"spearman_rho\":" + g9(r.spearman_rho);
        out += ",\"pearson_r\":" + g9(r.pearson_r);
        if (r.critical_value) {
            out += ",\"critical_value\":" + g9(*r.critical_value);
            out += ",\"critical_is_approximate\":" + std::string(bool_str(r.critical_is_approximate));
            out += ",\"significant\":" + std::string(bool_str(*r.significant));
        }
        out += ",\"top_k\":" + std::to_string(r.top_k);
        out += ",\"top_k_overlap\":" + g9(r.top_k_overlap);
    } else {
        out += ",\"failure\":" + nlohmann::json(t.failure).dump();
    }
    out += ",\"pagerank_iterations\":" + std::to_string(t.pagerank_iterations);
    out += ",\"eigenvector_iterations\":" + std::to_string(t.eigenvector_iterations);
    if (with_timings) {
        out += ",\"pagerank_ms\":" + g9(t.pagerank_ms);
        out += ",\"eigenvector_ms\":" + g9(t.eigenvector_ms);
    }
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const TrialRow &row = t.rows[i];
        if (i)
            out += ",";
        out += "{\"node\":" + std::to_string(row.node);
        out += ",\"pagerank\":" + g9(row.pagerank);
        out += ",\"pr_rank\":" + g9(row.pr_rank);
        out += ",\"eigenvector\":" + g9(row.eigenvector);
        out += ",\"ev_rank\":" + g9(row.ev_rank);
        out += "}";
    }
    out += "]}";
}

} // namespace

const char *representation_name(Representation r) {
    return r == Representation::list ? "list" : "matrix";
}

std::uint64_t derive_trial_seed(std::uint64_t base_seed, int size, int trial_index) {
    return base_seed ^ splitmix64(splitmix64(static_cast<std::uint64_t>(size)) ^
                                  static_cast<std::uint64_t>(trial_index));
}

TrialResult run_trial(int size, double density, std::uint64_t seed, const Solvers &solvers,
                      int top_k) {
    if (size < 4)
        throw Error(ErrorCode::invalid_argument, "trial size must be >= 4");
    if (top_k < 1)
        throw Error(ErrorCode::invalid_k, "top_k must be >= 1");

    TrialResult t;
    t.size = size;
    t.seed_used = seed;

    const Graph g = random_digraph(size, density, seed, /*ensure_out_degree=*/true);
    const Graph g_rev = g.reversed();

    CentralityScores pr, ev;
    try {
        t.pagerank_ms = time_ms([&] { pr = pagerank(g, solvers.pagerank); });
        t.eigenvector_ms = time_ms([&] { ev = eigenvector_centrality(g_rev, solvers.eigenvector); });
    } catch (const NonConvergenceError &e) {
        t.ok = false;
        t.failure = e.what();
        t.failure_code = ErrorCode::non_convergence;
        return t;
    }
    t.pagerank_iterations = pr.iterations;
    t.eigenvector_iterations = ev.iterations;

    const Ranking pr_ranks = rank_scores(pr.scores, TiePolicy::competition);
    const Ranking ev_ranks = rank_scores(ev.scores, TiePolicy::competition);
    t.rows.resize(static_cast<std::size_t>(size));
    for (int v = 0; v < size; ++v) {
        TrialRow &row = t.rows[static_cast<std::size_t>(v)];
        row.node = v;
        row.pagerank = pr.scores[static_cast<std::size_t>(v)];
        row.pr_rank = pr_ranks.ranks[static_cast<std::size_t>(v)];
        row.eigenvector = ev.scores[static_cast<std::size_t>(v)];
        row.ev_rank = ev_ranks.ranks[static_cast<std::size_t>(v)];
    }
    std::sort(t.rows.begin(), t.rows.end(), [](const TrialRow &a, const TrialRow &b) {
        return std::pair(a.pr_rank, a.node) < std::pair(b.pr_rank, b.node);
    });

    try {
        t.report = compare(pr, ev, std::min(top_k, size));
        t.ok = true;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::degenerate_ranking && e.code() != ErrorCode::zero_variance)
            throw;
        t.ok = false;
        t.failure = e.what();
        t.failure_code = e.code();
    }
    return t;
}

SuiteReport run_suite(const SuiteConfig &cfg) {
    if (cfg.sizes.empty())
        throw Error(ErrorCode::invalid_argument, "suite needs at least one size");
    for (int s : cfg.sizes)
        if (s < 4)
            throw Error(ErrorCode::invalid_argument, "suite sizes must be >= 4");
    if (cfg.trials_per_size < 1)
        throw Error(ErrorCode::invalid_argument, "trials_per_size must be >= 1");
    if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
        throw Error(ErrorCode::invalid_probability, "density must lie in [0, 1]");
    if (cfg.top_k < 1)
        throw Error(ErrorCode::invalid_k, "top_k must be >= 1");

    struct Job {
        int size;
        int trial_index;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    jobs.reserve(cfg.sizes.size() * static_cast<std::size_t>(cfg.trials_per_size));
    for (int size : cfg.sizes)
        for (int i = 0; i < cfg.trials_per_size; ++i)
            jobs.push_back({size, i, derive_trial_seed(cfg.base_seed, size, i)});

    std::vector<TrialResult> results(jobs.size());
    auto run_job = [&](std::size_t j) {
        results[j] = run_trial(jobs[j].size, cfg.density, jobs[j].seed, cfg.solvers, cfg.top_k);
        results[j].trial_index = jobs[j].trial_index;
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || jobs.size() < 2) {
        for (std::size_t j = 0; j < jobs.size(); ++j)
            run_job(j);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), jobs.size());
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1))
                    run_job(j);
            });
        for (std::thread &th : pool)
            th.join();
    }

    SuiteReport report;
    report.config = cfg;
    report.trials = std::move(results);
    for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
        SizeAggregate agg;
        agg.size = cfg.sizes[si];
        agg.trials = cfg.trials_per_size;
        double sum_rho = 0.0, sum_overlap = 0.0;
        int ok_count = 0, significant_count = 0;
        double min_rho = 0.0, max_rho = 0.0;
        for (int i = 0; i < cfg.trials_per_size; ++i) {
            const TrialResult &t =
                report.trials[si * static_cast<std::size_t>(cfg.trials_per_size) +
                              static_cast<std::size_t>(i)];
            if (!t.ok) {
                ++agg.failed;
                continue;
            }
            const double rho = t.report.spearman_rho;
            if (ok_count == 0) {
                min_rho = max_rho = rho;
            } else {
                min_rho = std::min(min_rho, rho);
                max_rho = std::max(max_rho, rho);
            }
            ++ok_count;
            sum_rho += rho;
            sum_overlap += t.report.top_k_overlap;
            if (t.report.significant && *t.report.significant)
                ++significant_count;
        }
        if (ok_count > 0) {
            agg.mean_rho = sum_rho / ok_count;
            agg.mean_top_k_overlap = sum_overlap / ok_count;
            agg.significance_rate = static_cast<double>(significant_count) / ok_count;
            agg.min_rho = min_rho;
            agg.max_rho = max_rho;
        }
        report.aggregates.push_back(agg);
    }
    return report;
}

std::vector<std::pair<double, double>> scatter_data(const CentralityScores &a,
                                                    const CentralityScores &b) {
    if (a.scores.size() != b.scores.size())
        throw Error(ErrorCode::length_mismatch,
                    "score vectors have different lengths (" + std::to_string(a.scores.size()) +
                        " vs " + std::to_string(b.scores.size()) + ")");
    std::vector<std::pair<double, double>> points;
    points.reserve(a.scores.size());
    for (std::size_t i = 0; i < a.scores.size(); ++i)
        points.emplace_back(a.scores[i], b.scores[i]);
    std::sort(points.begin(), points.end());
    return points;
}

BenchReport run_bench(const BenchConfig &cfg) {
    if (cfg.repetitions < 3)
        throw Error(ErrorCode::invalid_argument, "bench needs repetitions >= 3");
    if (cfg.sizes.empty())
        throw Error(ErrorCode::invalid_argument, "bench needs at least one size");
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] < 2)
            throw Error(ErrorCode::invalid_argument, "bench sizes must be >= 2");
        if (i > 0 && cfg.sizes[i] <= cfg.sizes[i - 1])
            throw Error(ErrorCode::invalid_argument, "bench sizes must be strictly increasing");
    }

    BenchReport report;
    report.config = cfg;

    struct SeriesKey {
        Method method;
        Representation repr;
    };
    const SeriesKey series_keys[] = {
        {Method::pagerank, Representation::list},
        {Method::pagerank, Representation::matrix},
        {Method::eigenvector, Representation::list},
    };

    for (int size : cfg.sizes) {
        const std::uint64_t seed = derive_trial_seed(cfg.seed, size, 0);
        const Graph g = random_digraph(size, cfg.density, seed, /*ensure_out_degree=*/true);
        const AdjacencyMatrix m = to_adjacency_matrix(g);

        CentralityScores res[3];
        std::vector<double> times[3];
        // untimed warmup: pages, caches, clock ramp
        res[0] = pagerank(g);
        res[1] = pagerank_matrix(m);
        res[2] = eigenvector_centrality(g);
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            times[0].push_back(time_ms([&] { res[0] = pagerank(g); }));
            times[1].push_back(time_ms([&] { res[1] = pagerank_matrix(m); }));
            times[2].push_back(time_ms([&] { res[2] = eigenvector_centrality(g); }));
        }
        for (int s = 0; s < 3; ++s) {
            BenchRow row;
            row.size = size;
            row.method = series_keys[s].method;
            row.representation = series_keys[s].repr;
            row.median_ms = median(times[s]);
            row.iterations = res[s].iterations;
            // One repetition's worth of work; the counter restarts per call.
            row.edge_visits = res[s].edge_visits;
            row.edge_count = g.edge_count();
            report.rows.push_back(row);
        }
    }

    for (const SeriesKey &key : series_keys) {
        BenchSeries series;
        series.method = key.method;
        series.representation = key.repr;
        if (cfg.sizes.size() >= 4) {
            std::vector<double> log_size, log_time, log_per_iter;
            for (const BenchRow &row : report.rows) {
                if (row.method != key.method || row.representation != key.repr)
                    continue;
                const double t = std::max(row.median_ms, 1e-6);
                log_size.push_back(std::log(static_cast<double>(row.size)));
                log_time.push_back(std::log(t));
                log_per_iter.push_back(std::log(t / std::max(row.iterations, 1)));
            }
            series.has_slopes = true;
            series.slope_total = fit_slope(log_size, log_time);
            series.slope_per_iter = fit_slope(log_size, log_per_iter);
        }
        report.series.push_back(series);
    }
    return report;
}

std::string to_csv(const TrialResult &trial) {
    std::string out = "vertex,pagerank,pr_rank,eigenvector,ev_rank\n";
    for (const TrialRow &row : trial.rows) {
        out += vertex_label(row.node) + "," + g9(row.pagerank) + "," + g9(row.pr_rank) + "," +
               g9(row.eigenvector) + "," + g9(row.ev_rank) + "\n";
    }
    append_trial_report_comments(out, trial);
    return out;
}

std::string to_json(const TrialResult &trial) {
    std::string out;
    append_trial_json(out, trial, /*with_timings=*/true);
    out += "\n";
    return out;
}

std::string to_csv(const SuiteReport &report) {
    std::string out = "# centrank suite report\n";
    for (const SizeAggregate &a : report.aggregates) {
        out += "# aggregate size=" + std::to_string(a.size) + " trials=" + std::to_string(a.trials) +
               " failed=" + std::to_string(a.failed) + " mean_rho=" + g9(a.mean_rho) +
               " min_rho=" + g9(a.min_rho) + " max_rho=" + g9(a.max_rho) +
               " significance_rate=" + g9(a.significance_rate) +
               " mean_top_k_overlap=" + g9(a.mean_top_k_overlap) + "\n";
    }
    out += "size,trial_index,seed,ok,spearman_rho,pearson_r,critical_value,significant,"
           "top_k_overlap,pagerank_iterations,eigenvector_iterations\n";
    for (const TrialResult &t : report.trials) {
        out += std::to_string(t.size) + "," + std::to_string(t.trial_index) + "," +
               std::to_string(t.seed_used) + "," + bool_str(t.ok) + ",";
        if (t.ok) {
            out += g9(t.report.spearman_rho) + "," + g9(t.report.pearson_r) + ",";
            out += t.report.critical_value ? g9(*t.report.critical_value) : std::string();
            out += ",";
            out += t.report.significant ? bool_str(*t.report.significant) : "";
            out += "," + g9(t.report.top_k_overlap);
        } else {
            out += ",,,,";
        }
        out += "," + std::to_string(t.pagerank_iterations) + "," +
               std::to_string(t.eigenvector_iterations) + "\n";
    }
    return out;
}

std::string to_json(const SuiteReport &report) {
    const SuiteConfig &cfg = report.config;
    std::string out = "{\"schema_version\":1,\"config\":{";
    out += "\"sizes\":[";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
        out += (i ? "," : "") + std::to_string(cfg.sizes[i]);
    out += "],\"trials_per_size\":" + std::to_string(cfg.trials_per_size);
    out += ",\"density\":" + g9(cfg.density);
    out += ",\"base_seed\":" + std::to_string(cfg.base_seed);
    out += ",\"top_k\":" + std::to_string(cfg.top_k);
    out += ",\"damping\":" + g9(cfg.solvers.pagerank.damping);
    out += ",\"pagerank_tolerance\":" + g9(cfg.solvers.pagerank.tolerance);
    out += ",\"pagerank_max_iterations\":" + std::to_string(cfg.solvers.pagerank.max_iterations);
    out += ",\"eigenvector_tolerance\":" + g9(cfg.solvers.eigenvector.tolerance);
    out += ",\"eigenvector_max_iterations\":" +
           std::to_string(cfg.solvers.eigenvector.max_iterations);
    out += ",\"ensure_out_degree\":true}";
    out += ",\"aggregates\":[";
    for (std::size_t i = 0; i < report.aggregates.size(); ++i) {
        const SizeAggregate &a = report.aggregates[i];
        if (i)
            out += ",";
        out += "{\"size\":" + std::to_string(a.size);
        out += ",\"trials\":" + std::to_string(a.trials);
        out += ",\"failed\":" + std::to_string(a.failed);
        out += ",\"mean_rho\":" + g9(a.mean_rho);
        out += ",\"min_rho\":" + g9(a.min_rho);
        out += ",\"max_rho\":" + g9(a.max_rho);
        out += ",\"significance_rate\":" + g9(a.significance_rate);
        out += ",\"mean_top_k_overlap\":" + g9(a.mean_top_k_overlap) + "}";
    }
    out += "],\"trials\":[";
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        if (i)
            out += ",";
        append_trial_json(out, report.trials[i], /*with_timings=*/false);
    }
    out += "]}\n";
    return out;
}

std::string to_csv(const BenchReport &report) {
    std::string out = "size,method,representation,median_ms,iterations,edge_visits,edges\n";
    for (const BenchRow &row : report.rows) {
        out += std::to_string(row.size) + "," + method_name(row.method) + "," +
               representation_name(row.representation) + "," + g9(row.median_ms) + "," +
               std::to_string(row.iterations) + "," + std::to_string(row.edge_visits) + "," +
               std::to_string(row.edge_count) + "\n";
    }
    for (const BenchSeries &s : report.series) {
        if (!s.has_slopes)
            continue;
        out += std::string("# slope method=") + method_name(s.method) +
               " representation=" + representation_name(s.representation) +
               " total=" + g9(s.slope_total) + " per_iteration=" + g9(s.slope_per_iter) + "\n";
    }
    return out;
}

std::string to_json(const BenchReport &report) {
    const BenchConfig &cfg = report.config;
    std::string out = "{\"schema_version\":1,\"config\":{\"sizes\":[";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
        out += (i ? "," : "") + std::to_string(cfg.sizes[i]);
    out += "],\"density\":" + g9(cfg.density);
    out += ",\"seed\":" + std::to_string(cfg.seed);
    out += ",\"repetitions\":" + std::to_string(cfg.repetitions) + "}";
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const BenchRow &row = report.rows[i];
        if (i)
            out += ",";
        out += "{\"size\":" + std::to_string(row.size);
        out += std::string(",\"method\":\"") + method_name(row.method) + "\"";
        out += std::string(",\"representation\":\"") + representation_name(row.representation) + "\"";
        out += ",\"median_ms\":" + g9(row.median_ms);
        out += ",\"iterations\":" + std::to_string(row.iterations);
        out += ",\"edge_visits\":" + std::to_string(row.edge_visits);
        out += ",\"edges\":" + std::to_string(row.edge_count) + "}";
    }
    out += "],\"series\":[";
    for (std::size_t i = 0; i < report.series.size(); ++i) {
        const BenchSeries &s = report.series[i];
        if (i)
            out += ",";
        out += std::string("{\"method\":\"") + method_name(s.method) + "\"";
        out += std::string(",\"representation\":\"") + representation_name(s.representation) + "\"";
        if (s.has_slopes) {
            out += ",\"slope_total\":" + g9(s.slope_total);
            out += ",\"slope_per_iteration\":" + g9(s.slope_per_iter);
        }
        out += "}";
    }
    out += "]}\n";
    return out;
}

SuiteReport suite_report_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::parse, std::string("suite report JSON: ") + e.what());
    }
    try {
        SuiteReport report;
        const auto &jc = j.at("config");
        report.config.sizes = jc.at("sizes").get<std::vector<int>>();
        report.config.trials_per_size = jc.at("trials_per_size").get<int>();
        report.config.density = jc.at("density").get<double>();
        report.config.base_seed = jc.at("base_seed").get<std::uint64_t>();
        report.config.top_k = jc.at("top_k").get<int>();
        report.config.solvers.pagerank.damping = jc.at("damping").get<double>();
        report.config.solvers.eigenvector.damping = report.config.solvers.pagerank.damping;
        report.config.solvers.pagerank.tolerance = jc.at("pagerank_tolerance").get<double>();
        report.config.solvers.pagerank.max_iterations = jc.at("pagerank_max_iterations").get<int>();
        report.config.solvers.eigenvector.tolerance = jc.at("eigenvector_tolerance").get<double>();
        report.config.solvers.eigenvector.max_iterations =
            jc.at("eigenvector_max_iterations").get<int>();
        for (const auto &ja : j.at("aggregates")) {
            SizeAggregate a;
            a.size = ja.at("size").get<int>();
            a.trials = ja.at("trials").get<int>();
            a.failed = ja.at("failed").get<int>();
            a.mean_rho = ja.at("mean_rho").get<double>();
            a.min_rho = ja.at("min_rho").get<double>();
            a.max_rho = ja.at("max_rho").get<double>();
            a.significance_rate = ja.at("significance_rate").get<double>();
            a.mean_top_k_overlap = ja.at("mean_top_k_overlap").get<double>();
            report.aggregates.push_back(a);
        }
        for (const auto &jt : j.at("trials")) {
            TrialResult t;
            t.size = jt.at("size").get<int>();
            t.trial_index = jt.at("trial_index").get<int>();
            t.seed_used = jt.at("seed").get<std::uint64_t>();
            t.ok = jt.at("ok").get<bool>();
            if (t.ok) {
                t.report.n = jt.at("n").get<int>();
                t.report.spearman_rho = jt.at("spearman_rho").get<double>();
                t.report.pearson_r = jt.at("pearson_r").get<double>();
                if (jt.contains("critical_value")) {
                    t.report.critical_value = jt.at("critical_value").get<double>();
                    t.report.critical_is_approximate = jt.at("critical_is_approximate").get<bool>();
                    t.report.significant = jt.at("significant").get<bool>();
                }
                t.report.top_k = jt.at("top_k").get<int>();
                t.report.top_k_overlap = jt.at("top_k_overlap").get<double>();
            } else {
                t.failure = jt.at("failure").get<std::string>();
            }
            t.pagerank_iterations = jt.at("pagerank_iterations").get<int>();
            t.eigenvector_iterations = jt.at("eigenvector_iterations").get<int>();
            for (const auto &jr : jt.at("rows")) {
                TrialRow row;
                row.node = jr.at("node").get<int>();
                row.pagerank = jr.at("pagerank").get<double>();
                row.pr_rank = jr.at("pr_rank").get<double>();
                row.eigenvector = jr.at("eigenvector").get<double>();
                row.ev_rank = jr.at("ev_rank").get<double>();
                t.rows.push_back(row);
            }
            report.trials.push_back(std::move(t));
        }
        return report;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::parse, std::string("suite report JSON: ") + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush())
        throw Error(ErrorCode::io, "failed writing '" + path + "'");
}

} // namespace centrank
