#include "centrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace centrank {

const char *method_name(Method m) {
    switch (m) {
    case Method::pagerank: return "pagerank";
    case Method::eigenvector: return "eigenvector";
    case Method::degree_in: return "degree_in";
    case Method::degree_out: return "degree_out";
    }
    return "unknown";
}

namespace {

void check_config(const SolverConfig &cfg) {
    if (!(cfg.damping > 0.0 && cfg.damping < 1.0))
        throw Error(ErrorCode::invalid_argument, "damping must lie in (0, 1)");
    if (!(cfg.tolerance > 0.0))
        throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    if (cfg.max_iterations < 1)
        throw Error(ErrorCode::invalid_argument, "max_iterations must be >= 1");
}

[[noreturn]] void throw_non_convergence(const char *what, int iterations, double residual) {
    throw NonConvergenceError(std::string(what) + " did not converge after " +
                                  std::to_string(iterations) + " iterations (residual " +
                                  std::to_string(residual) + ")",
                              iterations, residual);
}

} // namespace

CentralityScores pagerank(const Graph &g, const SolverConfig &cfg) {
    check_config(cfg);
    const int n = g.node_count();
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "pagerank needs at least one node");

    std::vector<double> out_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out_degree[static_cast<std::size_t>(v)] = static_cast<double>(g.out_degree(v));

    const double d = cfg.damping;
    const double base = 1.0 - d;
    std::vector<double> pr(static_cast<std::size_t>(n), 1.0);
    std::vector<double> next(static_cast<std::size_t>(n));
    std::uint64_t visits = 0;
    double diff = 0.0;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        diff = 0.0;
        for (int a = 0; a < n; ++a) {
            double acc = 0.0;
            for (const auto &[b, w] : g.in_neighbors(a)) {
                acc += pr[static_cast<std::size_t>(b)] / out_degree[static_cast<std::size_t>(b)];
                ++visits;
            }
            const double value = base + d * acc;
            next[static_cast<std::size_t>(a)] = value;
            diff = std::max(diff, std::abs(value - pr[static_cast<std::size_t>(a)]));
        }
        pr.swap(next);
        if (diff <= cfg.tolerance) {
            CentralityScores out;
            out.method = Method::pagerank;
            out.scores = std::move(pr);
            out.iterations = iter;
            out.converged = true;
            out.residual = diff;
            out.edge_visits = visits;
            return out;
        }
    }
    throw_non_convergence("pagerank", cfg.max_iterations, diff);
}

CentralityScores pagerank_matrix(const AdjacencyMatrix &m, const SolverConfig &cfg) {
    check_config(cfg);
    const int n = m.order;
    if (n < 1 || m.entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error(ErrorCode::not_square, "matrix storage does not match declared order");

    // Unweighted semantics: only cell occupancy matters, so the iteration
    // scans a dense V x V presence image of the matrix (one pass builds it,
    // together with the out-degrees).
    std::vector<std::uint8_t> present(m.entries.size());
    std::vector<double> out_degree(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j) {
            const bool edge = m.at(i, j) != 0.0;
            present[static_cast<std::size_t>(i) * n + j] = edge;
            deg += edge;
        }
        out_degree[static_cast<std::size_t>(i)] = static_cast<double>(deg);
    }

    const double d = cfg.damping;
    const double base = 1.0 - d;
    std::vector<double> pr(static_cast<std::size_t>(n), 1.0);
    std::vector<double> next(static_cast<std::size_t>(n));
    std::uint64_t visits = 0;
    double diff = 0.0;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // Scatter row by row so the scan stays stride-1. Each target still
        // accumulates its in-neighbor terms in ascending source order, which
        // keeps the iterates bit-identical to the adjacency-list solver.
        std::fill(next.begin(), next.end(), 0.0);
        for (int b = 0; b < n; ++b) {
            const double deg = out_degree[static_cast<std::size_t>(b)];
            const double share = deg > 0.0 ? pr[static_cast<std::size_t>(b)] / deg : 0.0;
            const std::uint8_t *row = &present[static_cast<std::size_t>(b) * n];
            double *sink = next.data();
            // branchless: share * 0 contributes +0.0, which leaves the
            // accumulator bits untouched, so iterates still match the list
            // solver exactly
            for (int a = 0; a < n; ++a)
                sink[a] += share * row[a];
            visits += static_cast<std::uint64_t>(n);
        }
        diff = 0.0;
        for (int a = 0; a < n; ++a) {
            const double value = base + d * next[static_cast<std::size_t>(a)];
            next[static_cast<std::size_t>(a)] = value;
            diff = std::max(diff, std::abs(value - pr[static_cast<std::size_t>(a)]));
        }
        pr.swap(next);
        if (diff <= cfg.tolerance) {
            CentralityScores out;
            out.method = Method::pagerank;
            out.scores = std::move(pr);
            out.iterations = iter;
            out.converged = true;
            out.residual = diff;
            out.edge_visits = visits;
            return out;
        }
    }
    throw_non_convergence("pagerank_matrix", cfg.max_iterations, diff);
}

CentralityScores eigenvector_centrality(const Graph &g, const SolverConfig &cfg) {
    check_config(cfg);
    const int n = g.node_count();
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "eigenvector centrality needs at least one node");
    if (g.edge_count() == 0)
        throw Error(ErrorCode::zero_matrix, "graph has no edges, adjacency matrix is zero");

    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    std::uint64_t visits = 0;
    double rayleigh = 0.0;
    double diff = 0.0;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // y = (A + I) x; accumulate the Rayleigh quotient x.(A+I)x on the fly.
        rayleigh = 0.0;
        double norm_sq = 0.0;
        for (int k = 0; k < n; ++k) {
            double acc = x[static_cast<std::size_t>(k)];
            for (const auto &[l, w] : g.out_neighbors(k)) {
                acc += w * x[static_cast<std::size_t>(l)];
                ++visits;
            }
            y[static_cast<std::size_t>(k)] = acc;
            rayleigh += x[static_cast<std::size_t>(k)] * acc;
            norm_sq += acc * acc;
        }
        const double inv_norm = 1.0 / std::sqrt(norm_sq);
        diff = 0.0;
        for (int k = 0; k < n; ++k) {
            y[static_cast<std::size_t>(k)] *= inv_norm;
            diff = std::max(diff, std::abs(y[static_cast<std::size_t>(k)] -
                                           x[static_cast<std::size_t>(k)]));
        }
        x.swap(y);
        if (diff <= cfg.tolerance) {
            if (*std::max_element(x.begin(), x.end()) <= 0.0)
                for (double &v : x)
                    v = -v;
            CentralityScores out;
            out.method = Method::eigenvector;
            out.scores = std::move(x);
            out.dominant_eigenvalue = rayleigh - 1.0;
            out.iterations = iter;
            out.converged = true;
            out.residual = diff;
            out.edge_visits = visits;
            return out;
        }
    }
    throw_non_convergence("eigenvector power iteration", cfg.max_iterations, diff);
}

CentralityScores degree_centrality(const Graph &g, DegreeMode mode) {
    const int n = g.node_count();
    CentralityScores out;
    out.method = mode == DegreeMode::in ? Method::degree_in : Method::degree_out;
    out.scores.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out.scores[static_cast<std::size_t>(v)] =
            static_cast<double>(mode == DegreeMode::in ? g.in_degree(v) : g.out_degree(v));
    out.converged = true;
    return out;
}

} // namespace centrank
