#ifndef CENTRANK_CENTRALITY_HPP_
#define CENTRANK_CENTRALITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "centrank/graph.hpp"

namespace centrank {

enum class Method { pagerank, eigenvector, degree_in, degree_out };

const char *method_name(Method m);

struct SolverConfig {
    double damping = 0.85;
    double tolerance = 1e-8;
    int max_iterations = 200;

    static SolverConfig pagerank_defaults() { return {0.85, 1e-8, 200}; }
    static SolverConfig eigenvector_defaults() { return {0.85, 1e-10, 1000}; }
};

struct CentralityScores {
    Method method = Method::pagerank;
    std::vector<double> scores;
    std::optional<double> dominant_eigenvalue; // present iff method == eigenvector
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;
    // Work instrumentation. List-based solvers count one unit per edge touched
    // per iteration (== iterations * E); the dense solver counts cells scanned
    // (== iterations * V^2).
    std::uint64_t edge_visits = 0;
};

// Fixed point PR_a = (1-d) + d * sum over in-neighbors b of PR_b / outdeg(b),
// iterated synchronously from PR = 1 until the max-norm step falls below
// tolerance. Nodes without out-edges donate nothing (they appear in no
// in-neighbor list), so the total sinks below V when such nodes exist; on
// graphs without them the scores sum to V. Out-degrees are plain edge counts,
// edge weights do not enter. Throws NonConvergenceError when the iteration
// budget runs out.
CentralityScores pagerank(const Graph &g, const SolverConfig &cfg = SolverConfig::pagerank_defaults());

// Same contract as pagerank, but each iteration scans the full V x V matrix.
// Exists so the per-iteration cost of the dense representation can be
// measured against the adjacency-list implementation.
CentralityScores pagerank_matrix(const AdjacencyMatrix &m,
                                 const SolverConfig &cfg = SolverConfig::pagerank_defaults());

// Right dominant eigenvector of the adjacency matrix (row = source), computed
// by power iteration on (A + I). The shift leaves eigenvectors untouched,
// moves every eigenvalue by +1, and makes the Perron root strictly dominant
// for irreducible matrices, so pure cycles converge too. Reported eigenvalue
// is the converged Rayleigh quotient minus the shift. Scores carry unit
// Euclidean norm and nonnegative orientation; the start vector is uniform.
CentralityScores eigenvector_centrality(const Graph &g,
                                        const SolverConfig &cfg = SolverConfig::eigenvector_defaults());

enum class DegreeMode { in, out };

CentralityScores degree_centrality(const Graph &g, DegreeMode mode);

} // namespace centrank

#endif // CENTRANK_CENTRALITY_HPP_
