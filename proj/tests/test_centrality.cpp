#include <doctest.h>

#include <cmath>

#include "centrank/centrality.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace centrank;

namespace {

AdjacencyMatrix seven_node_matrix() {
    AdjacencyMatrix m;
    m.order = fixtures::kSevenNodeOrder;
    for (const auto &row : fixtures::kSevenNodeMatrix)
        m.entries.insert(m.entries.end(), row, row + 7);
    return m;
}

Graph complete_digraph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                edges.push_back({i, j});
    return build_graph(n, edges);
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

// One synchronous update of the fixed point; returns the largest change.
double pagerank_update_residual(const Graph &g, const std::vector<double> &pr, double d) {
    double residual = 0.0;
    for (int a = 0; a < g.node_count(); ++a) {
        double acc = 0.0;
        for (const auto &[b, w] : g.in_neighbors(a))
            acc += pr[static_cast<std::size_t>(b)] / g.out_degree(b);
        residual = std::max(residual, std::abs((1.0 - d) + d * acc - pr[static_cast<std::size_t>(a)]));
    }
    return residual;
}

} // namespace

TEST_CASE("pagerank on symmetric graphs") {
    SUBCASE("two-node cycle") {
        const auto res = pagerank(build_graph(2, {{0, 1}, {1, 0}}));
        CHECK(res.converged);
        CHECK(res.scores[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(res.scores[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("complete digraph on three nodes") {
        const auto res = pagerank(complete_digraph(3));
        for (const double s : res.scores)
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pagerank on the seven-node example") {
    const Graph g = from_adjacency_matrix(seven_node_matrix());
    const auto res = pagerank(g);
    CHECK(res.converged);

    double sum = 0.0;
    for (const double s : res.scores) {
        CHECK(s >= 0.15 - 1e-12);
        sum += s;
    }
    CHECK(sum == doctest::Approx(7.0).epsilon(1e-7)); // no sinks, so mass is conserved
    CHECK(pagerank_update_residual(g, res.scores, 0.85) <= 1e-8);

    const auto expect = oracles::pagerank_fixed_point(seven_node_matrix());
    CHECK(max_abs_diff(res.scores, expect) < 1e-7);
}

TEST_CASE("pagerank mass stays below V with a sink") {
    // node 2 has no out-edges and donates nothing
    const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
    const auto res = pagerank(g);
    double sum = 0.0;
    for (const double s : res.scores) {
        CHECK(s >= 0.15 - 1e-12);
        sum += s;
    }
    CHECK(sum < 3.0 - 0.1);
}

TEST_CASE("list and matrix pagerank agree") {
    SUBCASE("two-node cycle") {
        const auto res = pagerank_matrix(to_adjacency_matrix(build_graph(2, {{0, 1}, {1, 0}})));
        CHECK(res.scores[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("seven-node example") {
        const Graph g = from_adjacency_matrix(seven_node_matrix());
        const auto list_res = pagerank(g);
        const auto dense_res = pagerank_matrix(to_adjacency_matrix(g));
        CHECK(list_res.iterations == dense_res.iterations);
        CHECK(max_abs_diff(list_res.scores, dense_res.scores) <= 1e-10);
    }
    SUBCASE("seeded random graphs") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const int n = 5 + static_cast<int>(seed) * 2;
            const Graph g = random_digraph(n, 0.3, seed, true);
            const auto list_res = pagerank(g);
            const auto dense_res = pagerank_matrix(to_adjacency_matrix(g));
            CHECK(max_abs_diff(list_res.scores, dense_res.scores) <= 1e-10);
        }
    }
}

TEST_CASE("pagerank conservation on sink-free random graphs") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const Graph g = random_digraph(23, 0.25, seed, true);
        const auto res = pagerank(g);
        double sum = 0.0;
        for (const double s : res.scores) {
            CHECK(s >= 0.15 - 1e-12);
            sum += s;
        }
        CHECK(sum == doctest::Approx(23.0).epsilon(1e-7));
    }
}

TEST_CASE("pagerank signals exhausted budgets") {
    SolverConfig cfg = SolverConfig::pagerank_defaults();
    cfg.max_iterations = 2;
    cfg.tolerance = 1e-15;
    const Graph g = from_adjacency_matrix(seven_node_matrix());
    CHECK_THROWS_AS(pagerank(g, cfg), NonConvergenceError);
    try {
        pagerank(g, cfg);
    } catch (const NonConvergenceError &e) {
        CHECK(e.iterations() == 2);
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("solver config validation") {
    const Graph g = build_graph(2, {{0, 1}, {1, 0}});
    SolverConfig bad = SolverConfig::pagerank_defaults();
    bad.damping = 1.5;
    CHECK_THROWS_AS(pagerank(g, bad), Error);
    bad = SolverConfig::pagerank_defaults();
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(pagerank(g, bad), Error);
}

TEST_CASE("eigenvector centrality on the seven-node example") {
    const Graph g = from_adjacency_matrix(seven_node_matrix());
    const auto res = eigenvector_centrality(g);
    CHECK(res.converged);
    REQUIRE(res.dominant_eigenvalue.has_value());
    const double lambda = *res.dominant_eigenvalue;

    CHECK(std::abs(lambda - fixtures::kSevenNodeEigenvalue) < 1e-3);
    for (int i = 0; i < 7; ++i)
        CHECK(std::abs(res.scores[static_cast<std::size_t>(i)] -
                       fixtures::kSevenNodeEigenvector[i]) < 1e-3);

    // unit Euclidean norm
    double norm_sq = 0.0;
    for (const double s : res.scores)
        norm_sq += s * s;
    CHECK(std::abs(norm_sq - 1.0) < 1e-9);

    // the last node's single out-edge points at node 2: lambda*x7 = x3
    CHECK(lambda * res.scores[6] == doctest::Approx(res.scores[2]).epsilon(1e-6));
}

TEST_CASE("eigenvector centrality on a two-node cycle") {
    const auto res = eigenvector_centrality(build_graph(2, {{0, 1}, {1, 0}}));
    CHECK(res.scores[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(res.scores[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(*res.dominant_eigenvalue == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a defective dominant eigenspace surfaces as non-convergence") {
    // Two 2-cycles with a one-way bridge share the dominant eigenvalue but
    // have a single eigenvector; power iteration closes in only algebraically.
    const Graph g = build_graph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
    CHECK_THROWS_AS(eigenvector_centrality(g), NonConvergenceError);
}

TEST_CASE("eigenvector centrality rejects edgeless graphs") {
    try {
        eigenvector_centrality(build_graph(3, {}));
        FAIL("expected zero-matrix error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::zero_matrix);
    }
}

TEST_CASE("eigen residual stays within the advertised bound") {
    auto check_residual = [](const Graph &g) {
        const auto res = eigenvector_centrality(g);
        const double lambda = *res.dominant_eigenvalue;
        const AdjacencyMatrix m = to_adjacency_matrix(g);
        double worst = 0.0;
        for (int i = 0; i < m.order; ++i) {
            double row = 0.0;
            for (int j = 0; j < m.order; ++j)
                row += m.at(i, j) * res.scores[static_cast<std::size_t>(j)];
            worst = std::max(worst, std::abs(row - lambda * res.scores[static_cast<std::size_t>(i)]));
        }
        CHECK(worst <= 10.0 * 1e-10 * (lambda + 1.0));
    };
    check_residual(from_adjacency_matrix(seven_node_matrix()));
    for (std::uint64_t seed = 3; seed < 9; ++seed)
        check_residual(random_digraph(25, 0.3, seed, true));
}

TEST_CASE("power iteration matches the dense squaring oracle on small graphs") {
    int compared = 0;
    for (int n = 4; n <= 10; ++n) {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const Graph g = random_digraph(n, 0.35, 1000 * static_cast<std::uint64_t>(n) + seed,
                                           true);
            CentralityScores res;
            try {
                res = eigenvector_centrality(g);
            } catch (const NonConvergenceError &) {
                continue; // degenerate dominant eigenspace; the solver said so
            }
            const auto expect = oracles::dense_dominant_eigenpair(to_adjacency_matrix(g));
            CHECK(std::abs(*res.dominant_eigenvalue - expect.value) < 1e-6);
            CHECK(max_abs_diff(res.scores, expect.vector) < 1e-6);
            ++compared;
        }
    }
    CHECK(compared >= 50);
}

TEST_CASE("scaling edge weights rescales the eigenvalue only") {
    const Graph g = random_digraph(12, 0.3, 5, true);
    std::vector<Edge> scaled = g.edges();
    for (Edge &e : scaled)
        e.weight *= 3.5;
    const Graph gs = build_graph(g.node_count(), scaled);

    const auto base = eigenvector_centrality(g);
    const auto stretched = eigenvector_centrality(gs);
    CHECK(max_abs_diff(base.scores, stretched.scores) < 1e-9);
    CHECK(*stretched.dominant_eigenvalue ==
          doctest::Approx(3.5 * *base.dominant_eigenvalue).epsilon(1e-9));

    // pagerank counts out-links, so weights never enter
    CHECK(max_abs_diff(pagerank(g).scores, pagerank(gs).scores) == 0.0);
}

TEST_CASE("degree centrality") {
    const Graph g = from_adjacency_matrix(seven_node_matrix());
    CHECK(degree_centrality(g, DegreeMode::in).scores[6] == 3.0);
    CHECK(degree_centrality(g, DegreeMode::out).scores[6] == 1.0);

    const auto k4 = degree_centrality(complete_digraph(4), DegreeMode::out);
    for (const double s : k4.scores)
        CHECK(s == 3.0);

    const auto cyc = degree_centrality(build_graph(2, {{0, 1}, {1, 0}}), DegreeMode::in);
    CHECK(cyc.scores == std::vector<double>{1.0, 1.0});
}

TEST_CASE("edge-visit counters tick once per edge per iteration") {
    const Graph g = random_digraph(19, 0.3, 11, true);
    const std::uint64_t e = g.edge_count();

    const auto pr = pagerank(g);
    CHECK(pr.edge_visits == static_cast<std::uint64_t>(pr.iterations) * e);

    const auto ev = eigenvector_centrality(g);
    CHECK(ev.edge_visits == static_cast<std::uint64_t>(ev.iterations) * e);

    const auto dense = pagerank_matrix(to_adjacency_matrix(g));
    const std::uint64_t cells = static_cast<std::uint64_t>(g.node_count()) *
                                static_cast<std::uint64_t>(g.node_count());
    CHECK(dense.edge_visits == static_cast<std::uint64_t>(dense.iterations) * cells);
}
