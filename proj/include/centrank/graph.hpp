#ifndef CENTRANK_GRAPH_HPP_
#define CENTRANK_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "centrank/error.hpp"

namespace centrank {

struct Edge {
    int src = 0;
    int dst = 0;
    double weight = 1.0;

    friend bool operator==(const Edge &a, const Edge &b) {
        return a.src == b.src && a.dst == b.dst && a.weight == b.weight;
    }
};

// Square nonnegative matrix, row index = source, column index = target.
struct AdjacencyMatrix {
    int order = 0;
    std::vector<double> entries; // row-major, order*order

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
    double &at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

// Immutable directed graph with both adjacency views.
//
// Node ids are 0-based and dense in [0, node_count). Self-loops and duplicate
// (src, dst) pairs are rejected at construction. Edges and both neighbor lists
// are stored sorted by id, so iteration order is canonical regardless of the
// order edges were supplied in.
class Graph {
public:
    int node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }

    // (target, weight) pairs, ascending by target.
    const std::vector<std::pair<int, double>> &out_neighbors(int node) const {
        return out_[static_cast<std::size_t>(node)];
    }
    // (source, weight) pairs, ascending by source.
    const std::vector<std::pair<int, double>> &in_neighbors(int node) const {
        return in_[static_cast<std::size_t>(node)];
    }

    int out_degree(int node) const { return static_cast<int>(out_[static_cast<std::size_t>(node)].size()); }
    int in_degree(int node) const { return static_cast<int>(in_[static_cast<std::size_t>(node)].size()); }

    // Same nodes, every edge flipped. Used where scores should reflect
    // incoming rather than outgoing endorsement.
    Graph reversed() const;

private:
    friend Graph build_graph(int node_count, const std::vector<Edge> &edges);

    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> out_;
    std::vector<std::vector<std::pair<int, double>>> in_;
};

Graph build_graph(int node_count, const std::vector<Edge> &edges);

Graph from_adjacency_matrix(const AdjacencyMatrix &m);
AdjacencyMatrix to_adjacency_matrix(const Graph &g);

// Edge-list text format (TSV):
//   - lines starting with '#' are comments; "# nodes=N" fixes the node count
//   - data lines are "src<TAB>dst" or "src<TAB>dst<TAB>weight"
//   - ids are decimal 0-based integers, weight a nonnegative decimal real
// Without a header the node count is 1 + max id.
Graph load_edge_list(std::istream &in);

// Adjacency-matrix text format: V lines of V space-separated reals.
AdjacencyMatrix parse_adjacency_matrix(std::istream &in);

// Directed G(n, p): each ordered pair (i, j), i != j, becomes an edge
// independently with probability p. With ensure_out_degree every node left
// without out-edges receives one edge to a uniformly drawn distinct target.
//
// The edge set is a pure function of (n, p, seed, ensure_out_degree) on every
// platform: draws come from std::mt19937_64 mapped explicitly (53-bit doubles,
// rejection sampling for bounded ints), never through distribution objects.
Graph random_digraph(int n, double p, std::uint64_t seed, bool ensure_out_degree);

// (in_degree, out_degree) of one node.
std::pair<int, int> degrees(const Graph &g, int node);

} // namespace centrank

#endif // CENTRANK_GRAPH_HPP_
