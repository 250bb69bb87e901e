#include "centrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

namespace centrank {

namespace {

std::string edge_str(int src, int dst) {
    return "(" + std::to_string(src) + ", " + std::to_string(dst) + ")";
}

// 53-bit mantissa draw in [0, 1).
double next_double(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform draw in [0, bound) via rejection.
std::uint64_t next_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

Graph build_graph(int node_count, const std::vector<Edge> &edges) {
    if (node_count < 1)
        throw Error(ErrorCode::invalid_argument,
                    "node_count must be >= 1, got " + std::to_string(node_count));

    Graph g;
    g.node_count_ = node_count;
    g.edges_ = edges;
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge &a, const Edge &b) { return std::pair(a.src, a.dst) < std::pair(b.src, b.dst); });

    g.out_.resize(static_cast<std::size_t>(node_count));
    g.in_.resize(static_cast<std::size_t>(node_count));

    const Edge *prev = nullptr;
    for (const Edge &e : g.edges_) {
        if (e.src < 0 || e.src >= node_count || e.dst < 0 || e.dst >= node_count)
            throw Error(ErrorCode::id_out_of_range,
                        "edge " + edge_str(e.src, e.dst) + ": node id out of range [0, " +
                            std::to_string(node_count) + ")");
        if (e.src == e.dst)
            throw Error(ErrorCode::self_loop, "self-loop at edge " + edge_str(e.src, e.dst));
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw Error(ErrorCode::invalid_argument,
                        "edge " + edge_str(e.src, e.dst) + ": weight must be a nonnegative finite real");
        if (prev && prev->src == e.src && prev->dst == e.dst)
            throw Error(ErrorCode::duplicate_edge, "duplicate edge " + edge_str(e.src, e.dst));
        prev = &e;
        g.out_[static_cast<std::size_t>(e.src)].emplace_back(e.dst, e.weight);
        g.in_[static_cast<std::size_t>(e.dst)].emplace_back(e.src, e.weight);
    }
    for (auto &nbrs : g.in_)
        std::sort(nbrs.begin(), nbrs.end());
    // out_ lists are already ascending: edges_ is sorted by (src, dst).
    return g;
}

Graph Graph::reversed() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge &e : edges_)
        rev.push_back({e.dst, e.src, e.weight});
    return build_graph(node_count_, rev);
}

Graph from_adjacency_matrix(const AdjacencyMatrix &m) {
    if (m.order < 1 ||
        m.entries.size() != static_cast<std::size_t>(m.order) * static_cast<std::size_t>(m.order))
        throw Error(ErrorCode::not_square,
                    "matrix storage does not match declared order " + std::to_string(m.order));

    std::vector<Edge> edges;
    for (int i = 0; i < m.order; ++i) {
        for (int j = 0; j < m.order; ++j) {
            const double w = m.at(i, j);
            if (!(w >= 0.0) || !std::isfinite(w))
                throw Error(ErrorCode::negative_entry,
                            "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") must be a nonnegative finite real");
            if (i == j && w != 0.0)
                throw Error(ErrorCode::nonzero_diagonal,
                            "diagonal entry (" + std::to_string(i) + ", " + std::to_string(i) +
                                ") must be zero");
            if (w > 0.0)
                edges.push_back({i, j, w});
        }
    }
    return build_graph(m.order, edges);
}

AdjacencyMatrix to_adjacency_matrix(const Graph &g) {
    AdjacencyMatrix m;
    m.order = g.node_count();
    m.entries.assign(static_cast<std::size_t>(m.order) * static_cast<std::size_t>(m.order), 0.0);
    for (const Edge &e : g.edges())
        m.at(e.src, e.dst) = e.weight;
    return m;
}

namespace {

bool parse_int(const std::string &tok, int &out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

bool parse_real(const std::string &tok, double &out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok)
        fields.push_back(tok);
    return fields;
}

[[noreturn]] void parse_fail(int line_no, const std::string &what) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph load_edge_list(std::istream &in) {
    int declared_nodes = -1;
    int max_id = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            const auto pos = line.find("nodes=");
            if (pos != std::string::npos && declared_nodes < 0) {
                const auto value = split_fields(line.substr(pos + 6));
                int n = 0;
                if (value.empty() || !parse_int(value[0], n) || n < 1)
                    parse_fail(line_no, "malformed '# nodes=N' header");
                declared_nodes = n;
            }
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 2 && fields.size() != 3)
            parse_fail(line_no, "expected 'src dst' or 'src dst weight', got " +
                                    std::to_string(fields.size()) + " fields");
        int src = 0, dst = 0;
        if (!parse_int(fields[0], src) || !parse_int(fields[1], dst))
            parse_fail(line_no, "node ids must be decimal integers");
        if (src < 0 || dst < 0)
            parse_fail(line_no, "node ids must be nonnegative");
        double w = 1.0;
        if (fields.size() == 3 && (!parse_real(fields[2], w) || !(w >= 0.0) || !std::isfinite(w)))
            parse_fail(line_no, "weight must be a nonnegative decimal real");

        if (src == dst)
            throw Error(ErrorCode::self_loop,
                        "line " + std::to_string(line_no) + ": self-loop at edge " + edge_str(src, dst));
        if (declared_nodes >= 0 && (src >= declared_nodes || dst >= declared_nodes))
            throw Error(ErrorCode::id_out_of_range,
                        "line " + std::to_string(line_no) + ": edge " + edge_str(src, dst) +
                            " exceeds declared node count " + std::to_string(declared_nodes));
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(src)) << 32) |
            static_cast<std::uint32_t>(dst);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::duplicate_edge,
                        "line " + std::to_string(line_no) + ": duplicate edge " + edge_str(src, dst));

        edges.push_back({src, dst, w});
        max_id = std::max(max_id, std::max(src, dst));
    }

    if (declared_nodes < 0 && max_id < 0)
        throw Error(ErrorCode::parse, "no edges and no '# nodes=N' header");
    const int n = declared_nodes >= 0 ? declared_nodes : max_id + 1;
    return build_graph(n, edges);
}

AdjacencyMatrix parse_adjacency_matrix(std::istream &in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::vector<double> row;
        for (const std::string &tok : split_fields(line)) {
            double v = 0;
            if (!parse_real(tok, v))
                parse_fail(line_no, "'" + tok + "' is not a decimal real");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(ErrorCode::parse, "empty matrix");
    const std::size_t n = rows.size();
    AdjacencyMatrix m;
    m.order = static_cast<int>(n);
    m.entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw Error(ErrorCode::not_square,
                        "matrix has " + std::to_string(n) + " rows but row " + std::to_string(i + 1) +
                            " has " + std::to_string(rows[i].size()) + " entries");
        m.entries.insert(m.entries.end(), rows[i].begin(), rows[i].end());
    }
    return m;
}

Graph random_digraph(int n, double p, std::uint64_t seed, bool ensure_out_degree) {
    if (n < 2)
        throw Error(ErrorCode::invalid_argument, "random digraph needs n >= 2, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::invalid_probability,
                    "edge probability must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (next_double(rng) < p) {
                edges.push_back({i, j, 1.0});
                ++out_degree[static_cast<std::size_t>(i)];
            }
        }
    }
    if (ensure_out_degree) {
        for (int i = 0; i < n; ++i) {
            if (out_degree[static_cast<std::size_t>(i)] > 0)
                continue;
            int t = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n - 1)));
            if (t >= i)
                ++t;
            edges.push_back({i, t, 1.0});
        }
    }
    return build_graph(n, edges);
}

std::pair<int, int> degrees(const Graph &g, int node) {
    if (node < 0 || node >= g.node_count())
        throw Error(ErrorCode::id_out_of_range,
                    "node " + std::to_string(node) + " out of range [0, " +
                        std::to_string(g.node_count()) + ")");
    return {g.in_degree(node), g.out_degree(node)};
}

} // namespace centrank
