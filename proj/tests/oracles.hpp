// Independent reference computations for the tests. Everything here works in
// long double straight off the adjacency matrix and shares no code with the
// library solvers.

#ifndef CENTRANK_TESTS_ORACLES_HPP_
#define CENTRANK_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "centrank/graph.hpp"

namespace oracles {

// Fixed point PR = (1-d) + d * sum of PR_b / outdeg(b) over in-neighbors,
// iterated far past the solver's stopping point.
inline std::vector<double> pagerank_fixed_point(const centrank::AdjacencyMatrix &m,
                                                double damping = 0.85, int iterations = 500) {
    const int n = m.order;
    std::vector<long double> out_degree(n, 0.0L);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0.0)
                out_degree[i] += 1.0L;

    const long double d = damping;
    std::vector<long double> pr(n, 1.0L), next(n);
    for (int it = 0; it < iterations; ++it) {
        for (int a = 0; a < n; ++a) {
            long double acc = 0.0L;
            for (int b = 0; b < n; ++b)
                if (m.at(b, a) != 0.0)
                    acc += pr[b] / out_degree[b];
            next[a] = (1.0L - d) + d * acc;
        }
        pr.swap(next);
    }
    return std::vector<double>(pr.begin(), pr.end());
}

struct DenseEigenpair {
    std::vector<double> vector; // unit Euclidean norm, nonnegative
    double value = 0.0;
};

// Dominant eigenpair of A by repeated squaring of (A + I): squaring k times
// applies the matrix 2^k times at once, so the dominant direction saturates
// without any per-step convergence test. The eigenvalue is the Rayleigh
// quotient of A at the resulting vector.
inline DenseEigenpair dense_dominant_eigenpair(const centrank::AdjacencyMatrix &a,
                                               int squarings = 40) {
    const int n = a.order;
    std::vector<long double> m(static_cast<std::size_t>(n) * n), tmp(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i) * n + j] = a.at(i, j) + (i == j ? 1.0L : 0.0L);

    for (int s = 0; s < squarings; ++s) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long double acc = 0.0L;
                for (int k = 0; k < n; ++k)
                    acc += m[static_cast<std::size_t>(i) * n + k] *
                           m[static_cast<std::size_t>(k) * n + j];
                tmp[static_cast<std::size_t>(i) * n + j] = acc;
            }
        long double peak = 0.0L;
        for (const long double v : tmp)
            peak = std::max(peak, std::fabs(v));
        for (std::size_t idx = 0; idx < m.size(); ++idx)
            m[idx] = tmp[idx] / peak;
    }

    std::vector<long double> x(n, 0.0L);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x[i] += m[static_cast<std::size_t>(i) * n + j];
    long double norm = 0.0L;
    for (const long double v : x)
        norm += v * v;
    norm = std::sqrt(norm);
    for (long double &v : x)
        v /= norm;
    if (*std::max_element(x.begin(), x.end()) <= 0.0L)
        for (long double &v : x)
            v = -v;

    long double rayleigh = 0.0L;
    for (int i = 0; i < n; ++i) {
        long double row = 0.0L;
        for (int j = 0; j < n; ++j)
            row += static_cast<long double>(a.at(i, j)) * x[j];
        rayleigh += x[i] * row;
    }

    DenseEigenpair out;
    out.vector.assign(x.begin(), x.end());
    out.value = static_cast<double>(rayleigh);
    return out;
}

// Two-pass product-moment correlation in long double.
inline double pearson(const std::vector<double> &x, const std::vector<double> &y) {
    const std::size_t n = x.size();
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

// Competition ranks by counting strictly better scores.
inline std::vector<double> competition_ranks(const std::vector<double> &scores) {
    std::vector<double> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int better = 0;
        for (const double s : scores)
            better += s > scores[i];
        ranks[i] = 1.0 + better;
    }
    return ranks;
}

} // namespace oracles

#endif // CENTRANK_TESTS_ORACLES_HPP_
