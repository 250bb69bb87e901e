#ifndef CENTRANK_RANKSTATS_HPP_
#define CENTRANK_RANKSTATS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "centrank/centrality.hpp"

namespace centrank {

enum class TiePolicy {
    competition, // "1224": ties share the smallest rank, the next rank skips
    average,     // ties share the mean of the positions they occupy
};

struct Ranking {
    std::vector<double> ranks; // 1 is best; half-integers only under average policy
    TiePolicy tie_policy = TiePolicy::competition;
    std::optional<Method> source_method;
};

// Rank by descending score. With round_decimals set, scores are compared
// after rounding to that many decimal places, which reproduces tie structure
// of tables printed at fixed precision; default is full-precision comparison.
Ranking rank_scores(std::span<const double> scores, TiePolicy policy,
                    std::optional<int> round_decimals = std::nullopt);

enum class SpearmanMode {
    rank_pearson, // Pearson's r over the rank values (standard with ties)
    classic_d2,   // 1 - 6*sum(d^2) / (n(n^2-1)), applied to the ranks verbatim
};

// Rank correlation of two rankings over the same node universe.
double spearman_rho(const Ranking &a, const Ranking &b,
                    SpearmanMode mode = SpearmanMode::rank_pearson);

// Product-moment correlation of two raw score vectors.
double pearson_r(std::span<const double> x, std::span<const double> y);

struct CriticalValue {
    double value = 0.0;
    // Anchored table values exist for n = 21, 50, 100; anything else is a
    // one-tailed 5%-level t-based approximation and is flagged as such.
    bool approximate = true;
};

std::optional<CriticalValue> critical_value(int n);

// |top-k(a) intersect top-k(b)| / k, where top-k holds every node with rank
// <= k. Ties can push a set past k elements; the larger set size then becomes
// the denominator.
double top_k_agreement(const Ranking &a, const Ranking &b, int k);

struct CorrelationReport {
    int n = 0;
    double spearman_rho = 0.0;
    double pearson_r = 0.0;
    std::optional<double> critical_value;
    bool critical_is_approximate = false;
    std::optional<bool> significant; // spearman_rho > critical_value
    int top_k = 0;
    double top_k_overlap = 0.0;
};

// Ranks both score vectors (competition policy), correlates, and fills every
// report field.
CorrelationReport compare(std::span<const double> scores_a, std::span<const double> scores_b,
                          int top_k, SpearmanMode mode = SpearmanMode::rank_pearson,
                          std::optional<int> round_decimals = std::nullopt);
CorrelationReport compare(const CentralityScores &a, const CentralityScores &b, int top_k,
                          SpearmanMode mode = SpearmanMode::rank_pearson,
                          std::optional<int> round_decimals = std::nullopt);

} // namespace centrank

#endif // CENTRANK_RANKSTATS_HPP_
