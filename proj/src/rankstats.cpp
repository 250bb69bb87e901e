#include "centrank/rankstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace centrank {

namespace {

template <typename Key>
std::vector<double> assign_ranks(const std::vector<Key> &keys, TiePolicy policy) {
    const std::size_t n = keys.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b])
            return keys[a] > keys[b]; // descending score
        return a < b;
    });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && keys[order[j + 1]] == keys[order[i]])
            ++j;
        // block [i, j] shares positions i+1 .. j+1
        const double rank = policy == TiePolicy::competition
                                ? static_cast<double>(i + 1)
                                : static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

void check_same_length(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorCode::length_mismatch,
                    "vectors have different lengths (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
}

bool all_equal(std::span<const double> v) {
    for (double x : v)
        if (x != v[0])
            return false;
    return true;
}

double pearson_unchecked(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

// Regularized incomplete beta via the continued fraction (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr double eps = 3e-14;
    constexpr double fp_min = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fp_min)
        d = fp_min;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fp_min)
            d = fp_min;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fp_min)
            c = fp_min;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fp_min)
            d = fp_min;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fp_min)
            c = fp_min;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps)
            break;
    }
    return h;
}

double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    const double p = 0.5 * reg_inc_beta(df / 2.0, 0.5, df / (df + t * t));
    return t >= 0.0 ? 1.0 - p : p;
}

double student_t_quantile(double prob, double df) {
    double lo = 0.0, hi = 2.0;
    while (student_t_cdf(hi, df) < prob)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (student_t_cdf(mid, df) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

Ranking rank_scores(std::span<const double> scores, TiePolicy policy,
                    std::optional<int> round_decimals) {
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (!std::isfinite(scores[i]))
            throw Error(ErrorCode::non_finite_score,
                        "score at index " + std::to_string(i) + " is not finite");

    Ranking r;
    r.tie_policy = policy;
    if (round_decimals) {
        if (*round_decimals < 0 || *round_decimals > 12)
            throw Error(ErrorCode::invalid_argument, "round_decimals must lie in [0, 12]");
        const double scale = std::pow(10.0, *round_decimals);
        std::vector<std::int64_t> keys(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const double scaled = scores[i] * scale;
            if (std::abs(scaled) > 9e15)
                throw Error(ErrorCode::invalid_argument,
                            "score magnitude too large for the requested rounding");
            keys[i] = std::llround(scaled);
        }
        r.ranks = assign_ranks(keys, policy);
    } else {
        r.ranks = assign_ranks(std::vector<double>(scores.begin(), scores.end()), policy);
    }
    return r;
}

double spearman_rho(const Ranking &a, const Ranking &b, SpearmanMode mode) {
    check_same_length(a.ranks.size(), b.ranks.size());
    const std::size_t n = a.ranks.size();
    if (n < 2)
        throw Error(ErrorCode::invalid_argument, "need at least two items to correlate");
    if (all_equal(a.ranks) || all_equal(b.ranks))
        throw Error(ErrorCode::degenerate_ranking,
                    "all ranks equal in one ranking, correlation undefined");

    if (mode == SpearmanMode::classic_d2) {
        double sum_d2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = a.ranks[i] - b.ranks[i];
            sum_d2 += d * d;
        }
        const double nn = static_cast<double>(n);
        return 1.0 - 6.0 * sum_d2 / (nn * (nn * nn - 1.0));
    }
    return pearson_unchecked(a.ranks, b.ranks);
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
    check_same_length(x.size(), y.size());
    if (x.size() < 2)
        throw Error(ErrorCode::invalid_argument, "need at least two items to correlate");
    if (all_equal(x) || all_equal(y))
        throw Error(ErrorCode::zero_variance, "constant vector, correlation undefined");
    return pearson_unchecked(x, y);
}

std::optional<CriticalValue> critical_value(int n) {
    if (n < 4)
        return std::nullopt;
    switch (n) {
    case 21: return CriticalValue{0.681, false};
    case 50: return CriticalValue{0.465, false};
    case 100: return CriticalValue{0.326, false};
    default: break;
    }
    const double df = static_cast<double>(n - 2);
    const double t = student_t_quantile(0.95, df);
    return CriticalValue{t / std::sqrt(t * t + df), true};
}

double top_k_agreement(const Ranking &a, const Ranking &b, int k) {
    check_same_length(a.ranks.size(), b.ranks.size());
    const std::size_t n = a.ranks.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw Error(ErrorCode::invalid_k,
                    "k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));

    std::size_t size_a = 0, size_b = 0, common = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool ina = a.ranks[i] <= static_cast<double>(k);
        const bool inb = b.ranks[i] <= static_cast<double>(k);
        size_a += ina;
        size_b += inb;
        common += ina && inb;
    }
    const std::size_t denom = std::max(size_a, size_b);
    return denom == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(denom);
}

CorrelationReport compare(std::span<const double> scores_a, std::span<const double> scores_b,
                          int top_k, SpearmanMode mode, std::optional<int> round_decimals) {
    check_same_length(scores_a.size(), scores_b.size());
    const Ranking ra = rank_scores(scores_a, TiePolicy::competition, round_decimals);
    const Ranking rb = rank_scores(scores_b, TiePolicy::competition, round_decimals);

    CorrelationReport rep;
    rep.n = static_cast<int>(scores_a.size());
    rep.spearman_rho = spearman_rho(ra, rb, mode);
    rep.pearson_r = pearson_r(scores_a, scores_b);
    if (const auto cv = critical_value(rep.n)) {
        rep.critical_value = cv->value;
        rep.critical_is_approximate = cv->approximate;
        rep.significant = rep.spearman_rho > cv->value;
    }
    rep.top_k = top_k;
    rep.top_k_overlap = top_k_agreement(ra, rb, top_k);
    return rep;
}

CorrelationReport compare(const CentralityScores &a, const CentralityScores &b, int top_k,
                          SpearmanMode mode, std::optional<int> round_decimals) {
    return compare(std::span<const double>(a.scores), std::span<const double>(b.scores), top_k,
                   mode, round_decimals);
}

} // namespace centrank
