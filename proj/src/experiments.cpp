#include <algorithm>
#include <cmath>
#include <map>

#include "ulab/parallel.hpp"
#include "ulab/random.hpp"

namespace ulab {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

double CouponStats::standard_error() const {
    return trials > 0 ? std::sqrt(variance / static_cast<double>(trials)) : 0.0;
}

CouponStats coupon_time_stats(std::uint32_t q, std::size_t trials, const RandomSource& source,
                              unsigned threads) {
    if (trials == 0) throw DomainError("trials must be at least 1");
    Alphabet alphabet(q);
    auto lengths = run_indexed(trials, threads, [&](std::size_t t) {
        Engine engine = source.split(t).engine();
        return coupon_block_length(alphabet.size(), engine);
    });

    CouponStats stats;
    stats.q = q;
    stats.trials = trials;
    // Welford, in trial order
    double mean = 0, m2 = 0;
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        double x = static_cast<double>(lengths[i]);
        double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
        ++histogram[lengths[i]];
    }
    stats.mean = mean;
    stats.variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
    std::size_t cumulative = 0;
    for (auto [value, count] : histogram) {
        cumulative += count;
        stats.empirical_cdf.emplace_back(
            value, static_cast<double>(cumulative) / static_cast<double>(trials));
    }
    return stats;
}

ConfidenceInterval wilson_interval(std::size_t successes, std::size_t trials) {
    if (trials == 0) throw DomainError("trials must be at least 1");
    if (successes > trials) throw DomainError("successes exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = kZ95 / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    double low = std::clamp(center - half, 0.0, 1.0);
    double high = std::clamp(center + half, 0.0, 1.0);
    if (successes == 0) low = 0.0;
    if (successes == trials) high = 1.0;
    return {std::min(low, p), std::max(high, p)};
}

ExperimentRecord make_record(std::uint64_t q, std::uint64_t k, std::uint64_t n,
                             std::size_t trials, std::size_t successes,
                             std::uint64_t master_seed) {
    ExperimentRecord r;
    r.q = q;
    r.k = k;
    r.n = n;
    r.trials = trials;
    r.successes = successes;
    r.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    auto ci = wilson_interval(successes, trials);
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    r.master_seed = master_seed;
    return r;
}

ExperimentRecord estimate_universal_probability(std::uint32_t q, std::size_t k, std::size_t n,
                                                std::size_t trials, const RandomSource& source,
                                                unsigned threads) {
    auto scan = threshold_scan(q, k, {n}, trials, source, threads);
    return scan.records.front();
}

ThresholdScan threshold_scan(std::uint32_t q, std::size_t k, const std::vector<std::size_t>& n_values,
                             std::size_t trials, const RandomSource& source, unsigned threads) {
    if (n_values.empty()) throw DomainError("n_values must be non-empty");
    if (trials == 0) throw DomainError("trials must be at least 1");
    if (k == 0) throw DomainError("k must be at least 1");
    Alphabet alphabet(q);
    const std::size_t n_max = *std::max_element(n_values.begin(), n_values.end());

    // For each trial, the prefix length at which the universality index first
    // reaches k (n_max + 1 if never). A word of length n is k-universal iff
    // that length is <= n.
    auto first_universal = run_indexed(trials, threads, [&](std::size_t t) {
        Engine engine = source.split(t).engine();
        Word w = sample_uniform_word(alphabet.size(), n_max, engine);
        return universal_prefix_length(w, k).value_or(n_max + 1);
    });

    ThresholdScan scan;
    for (std::size_t n : n_values) {
        std::size_t successes = static_cast<std::size_t>(
            std::count_if(first_universal.begin(), first_universal.end(),
                          [n](std::size_t len) { return len <= n; }));
        scan.records.push_back(make_record(q, k, n, trials, successes, source.master_seed));
    }
    scan.crossing = crossing_point(scan.records);
    return scan;
}

std::optional<double> crossing_point(std::vector<ExperimentRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const auto& a, const auto& b) { return a.n < b.n; });
    bool below = false, above = false;
    for (const auto& r : records) {
        below |= r.p_hat < 0.5;
        above |= r.p_hat > 0.5;
    }
    if (!below || !above) return std::nullopt;
    for (std::size_t j = 1; j < records.size(); ++j) {
        const auto& lo = records[j - 1];
        const auto& hi = records[j];
        if (lo.p_hat < 0.5 && hi.p_hat >= 0.5) {
            double frac = (0.5 - lo.p_hat) / (hi.p_hat - lo.p_hat);
            return static_cast<double>(lo.n) + frac * static_cast<double>(hi.n - lo.n);
        }
    }
    return std::nullopt;
}

DeviationTable deviation_scan(std::uint32_t q, std::size_t k, std::size_t trials,
                              const std::vector<double>& t_values, const RandomSource& source,
                              unsigned threads) {
    if (trials == 0) throw DomainError("trials must be at least 1");
    if (k == 0) throw DomainError("k must be at least 1");
    Alphabet alphabet(q);
    auto lengths = run_indexed(trials, threads, [&](std::size_t t) {
        Engine engine = source.split(t).engine();
        std::size_t total = 0;
        for (std::size_t i = 0; i < k; ++i) total += coupon_block_length(alphabet.size(), engine);
        return total;
    });

    DeviationTable table;
    table.q = q;
    table.k = k;
    table.trials = trials;
    table.center = threshold_constant(q) * static_cast<double>(k);
    double sum = 0;
    for (std::size_t len : lengths) sum += static_cast<double>(len);
    table.mean_length = sum / static_cast<double>(trials);
    const double scale = std::sqrt(static_cast<double>(k));
    for (double t : t_values) {
        DeviationRow row;
        row.t = t;
        for (std::size_t len : lengths) {
            if (std::abs(static_cast<double>(len) - table.center) > t * scale) ++row.exceedances;
        }
        row.frequency = static_cast<double>(row.exceedances) / static_cast<double>(trials);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace ulab
