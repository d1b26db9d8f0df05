#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulab/words.hpp"

namespace ulab {

// xoshiro256** 1.0 (Blackman & Vigna), state expanded from a 64-bit key by
// SplitMix64. Bounded draws use Lemire's multiply-shift rejection method, so
// the symbol stream is fully specified by this file and portable across
// standard libraries.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t key);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() noexcept;

    // Uniform integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept;

    // Uniform real in [0, 1) with 53 random bits.
    double unit() noexcept;

    // Advances the state by 2^128 draws.
    void jump() noexcept;

private:
    std::uint64_t s_[4];
};

using Engine = Xoshiro256StarStar;

inline constexpr std::string_view kGeneratorName = "xoshiro256**-1.0/splitmix64-keyed v1";

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

// Immutable descriptor of one random stream. Identical (master_seed,
// stream_id) pairs reproduce identical streams; split() derives child
// streams, one per trial, so results never depend on execution order.
struct RandomSource {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    Engine engine() const;
    RandomSource split(std::uint64_t sub) const;

    friend bool operator==(const RandomSource&, const RandomSource&) = default;
};

struct Harmonic {
    boost::multiprecision::cpp_rational exact;
    double value;
};

// H_q = 1 + 1/2 + ... + 1/q.
Harmonic harmonic(std::uint32_t q);

// c_q = q H_q, the expected coupon-collector time on q symbols.
double threshold_constant(std::uint32_t q);

Word sample_uniform_word(std::uint32_t q, std::size_t n, Engine& engine);
Word sample_uniform_word(std::uint32_t q, std::size_t n, const RandomSource& source);

// Appends uniform symbols until every symbol of [q] has appeared.
Word sample_coupon_block(std::uint32_t q, Engine& engine);
Word sample_coupon_block(std::uint32_t q, const RandomSource& source);

// |U| for the block sample_coupon_block would draw from the same state.
std::size_t coupon_block_length(std::uint32_t q, Engine& engine);

struct CouponStats {
    std::uint32_t q = 0;
    std::size_t trials = 0;
    double mean = 0;
    double variance = 0;  // unbiased sample variance
    std::vector<std::pair<std::size_t, double>> empirical_cdf;

    double standard_error() const;
};

CouponStats coupon_time_stats(std::uint32_t q, std::size_t trials, const RandomSource& source,
                              unsigned threads = 1);

struct ConfidenceInterval {
    double low;
    double high;
};

// Two-sided 95% Wilson score interval, clamped to [0, 1] and to contain p_hat.
ConfidenceInterval wilson_interval(std::size_t successes, std::size_t trials);

struct ExperimentRecord {
    std::uint64_t q = 0;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t master_seed = 0;
    std::string generator{kGeneratorName};
};

ExperimentRecord make_record(std::uint64_t q, std::uint64_t k, std::uint64_t n,
                             std::size_t trials, std::size_t successes,
                             std::uint64_t master_seed);

// Fraction of trials whose uniform word of length n has universality index
// >= k. Trial t reads stream source.split(t).
ExperimentRecord estimate_universal_probability(std::uint32_t q, std::size_t k, std::size_t n,
                                                std::size_t trials, const RandomSource& source,
                                                unsigned threads = 1);

struct ThresholdScan {
    std::vector<ExperimentRecord> records;  // in the order of the requested n values
    std::optional<double> crossing;         // empirical 50% point, if bracketed
};

// One record per n. Every n reuses the same per-trial streams, so each trial's
// word of length n is a prefix of its word of length n' > n and p_hat is
// non-decreasing in n.
ThresholdScan threshold_scan(std::uint32_t q, std::size_t k, const std::vector<std::size_t>& n_values,
                             std::size_t trials, const RandomSource& source, unsigned threads = 1);

// Linear interpolation of the 0.5 crossing over records sorted by n.
std::optional<double> crossing_point(std::vector<ExperimentRecord> records);

struct DeviationRow {
    double t = 0;
    std::size_t exceedances = 0;
    double frequency = 0;
};

struct DeviationTable {
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::size_t trials = 0;
    double center = 0;  // c_q k
    double mean_length = 0;
    std::vector<DeviationRow> rows;
};

// Empirical P[ | |U^(k)| - c_q k | > t sqrt(k) ] for each t, where U^(k) is the
// concatenation of k independent coupon blocks.
DeviationTable deviation_scan(std::uint32_t q, std::size_t k, std::size_t trials,
                              const std::vector<double>& t_values, const RandomSource& source,
                              unsigned threads = 1);

}  // namespace ulab
