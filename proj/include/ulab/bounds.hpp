#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>

namespace ulab {

// A non-negative real held as its natural logarithm; zero is log = -inf.
class LogValue {
public:
    constexpr LogValue() = default;

    static constexpr LogValue from_log(double log_magnitude) { return LogValue(log_magnitude); }
    static LogValue from_value(double value);
    static constexpr LogValue zero() { return LogValue(-std::numeric_limits<double>::infinity()); }
    static constexpr LogValue one() { return LogValue(0.0); }

    constexpr double log() const noexcept { return log_; }
    double log2() const noexcept { return log_ / std::log(2.0); }
    double value() const noexcept { return std::exp(log_); }
    constexpr bool is_zero() const noexcept { return log_ == -std::numeric_limits<double>::infinity(); }

    LogValue operator*(LogValue other) const;
    LogValue operator/(LogValue other) const;
    LogValue operator+(LogValue other) const;
    // |this - other|; throws DomainError if other > this.
    LogValue minus(LogValue other) const;
    LogValue pow(double exponent) const;

    constexpr auto operator<=>(const LogValue& other) const noexcept { return log_ <=> other.log_; }
    constexpr bool operator==(const LogValue& other) const noexcept = default;

private:
    constexpr explicit LogValue(double log_magnitude) : log_(log_magnitude) {}
    double log_ = -std::numeric_limits<double>::infinity();
};

// log n!; summed exactly up to 10^6, log-gamma beyond.
long double log_factorial(std::uint64_t n);

// log C(n, k). Exact log-sum over min(k, n-k) terms when that count is at most
// 10^6, log-gamma otherwise. Throws DomainError unless 0 <= k <= n.
LogValue log_binomial(std::uint64_t n, std::uint64_t k);

// log C(n, k) for n given by its logarithm, for n far beyond 64 bits.
LogValue log_binomial_from_log_n(long double log_n, std::uint64_t k);

// H(x) = -x log2 x - (1-x) log2(1-x), H(0) = H(1) = 0.
double binary_entropy(double x);

struct FdLowerBound {
    LogValue bound;   // (k/e) q^(k^(d-1)/d)
    bool not_tight;   // d == 1: far below the true value qk
};

FdLowerBound lower_bound_fd(std::uint32_t d, std::uint32_t q, std::uint64_t k);

// mu = C(n, k)^d q^(-k^d).
LogValue expected_copies_mu(std::uint32_t d, std::uint32_t q, std::uint64_t k, std::uint64_t n);
LogValue expected_copies_mu_from_log_n(std::uint32_t d, std::uint32_t q, std::uint64_t k,
                                       long double log_n);

// Lambda_i = C(n, k) C(k, i) C(n-k, k-i): ordered pairs of k-subsets of [n]
// meeting in exactly i elements.
LogValue lambda_i(std::uint64_t n, std::uint64_t k, std::uint64_t i);

// L_d(i) = q^((i^d/d)(1 - (k/i)^(d-1))) / (k-i)! * C(k, i) * ((1+eps)k/e)^(k-i).
LogValue overlap_factor(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon,
                        std::uint64_t i);

// (sum_{i=1}^{k} L_d(i))^d - L_d(k)^d, which bounds Delta / mu.
LogValue delta_over_mu_bound(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon);

// log of the order n = ceil((1+eps)(k/e) q^(k^(d-1)/d)), before rounding.
long double log_target_order(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon);

struct SecondMomentReport {
    std::uint32_t d = 0;
    std::uint32_t q = 0;
    std::uint64_t k = 0;
    double epsilon = 0;
    LogValue log_n;
    std::optional<std::uint64_t> n;  // when ceil(...) fits in 64 bits
    LogValue log_mu;
    LogValue mu_floor;               // (16 log q) k^(2d)
    bool mu_floor_holds = false;     // mu >= (16 log q) k^(2d)
    double max_Ld_times_kd = 0;
    double log_max_Ld_times_kd = 0;
    std::uint64_t argmax_i = 0;
    LogValue log_delta_over_mu_bound;
    bool epsilon_in_proved_regime = false;  // eps <= (log q) / 8
};

SecondMomentReport second_moment_report(std::uint32_t d, std::uint32_t q, std::uint64_t k,
                                        double epsilon);

}  // namespace ulab
