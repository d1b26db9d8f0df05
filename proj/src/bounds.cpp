#include "ulab/bounds.hpp"

#include <algorithm>
#include <string>

#include "ulab/error.hpp"

namespace ulab {

namespace {

constexpr std::uint64_t kExactSumLimit = 1'000'000;

// log(exp(a) + exp(b))
double log_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity()) return a;
    return a + std::log1p(std::exp(b - a));
}

// log((1 + x)^d - 1) for x = exp(log_x) >= 0.
double log_expm1_power(double log_x, double d) {
    if (log_x == -std::numeric_limits<double>::infinity()) return log_x;
    if (log_x < -30.0) {
        // (1+x)^d - 1 = d x (1 + (d-1) x / 2 + ...)
        return std::log(d) + log_x + std::log1p((d - 1.0) / 2.0 * std::exp(log_x));
    }
    const double t = d * std::log1p(std::exp(log_x));
    if (t > 30.0) return t + std::log1p(-std::exp(-t));
    return std::log(std::expm1(t));
}

}  // namespace

LogValue LogValue::from_value(double value) {
    if (value < 0 || std::isnan(value)) throw DomainError("LogValue needs a non-negative value");
    return LogValue(std::log(value));
}

LogValue LogValue::operator*(LogValue other) const {
    if (is_zero() || other.is_zero()) return zero();
    return LogValue(log_ + other.log_);
}

LogValue LogValue::operator/(LogValue other) const {
    if (other.is_zero()) throw DomainError("division by zero LogValue");
    if (is_zero()) return zero();
    return LogValue(log_ - other.log_);
}

LogValue LogValue::operator+(LogValue other) const { return LogValue(log_add(log_, other.log_)); }

LogValue LogValue::minus(LogValue other) const {
    if (other.log_ > log_) throw DomainError("LogValue subtraction would be negative");
    if (other.is_zero()) return *this;
    if (other.log_ == log_) return zero();
    return LogValue(log_ + std::log(-std::expm1(other.log_ - log_)));
}

LogValue LogValue::pow(double exponent) const {
    if (is_zero()) return exponent == 0 ? one() : zero();
    return LogValue(log_ * exponent);
}

long double log_factorial(std::uint64_t n) {
    if (n > kExactSumLimit) return std::lgamma(static_cast<long double>(n) + 1.0L);
    long double sum = 0;
    for (std::uint64_t i = 2; i <= n; ++i) sum += std::log(static_cast<long double>(i));
    return sum;
}

LogValue log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        throw DomainError("log_binomial needs 0 <= k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    const std::uint64_t m = std::min(k, n - k);
    if (m > kExactSumLimit) {
        const long double nn = static_cast<long double>(n);
        const long double kk = static_cast<long double>(k);
        return LogValue::from_log(static_cast<double>(std::lgamma(nn + 1) - std::lgamma(kk + 1) -
                                                      std::lgamma(nn - kk + 1)));
    }
    long double sum = 0;
    for (std::uint64_t i = 1; i <= m; ++i) {
        sum += std::log(static_cast<long double>(n - m + i) / static_cast<long double>(i));
    }
    return LogValue::from_log(static_cast<double>(sum));
}

LogValue log_binomial_from_log_n(long double log_n, std::uint64_t k) {
    if (k > kExactSumLimit) throw DomainError("log_binomial_from_log_n needs k <= 10^6");
    if (log_n < std::log(static_cast<long double>(std::max<std::uint64_t>(k, 1)))) {
        throw DomainError("log_binomial_from_log_n needs n >= k");
    }
    // log C(n,k) = sum_i [ log n + log1p(-(k-i)/n) - log i ]
    long double sum = 0;
    for (std::uint64_t i = 1; i <= k; ++i) {
        long double ratio = (i == k) ? 0.0L : std::exp(std::log(static_cast<long double>(k - i)) - log_n);
        sum += log_n + std::log1p(-ratio) - std::log(static_cast<long double>(i));
    }
    return LogValue::from_log(static_cast<double>(sum));
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy needs 0 <= x <= 1");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

FdLowerBound lower_bound_fd(std::uint32_t d, std::uint32_t q, std::uint64_t k) {
    if (d < 1 || q < 1 || k < 1) throw DomainError("lower_bound_fd needs d, q, k >= 1");
    const long double kk = static_cast<long double>(k);
    const long double exponent = std::pow(kk, static_cast<long double>(d - 1)) / d;
    const long double log_bound = std::log(kk) - 1.0L + exponent * std::log(static_cast<long double>(q));
    return FdLowerBound{LogValue::from_log(static_cast<double>(log_bound)), d == 1};
}

LogValue expected_copies_mu(std::uint32_t d, std::uint32_t q, std::uint64_t k, std::uint64_t n) {
    if (n < k) throw DomainError("expected_copies_mu needs n >= k");
    const long double cells = std::pow(static_cast<long double>(k), static_cast<long double>(d));
    const long double log_mu = static_cast<long double>(d) * log_binomial(n, k).log() -
                               cells * std::log(static_cast<long double>(q));
    return LogValue::from_log(static_cast<double>(log_mu));
}

LogValue expected_copies_mu_from_log_n(std::uint32_t d, std::uint32_t q, std::uint64_t k,
                                       long double log_n) {
    const long double cells = std::pow(static_cast<long double>(k), static_cast<long double>(d));
    const long double log_mu = static_cast<long double>(d) * log_binomial_from_log_n(log_n, k).log() -
                               cells * std::log(static_cast<long double>(q));
    return LogValue::from_log(static_cast<double>(log_mu));
}

LogValue lambda_i(std::uint64_t n, std::uint64_t k, std::uint64_t i) {
    if (!(i <= k && k <= n && k - i <= n - k)) {
        throw DomainError("lambda_i needs 0 <= i <= k <= n and k - i <= n - k");
    }
    return log_binomial(n, k) * log_binomial(k, i) * log_binomial(n - k, k - i);
}

LogValue overlap_factor(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon,
                        std::uint64_t i) {
    if (!(i >= 1 && i <= k)) throw DomainError("L_d(i) needs 1 <= i <= k");
    if (!(epsilon > 0)) throw DomainError("L_d(i) needs epsilon > 0");
    if (d < 1 || q < 1) throw DomainError("L_d(i) needs d, q >= 1");
    const long double ii = static_cast<long double>(i);
    const long double kk = static_cast<long double>(k);
    const long double dd = static_cast<long double>(d);
    // (i^d / d)(1 - (k/i)^(d-1)) = i (i^(d-1) - k^(d-1)) / d
    const long double q_exponent = ii * (std::pow(ii, dd - 1) - std::pow(kk, dd - 1)) / dd;
    const long double log_value = q_exponent * std::log(static_cast<long double>(q)) -
                                  log_factorial(k - i) + log_binomial(k, i).log() +
                                  static_cast<long double>(k - i) *
                                      (std::log1p(static_cast<long double>(epsilon)) + std::log(kk) - 1.0L);
    return LogValue::from_log(static_cast<double>(log_value));
}

LogValue delta_over_mu_bound(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon) {
    if (k < 1) throw DomainError("delta_over_mu_bound needs k >= 1");
    const LogValue at_k = overlap_factor(d, q, k, epsilon, k);
    LogValue rest = LogValue::zero();
    for (std::uint64_t i = 1; i < k; ++i) rest = rest + overlap_factor(d, q, k, epsilon, i);
    // (L(k) + s)^d - L(k)^d = L(k)^d ((1 + s/L(k))^d - 1)
    const double log_ratio = (rest / at_k).log();
    return LogValue::from_log(d * at_k.log() + log_expm1_power(log_ratio, static_cast<double>(d)));
}

long double log_target_order(std::uint32_t d, std::uint32_t q, std::uint64_t k, double epsilon) {
    const long double kk = static_cast<long double>(k);
    return std::log1p(static_cast<long double>(epsilon)) + std::log(kk) - 1.0L +
           std::pow(kk, static_cast<long double>(d - 1)) / d * std::log(static_cast<long double>(q));
}

SecondMomentReport second_moment_report(std::uint32_t d, std::uint32_t q, std::uint64_t k,
                                        double epsilon) {
    if (d < 2 || q < 2) throw DomainError("second_moment_report needs d, q >= 2");
    if (k < 1) throw DomainError("second_moment_report needs k >= 1");
    if (!(epsilon > 0)) throw DomainError("second_moment_report needs epsilon > 0");
    SecondMomentReport r;
    r.d = d;
    r.q = q;
    r.k = k;
    r.epsilon = epsilon;
    const long double log_n_real = log_target_order(d, q, k, epsilon);
    if (log_n_real < std::log(9.0e18L)) {
        const auto n = static_cast<std::uint64_t>(std::ceil(std::exp(log_n_real)));
        r.n = std::max<std::uint64_t>(n, k);
        r.log_n = LogValue::from_log(std::log(static_cast<double>(*r.n)));
        r.log_mu = expected_copies_mu(d, q, k, *r.n);
    } else {
        r.log_n = LogValue::from_log(static_cast<double>(log_n_real));
        r.log_mu = expected_copies_mu_from_log_n(d, q, k, log_n_real);
    }
    r.mu_floor = LogValue::from_log(std::log(16.0 * std::log(static_cast<double>(q))) +
                                    2.0 * d * std::log(static_cast<double>(k)));
    r.mu_floor_holds = r.log_mu >= r.mu_floor;

    const double log_kd = d * std::log(static_cast<double>(k));
    r.log_max_Ld_times_kd = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 1; i < k; ++i) {
        double v = overlap_factor(d, q, k, epsilon, i).log() + log_kd;
        if (v > r.log_max_Ld_times_kd) {
            r.log_max_Ld_times_kd = v;
            r.argmax_i = i;
        }
    }
    r.max_Ld_times_kd = std::exp(r.log_max_Ld_times_kd);
    r.log_delta_over_mu_bound = delta_over_mu_bound(d, q, k, epsilon);
    r.epsilon_in_proved_regime = epsilon <= std::log(static_cast<double>(q)) / 8.0;
    return r;
}

}  // namespace ulab
