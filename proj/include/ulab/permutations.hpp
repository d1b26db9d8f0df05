#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ulab/random.hpp"

namespace ulab {

// A bijection of [n], stored as the values sigma(1), ..., sigma(n).
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> values);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    std::uint32_t operator()(std::size_t i) const { return values_[i - 1]; }  // 1-based
    const std::vector<std::uint32_t>& values() const noexcept { return values_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> values_;
};

// Digits when n <= 9 ("2413"), comma-separated otherwise.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

// All permutations of [k] in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);

using SupportVector = std::vector<std::uint32_t>;

// A d-permutation of order n: a (d+1)-dimensional 0/1 array of order n with
// exactly one 1 on every line, stored as the set of its 1-cells (n^d vectors of
// length d+1, entries in [1, n]).
class DPermutation {
public:
    // Validates the line condition; on failure the DomainError names the axis
    // and the fixed coordinates of the offending line.
    DPermutation(std::size_t d, std::size_t n, std::vector<SupportVector> support);

    std::size_t d() const noexcept { return d_; }
    std::size_t order() const noexcept { return n_; }
    // Sorted lexicographically.
    const std::vector<SupportVector>& support() const noexcept { return support_; }

private:
    std::size_t d_;
    std::size_t n_;
    std::vector<SupportVector> support_;
};

// Support (i, j, L[i][j]) of a Latin square given as rows of 1-based symbols.
DPermutation dpermutation_from_latin_square(const std::vector<std::vector<std::uint32_t>>& rows);

// (sigma_1, ..., sigma_d), each a permutation of [k].
struct DPattern {
    std::vector<Permutation> components;

    std::size_t d() const noexcept { return components.size(); }
    std::size_t order() const { return components.empty() ? 0 : components.front().size(); }
};

DPattern make_pattern(std::vector<Permutation> components);
// Components separated by '/', e.g. "21/12".
DPattern parse_pattern(std::string_view text);

bool permutation_contains(const Permutation& sigma, const Permutation& tau);

DPermutation permutation_to_dpermutation(const Permutation& sigma);

bool dperm_contains_pattern(const DPermutation& m, const DPattern& pattern);

// Every one of the (k!)^d patterns; guarded at 10^6 patterns.
bool is_k_pattern_universal(const DPermutation& m, std::size_t k);

// Longest chain of support vectors increasing in every coordinate.
std::size_t longest_monotone_subsequence(const DPermutation& m);

Permutation sample_random_permutation(std::size_t n, Engine& engine);
Permutation sample_random_permutation(std::size_t n, const RandomSource& source);

namespace detail {
// O(|support|^2) chain DP, used for d >= 2 (d = 1 uses patience sorting).
std::size_t longest_chain_quadratic(const std::vector<SupportVector>& sorted_support);
}

}  // namespace ulab
