#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ulab/random.hpp"
#include "ulab/words.hpp"

namespace ulab {

// Extents (n_1, ..., n_d), d >= 1, every n_j >= 1.
class Shape {
public:
    explicit Shape(std::vector<std::size_t> dims);
    static Shape cube(std::size_t d, std::size_t n);

    std::size_t d() const noexcept { return dims_.size(); }
    std::size_t operator[](std::size_t axis) const { return dims_[axis]; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t cell_count() const;
    bool is_cube() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::size_t> dims_;
};

// d-dimensional array over [q], cells stored row-major (last axis fastest).
class DArray {
public:
    DArray(Alphabet alphabet, Shape shape, std::vector<Symbol> cells);
    // All cells equal to 1.
    DArray(Alphabet alphabet, Shape shape);
    static DArray from_word(const Word& w);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t q() const noexcept { return alphabet_.size(); }
    const Shape& shape() const noexcept { return shape_; }
    std::size_t d() const noexcept { return shape_.d(); }
    const std::vector<Symbol>& cells() const noexcept { return cells_; }

    // 1-based multi-index.
    Symbol at(const std::vector<std::size_t>& index) const;
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }

    // Shape prefix followed by the row-major cells; equal keys <=> equal arrays.
    std::string canonical_key() const;

    friend bool operator==(const DArray& a, const DArray& b) {
        return a.alphabet_ == b.alphabet_ && a.shape_ == b.shape_ && a.cells_ == b.cells_;
    }

private:
    Alphabet alphabet_;
    Shape shape_;
    std::vector<Symbol> cells_;
    std::vector<std::size_t> strides_;
};

// Per-axis strictly increasing, non-empty, 1-based index sets T_1, ..., T_d.
struct IndexSelection {
    std::vector<std::vector<std::size_t>> sets;

    friend bool operator==(const IndexSelection&, const IndexSelection&) = default;
};

// Removes slice `index` (1-based) along `axis` (1-based). Throws
// "dimension collapse" when that axis has extent 1.
DArray coordinate_restrict(const DArray& a, std::size_t axis, std::size_t index);

DArray subarray(const DArray& a, const IndexSelection& selection);

bool contains_array(const DArray& a, const DArray& b);

// Lexicographically least selection (compared as T_1, then T_2, ...) whose
// induced subarray equals b.
std::optional<IndexSelection> find_embedding_array(const DArray& a, const DArray& b);

enum class UniversalityStrategy { kAuto, kSelectionSet, kPerTarget };

// True iff every order-k array over [q] is contained in a. The selection-set
// strategy needs prod_j C(n_j, k) <= kEnumerationBudget, the per-target
// strategy q^(k^d) <= kEnumerationBudget; otherwise "instance too large".
bool is_k_universal_array(const DArray& a, std::size_t k,
                          UniversalityStrategy strategy = UniversalityStrategy::kAuto);

// True when prod_j C(n_j, k) < q^(k^d), i.e. no array of this shape can be
// k-universal.
bool below_counting_floor(const Shape& shape, std::uint32_t q, std::size_t k);

// Smallest order n with C(n, k)^d >= q^(k^d).
std::size_t counting_floor_order(std::size_t d, std::uint32_t q, std::size_t k);

enum class SearchMode { kAuto, kExhaustive, kRandomized };

struct SearchProgress {
    std::size_t order;
    unsigned long long examined;
    unsigned long long total;
};

struct MinimalOrderOptions {
    SearchMode mode = SearchMode::kAuto;
    // Largest q^(n^d) an exhaustive sweep of one order may cover.
    unsigned long long exhaustive_budget = 1ULL << 26;
    std::size_t random_attempts = 2000;
    std::size_t max_order = 64;
    RandomSource source{};
    std::function<void(const SearchProgress&)> progress;
};

struct MinimalOrderResult {
    std::size_t order = 0;
    std::optional<DArray> witness;
    // true: every order below `order` was exhausted (or is below the counting
    // floor), so order == f_d(q, k). false: `order` is only an upper bound.
    bool exact = false;
    std::size_t proven_lower_bound = 0;
    std::size_t counting_floor = 0;
    // Largest order shown to admit no k-universal array, by sweep or by count.
    std::size_t ruled_out_through = 0;
};

// Smallest order admitting a k-universal d-array over [q]. Exhaustive sweeps
// enumerate every q^(n^d) array, starting at n = k; the randomized fallback
// samples arrays from the counting floor upward and flags the result non-exact.
MinimalOrderResult minimal_universal_order(std::size_t d, std::uint32_t q, std::size_t k,
                                           const MinimalOrderOptions& options = {});

DArray sample_uniform_array(std::size_t d, std::uint32_t q, std::size_t n, Engine& engine);
DArray sample_uniform_array(std::size_t d, std::uint32_t q, std::size_t n,
                            const RandomSource& source);

ExperimentRecord estimate_array_universal_probability(std::size_t d, std::uint32_t q,
                                                      std::size_t k, std::size_t n,
                                                      std::size_t trials,
                                                      const RandomSource& source,
                                                      unsigned threads = 1);

}  // namespace ulab
