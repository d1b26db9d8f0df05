#include "ulab/darray.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ulab/parallel.hpp"

namespace ulab {

namespace {

using boost::multiprecision::cpp_int;

cpp_int exact_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    cpp_int result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

long double log_binomial_approx(std::size_t n, std::size_t k) {
    return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
           std::lgamma(static_cast<long double>(n - k) + 1);
}

// k^d, saturating at `limit + 1`.
unsigned long long saturating_power(std::size_t base, std::size_t exp, unsigned long long limit) {
    return detail::checked_power(base, exp, limit);
}

// Product of C(n_j, k) over the axes, saturating at limit + 1.
unsigned long long selection_count(const Shape& shape, std::size_t k, unsigned long long limit) {
    unsigned long long total = 1;
    for (std::size_t n : shape.dims()) {
        cpp_int c = exact_binomial(n, k);
        if (c == 0) return 0;
        if (c > limit || total > limit / static_cast<unsigned long long>(c)) return limit + 1;
        total *= static_cast<unsigned long long>(c);
    }
    return total;
}

// q^(k^d), saturating at limit + 1.
unsigned long long target_count(std::uint32_t q, std::size_t k, std::size_t d,
                                unsigned long long limit) {
    unsigned long long cells = saturating_power(k, d, limit);
    if (cells > limit) return q == 1 ? 1 : limit + 1;
    return detail::checked_power(q, cells, limit);
}

// All m-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m > n) return out;
    std::vector<std::size_t> cur(m);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::size_t> row_major_strides(const Shape& shape) {
    std::vector<std::size_t> strides(shape.d(), 1);
    for (std::size_t j = shape.d(); j-- > 1;) strides[j - 1] = strides[j] * shape[j];
    return strides;
}

// Offsets of the cells of the sub-box T_1 x ... x T_m (row-major), where
// per_axis[j] lists the flat offsets contributed by the chosen indices.
void expand_offsets(const std::vector<std::vector<std::size_t>>& per_axis,
                    std::vector<std::size_t>& out, std::vector<std::size_t>& scratch) {
    out.assign(1, 0);
    for (const auto& axis : per_axis) {
        scratch.clear();
        scratch.reserve(out.size() * axis.size());
        for (std::size_t base : out) {
            for (std::size_t o : axis) scratch.push_back(base + o);
        }
        out.swap(scratch);
    }
}

// Enumerates every order-k selection of an array shape and collects the
// distinct induced subarrays as base-q row-major codes.
class SelectionSetKernel {
public:
    SelectionSetKernel(const Shape& shape, std::uint32_t q, std::size_t k) : q_(q) {
        const auto strides = row_major_strides(shape);
        targets_ = target_count(q, k, shape.d(), 1ULL << 27);
        if (targets_ > (1ULL << 27)) throw DomainError("instance too large");
        for (std::size_t j = 0; j < shape.d(); ++j) {
            std::vector<std::vector<std::size_t>> axis;
            for (auto& combo : combinations(shape[j], k)) {
                for (auto& idx : combo) idx *= strides[j];
                axis.push_back(std::move(combo));
            }
            axis_offsets_.push_back(std::move(axis));
        }
        seen_.assign((targets_ + 63) / 64, 0);
    }

    // Number of distinct order-k subarrays, stopping once all q^(k^d) appear.
    unsigned long long distinct(const Symbol* cells) {
        for (std::uint64_t code : touched_) seen_[code >> 6] = 0;
        touched_.clear();
        const std::size_t d = axis_offsets_.size();
        for (const auto& axis : axis_offsets_) {
            if (axis.empty()) return 0;
        }
        std::vector<std::size_t> odo(d, 0);
        std::vector<std::vector<std::size_t>> chosen(d);
        unsigned long long found = 0;
        while (true) {
            for (std::size_t j = 0; j < d; ++j) chosen[j] = axis_offsets_[j][odo[j]];
            expand_offsets(chosen, offsets_, scratch_);
            std::uint64_t code = 0;
            for (std::size_t o : offsets_) code = code * q_ + (cells[o] - 1);
            const std::uint64_t bit = std::uint64_t{1} << (code & 63);
            if (!(seen_[code >> 6] & bit)) {
                seen_[code >> 6] |= bit;
                touched_.push_back(code);
                if (++found == targets_) return found;
            }
            std::size_t j = d;
            while (j > 0 && odo[j - 1] + 1 == axis_offsets_[j - 1].size()) odo[--j] = 0;
            if (j == 0) break;
            ++odo[j - 1];
        }
        return found;
    }

    unsigned long long targets() const noexcept { return targets_; }

private:
    std::uint32_t q_;
    unsigned long long targets_ = 0;
    std::vector<std::vector<std::vector<std::size_t>>> axis_offsets_;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint64_t> touched_;
    std::vector<std::size_t> offsets_, scratch_;
};

// Advances cells through [1, q]^N in lexicographic order; false after the last.
bool next_cells(std::vector<Symbol>& cells, std::uint32_t q) {
    std::size_t pos = cells.size();
    while (pos > 0 && cells[pos - 1] == q) cells[--pos] = 1;
    if (pos == 0) return false;
    ++cells[pos - 1];
    return true;
}

void require_same_kind(const DArray& a, const DArray& b) {
    if (a.d() != b.d()) throw DomainError("dimension mismatch");
    if (!(a.alphabet() == b.alphabet())) throw DomainError("alphabet mismatch");
}

}  // namespace

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw DomainError("shape needs d >= 1");
    for (std::size_t n : dims_) {
        if (n == 0) throw DomainError("shape extents must be positive");
    }
}

Shape Shape::cube(std::size_t d, std::size_t n) { return Shape(std::vector<std::size_t>(d, n)); }

std::size_t Shape::cell_count() const {
    std::size_t total = 1;
    for (std::size_t n : dims_) {
        if (total > std::numeric_limits<std::size_t>::max() / n) throw DomainError("array too large");
        total *= n;
    }
    return total;
}

bool Shape::is_cube() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](std::size_t n) { return n == dims_[0]; });
}

DArray::DArray(Alphabet alphabet, Shape shape, std::vector<Symbol> cells)
    : alphabet_(alphabet), shape_(std::move(shape)), cells_(std::move(cells)) {
    if (cells_.size() != shape_.cell_count()) {
        throw DomainError("cell count " + std::to_string(cells_.size()) + " does not match shape (" +
                          std::to_string(shape_.cell_count()) + " cells)");
    }
    for (Symbol s : cells_) {
        if (!alphabet_.contains(s)) {
            throw DomainError("symbol " + std::to_string(s) + " outside [1," +
                              std::to_string(alphabet_.size()) + "]");
        }
    }
    strides_ = row_major_strides(shape_);
}

DArray::DArray(Alphabet alphabet, Shape shape)
    : DArray(alphabet, shape, std::vector<Symbol>(shape.cell_count(), 1)) {}

DArray DArray::from_word(const Word& w) {
    if (w.empty()) throw DomainError("empty word has no array form");
    return DArray(w.alphabet(), Shape({w.size()}), w.symbols());
}

Symbol DArray::at(const std::vector<std::size_t>& index) const {
    if (index.size() != d()) throw DomainError("index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < d(); ++j) {
        if (index[j] < 1 || index[j] > shape_[j]) throw DomainError("index out of range");
        flat += (index[j] - 1) * strides_[j];
    }
    return cells_[flat];
}

std::string DArray::canonical_key() const {
    std::ostringstream out;
    out << q() << '|';
    for (std::size_t j = 0; j < d(); ++j) out << (j ? "x" : "") << shape_[j];
    out << '|';
    for (std::size_t i = 0; i < cells_.size(); ++i) out << (i ? "," : "") << cells_[i];
    return out.str();
}

DArray coordinate_restrict(const DArray& a, std::size_t axis, std::size_t index) {
    if (axis < 1 || axis > a.d()) throw DomainError("axis out of range");
    const std::size_t j = axis - 1;
    if (index < 1 || index > a.shape()[j]) throw DomainError("index out of range");
    if (a.shape()[j] == 1) throw DomainError("dimension collapse");
    std::vector<std::size_t> dims = a.shape().dims();
    --dims[j];
    // cells are blocks of `inner` consecutive entries per index along axis j
    const std::size_t inner = a.stride(j);
    const std::size_t extent = a.shape()[j];
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size() / extent * (extent - 1));
    for (std::size_t base = 0; base < a.cells().size(); base += inner * extent) {
        for (std::size_t l = 0; l < extent; ++l) {
            if (l == index - 1) continue;
            auto first = a.cells().begin() + static_cast<std::ptrdiff_t>(base + l * inner);
            cells.insert(cells.end(), first, first + static_cast<std::ptrdiff_t>(inner));
        }
    }
    return DArray(a.alphabet(), Shape(std::move(dims)), std::move(cells));
}

DArray subarray(const DArray& a, const IndexSelection& selection) {
    if (selection.sets.size() != a.d()) throw DomainError("invalid selection: arity mismatch");
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> per_axis;
    for (std::size_t j = 0; j < a.d(); ++j) {
        const auto& set = selection.sets[j];
        if (set.empty()) throw DomainError("invalid selection: empty index set");
        std::vector<std::size_t> offsets;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 1 || set[i] > a.shape()[j] || (i > 0 && set[i] <= set[i - 1])) {
                throw DomainError("invalid selection on axis " + std::to_string(j + 1));
            }
            offsets.push_back((set[i] - 1) * a.stride(j));
        }
        dims.push_back(set.size());
        per_axis.push_back(std::move(offsets));
    }
    std::vector<std::size_t> offsets, scratch;
    expand_offsets(per_axis, offsets, scratch);
    std::vector<Symbol> cells;
    cells.reserve(offsets.size());
    for (std::size_t o : offsets) cells.push_back(a.cells()[o]);
    return DArray(a.alphabet(), Shape(std::move(dims)), std::move(cells));
}

std::optional<IndexSelection> find_embedding_array(const DArray& a, const DArray& b) {
    require_same_kind(a, b);
    const std::size_t d = a.d();
    for (std::size_t j = 0; j < d; ++j) {
        if (b.shape()[j] > a.shape()[j]) return std::nullopt;
    }

    // Axes 1..d-1 are enumerated exhaustively in lexicographic order; once they
    // are fixed, the last axis reduces to subsequence matching of slices, where
    // the leftmost-greedy choice is both complete and lexicographically least.
    std::vector<std::vector<std::size_t>> chosen(d - 1);
    std::vector<std::vector<std::size_t>> a_axis(d - 1), b_axis(d - 1);
    for (std::size_t j = 0; j + 1 < d; ++j) {
        for (std::size_t i = 0; i < b.shape()[j]; ++i) b_axis[j].push_back(i * b.stride(j));
    }
    std::vector<std::size_t> b_offsets, a_offsets, scratch;
    expand_offsets(b_axis, b_offsets, scratch);

    const std::size_t last_a = a.shape()[d - 1];
    const std::size_t last_b = b.shape()[d - 1];
    std::vector<std::size_t> last_choice;

    auto greedy_last_axis = [&]() -> bool {
        for (std::size_t j = 0; j + 1 < d; ++j) {
            a_axis[j].clear();
            for (std::size_t idx : chosen[j]) a_axis[j].push_back(idx * a.stride(j));
        }
        expand_offsets(a_axis, a_offsets, scratch);
        last_choice.clear();
        std::size_t l = 0;
        for (std::size_t t = 0; t < last_b; ++t) {
            bool matched = false;
            for (; l + (last_b - t) <= last_a; ++l) {
                bool slice_ok = true;
                for (std::size_t f = 0; f < a_offsets.size(); ++f) {
                    if (a.cells()[a_offsets[f] + l] != b.cells()[b_offsets[f] + t]) {
                        slice_ok = false;
                        break;
                    }
                }
                if (slice_ok) {
                    last_choice.push_back(l);
                    ++l;
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t axis) -> bool {
        if (axis + 1 == d) return greedy_last_axis();
        for (auto& combo : combinations(a.shape()[axis], b.shape()[axis])) {
            chosen[axis] = std::move(combo);
            if (search(axis + 1)) return true;
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    IndexSelection selection;
    for (auto& set : chosen) {
        for (auto& idx : set) ++idx;
        selection.sets.push_back(std::move(set));
    }
    for (auto& idx : last_choice) ++idx;
    selection.sets.push_back(std::move(last_choice));
    return selection;
}

bool contains_array(const DArray& a, const DArray& b) {
    return find_embedding_array(a, b).has_value();
}

bool below_counting_floor(const Shape& shape, std::uint32_t q, std::size_t k) {
    for (std::size_t n : shape.dims()) {
        if (n < k) return true;
    }
    if (q == 1) return false;
    long double log_selections = 0;
    for (std::size_t n : shape.dims()) log_selections += log_binomial_approx(n, k);
    const long double cells = std::pow(static_cast<long double>(k), static_cast<long double>(shape.d()));
    const long double log_targets = cells * std::log(static_cast<long double>(q));
    const long double slack = 1e-9L * std::max<long double>(1, std::fabs(log_targets));
    if (log_selections < log_targets - slack) return true;
    if (log_selections > log_targets + slack) return false;
    cpp_int selections = 1;
    for (std::size_t n : shape.dims()) selections *= exact_binomial(n, k);
    cpp_int targets = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(cells));
    return selections < targets;
}

std::size_t counting_floor_order(std::size_t d, std::uint32_t q, std::size_t k) {
    if (d == 0 || k == 0) throw DomainError("counting floor needs d, k >= 1");
    auto below = [&](std::size_t n) { return below_counting_floor(Shape::cube(d, n), q, k); };
    if (!below(k)) return k;
    std::size_t lo = k, hi = 2 * k;
    while (below(hi)) {
        lo = hi;
        if (hi > (std::numeric_limits<std::size_t>::max() >> 2)) throw DomainError("counting floor overflows");
        hi *= 2;
    }
    // below(lo) && !below(hi)
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        (below(mid) ? lo : hi) = mid;
    }
    return hi;
}

bool is_k_universal_array(const DArray& a, std::size_t k, UniversalityStrategy strategy) {
    if (k == 0) return true;
    const auto selections = selection_count(a.shape(), k, kEnumerationBudget);
    const auto targets = target_count(a.q(), k, a.d(), kEnumerationBudget);
    const bool set_ok = selections <= kEnumerationBudget;
    const bool target_ok = targets <= kEnumerationBudget;
    if (strategy == UniversalityStrategy::kAuto) {
        if (!set_ok && !target_ok) throw DomainError("instance too large");
        strategy = set_ok ? UniversalityStrategy::kSelectionSet : UniversalityStrategy::kPerTarget;
    }
    if (strategy == UniversalityStrategy::kSelectionSet && !set_ok) throw DomainError("instance too large");
    if (strategy == UniversalityStrategy::kPerTarget && !target_ok) throw DomainError("instance too large");

    if (below_counting_floor(a.shape(), a.q(), k)) return false;

    if (strategy == UniversalityStrategy::kSelectionSet) {
        SelectionSetKernel kernel(a.shape(), a.q(), k);
        return kernel.distinct(a.cells().data()) == kernel.targets();
    }
    const Shape target_shape = Shape::cube(a.d(), k);
    std::vector<Symbol> cells(target_shape.cell_count(), 1);
    do {
        if (!contains_array(a, DArray(a.alphabet(), target_shape, cells))) return false;
    } while (next_cells(cells, a.q()));
    return true;
}

MinimalOrderResult minimal_universal_order(std::size_t d, std::uint32_t q, std::size_t k,
                                           const MinimalOrderOptions& options) {
    if (d == 0 || k == 0) throw DomainError("minimal order needs d, k >= 1");
    Alphabet alphabet(q);
    MinimalOrderResult result;
    result.counting_floor = counting_floor_order(d, q, k);
    const bool exhaustive_only = options.mode == SearchMode::kExhaustive;

    if (options.mode != SearchMode::kRandomized) {
        // In auto mode, orders below the counting floor are already ruled out
        // and are not swept.
        std::size_t n = exhaustive_only ? k : result.counting_floor;
        if (!exhaustive_only && result.counting_floor > k) result.ruled_out_through = result.counting_floor - 1;
        for (; n <= options.max_order; ++n) {
            const Shape shape = Shape::cube(d, n);
            const unsigned long long cells = shape.cell_count();
            const unsigned long long total = detail::checked_power(q, cells, options.exhaustive_budget);
            if (total > options.exhaustive_budget) {
                if (exhaustive_only) throw DomainError("instance too large");
                break;
            }
            SelectionSetKernel kernel(shape, q, k);
            std::vector<Symbol> grid(cells, 1);
            unsigned long long examined = 0;
            if (options.progress) options.progress(SearchProgress{n, 0, total});
            do {
                ++examined;
                if (kernel.distinct(grid.data()) == kernel.targets()) {
                    result.order = n;
                    result.witness = DArray(alphabet, shape, grid);
                    result.exact = true;
                    result.proven_lower_bound = n;
                    result.ruled_out_through = n - 1;
                    return result;
                }
                if (options.progress && (examined & 0xFFFF) == 0) {
                    options.progress(SearchProgress{n, examined, total});
                }
            } while (next_cells(grid, q));
            result.ruled_out_through = n;
        }
        if (exhaustive_only) throw DomainError("no universal array found up to order " +
                                               std::to_string(options.max_order));
    }

    result.proven_lower_bound = std::max({k, result.counting_floor, result.ruled_out_through + 1});
    for (std::size_t n = result.proven_lower_bound; n <= options.max_order; ++n) {
        const RandomSource order_source = options.source.split(n);
        for (std::size_t attempt = 0; attempt < options.random_attempts; ++attempt) {
            DArray candidate = sample_uniform_array(d, q, n, order_source.split(attempt));
            if (is_k_universal_array(candidate, k)) {
                result.order = n;
                result.witness = std::move(candidate);
                result.exact = n == result.proven_lower_bound;
                return result;
            }
            if (options.progress && (attempt & 0xFF) == 0xFF) {
                options.progress(SearchProgress{n, attempt + 1, options.random_attempts});
            }
        }
    }
    throw DomainError("no universal array found up to order " + std::to_string(options.max_order));
}

DArray sample_uniform_array(std::size_t d, std::uint32_t q, std::size_t n, Engine& engine) {
    Alphabet alphabet(q);
    Shape shape = Shape::cube(d, n);
    std::vector<Symbol> cells(shape.cell_count());
    for (auto& c : cells) c = static_cast<Symbol>(engine.below(q) + 1);
    return DArray(alphabet, std::move(shape), std::move(cells));
}

DArray sample_uniform_array(std::size_t d, std::uint32_t q, std::size_t n,
                            const RandomSource& source) {
    Engine engine = source.engine();
    return sample_uniform_array(d, q, n, engine);
}

ExperimentRecord estimate_array_universal_probability(std::size_t d, std::uint32_t q,
                                                      std::size_t k, std::size_t n,
                                                      std::size_t trials,
                                                      const RandomSource& source,
                                                      unsigned threads) {
    if (trials == 0) throw DomainError("trials must be at least 1");
    const Shape shape = Shape::cube(d, n);
    if (selection_count(shape, k, kEnumerationBudget) > kEnumerationBudget &&
        target_count(q, k, d, kEnumerationBudget) > kEnumerationBudget) {
        throw DomainError("instance too large");
    }
    auto hits = run_indexed(trials, threads, [&](std::size_t t) -> std::uint8_t {
        return is_k_universal_array(sample_uniform_array(d, q, n, source.split(t)), k) ? 1 : 0;
    });
    std::size_t successes = std::accumulate(hits.begin(), hits.end(), std::size_t{0});
    return make_record(q, k, n, trials, successes, source.master_seed);
}

}  // namespace ulab
