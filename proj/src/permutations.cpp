#include "ulab/permutations.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ulab {

namespace {

std::vector<std::uint32_t> parse_values(std::string_view text) {
    std::vector<std::uint32_t> values;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw DomainError(std::string("invalid permutation character '") + c + "'");
            values.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        return values;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        std::string_view tok = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                                : end - start);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw DomainError("invalid permutation entry '" + std::string(tok) + "'");
        }
        values.push_back(v);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return values;
}

std::string describe_line(const SupportVector& projected, std::size_t axis) {
    std::string out = "(";
    std::size_t src = 0;
    for (std::size_t j = 0; j <= projected.size(); ++j) {
        if (j) out += ",";
        out += (j == axis) ? std::string("*") : std::to_string(projected[src++]);
    }
    return out + ")";
}

// Rank-gap window for placing pattern value `rank` given the already placed
// (rank, coordinate) pairs: every placed value below leaves room for the ranks
// in between, and likewise above.
struct Window {
    std::uint64_t lo;
    std::uint64_t hi;
};

Window rank_window(std::uint32_t rank, std::size_t k, std::size_t n,
                   const std::vector<std::uint32_t>& placed_ranks,
                   const std::vector<std::uint32_t>& placed_coords) {
    std::uint64_t lo = rank;
    std::uint64_t hi = n - (k - rank);
    for (std::size_t s = 0; s < placed_ranks.size(); ++s) {
        if (placed_ranks[s] < rank) {
            lo = std::max<std::uint64_t>(lo, placed_coords[s] + (rank - placed_ranks[s]));
        } else {
            std::uint64_t gap = placed_ranks[s] - rank;
            if (placed_coords[s] < gap) return {1, 0};
            hi = std::min<std::uint64_t>(hi, placed_coords[s] - gap);
        }
    }
    return {lo, hi};
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (std::uint32_t v : values_) {
        if (v < 1 || v > values_.size() || seen[v]) {
            throw DomainError("not a permutation of [" + std::to_string(values_.size()) + "]");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_values(text)); }

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.size() > 9 && i) out += ",";
        out += std::to_string(p.values()[i]);
    }
    return out;
}

std::vector<Permutation> all_permutations(std::size_t k) {
    std::vector<std::uint32_t> v(k);
    std::iota(v.begin(), v.end(), 1u);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

DPermutation::DPermutation(std::size_t d, std::size_t n, std::vector<SupportVector> support)
    : d_(d), n_(n), support_(std::move(support)) {
    if (d < 1) throw DomainError("d-permutation needs d >= 1");
    if (n < 1) throw DomainError("d-permutation needs order n >= 1");
    std::uint64_t lines = 1;  // lines per axis = n^d
    for (std::size_t j = 0; j < d; ++j) {
        if (lines > 100'000'000ULL / n) throw DomainError("d-permutation too large");
        lines *= n;
    }
    for (const auto& v : support_) {
        if (v.size() != d + 1) throw DomainError("support vectors must have length d+1");
        for (auto x : v) {
            if (x < 1 || x > n) throw DomainError("support coordinate outside [1,n]");
        }
    }
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
        throw DomainError("duplicate support vector");
    }
    std::vector<std::uint32_t> count(lines);
    for (std::size_t axis = 0; axis <= d; ++axis) {
        std::fill(count.begin(), count.end(), 0);
        auto project = [&](const SupportVector& v) {
            SupportVector p;
            for (std::size_t j = 0; j <= d; ++j) {
                if (j != axis) p.push_back(v[j]);
            }
            return p;
        };
        auto encode = [&](const SupportVector& p) {
            std::uint64_t code = 0;
            for (auto x : p) code = code * n + (x - 1);
            return code;
        };
        for (const auto& v : support_) {
            SupportVector p = project(v);
            if (++count[encode(p)] > 1) {
                throw DomainError("line violation: line " + describe_line(p, axis) + " along axis " +
                                  std::to_string(axis + 1) + " contains more than one 1");
            }
        }
        for (std::uint64_t code = 0; code < lines; ++code) {
            if (count[code] == 0) {
                SupportVector p(d);
                std::uint64_t c = code;
                for (std::size_t j = d; j-- > 0;) {
                    p[j] = static_cast<std::uint32_t>(c % n + 1);
                    c /= n;
                }
                throw DomainError("line violation: line " + describe_line(p, axis) + " along axis " +
                                  std::to_string(axis + 1) + " contains no 1");
            }
        }
    }
}

DPermutation dpermutation_from_latin_square(const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t n = rows.size();
    std::vector<SupportVector> support;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DomainError("latin square must be n x n");
        for (std::size_t j = 0; j < n; ++j) {
            support.push_back({static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j + 1),
                               rows[i][j]});
        }
    }
    return DPermutation(2, n, std::move(support));
}

DPattern make_pattern(std::vector<Permutation> components) {
    if (components.empty()) throw DomainError("pattern needs at least one component");
    for (const auto& c : components) {
        if (c.size() != components.front().size()) throw DomainError("pattern components differ in order");
    }
    return DPattern{std::move(components)};
}

DPattern parse_pattern(std::string_view text) {
    std::vector<Permutation> components;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find('/', start);
        components.push_back(parse_permutation(
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return make_pattern(std::move(components));
}

bool permutation_contains(const Permutation& sigma, const Permutation& tau) {
    const std::size_t n = sigma.size();
    const std::size_t k = tau.size();
    if (k > n) return false;
    std::vector<std::uint32_t> ranks, coords;
    ranks.reserve(k);
    coords.reserve(k);
    auto search = [&](auto& self, std::size_t t, std::size_t next_pos) -> bool {
        if (t == k) return true;
        const std::uint32_t rank = tau.values()[t];
        const Window w = rank_window(rank, k, n, ranks, coords);
        for (std::size_t pos = next_pos; pos + (k - t) <= n; ++pos) {
            const std::uint32_t v = sigma.values()[pos];
            if (v < w.lo || v > w.hi) continue;
            ranks.push_back(rank);
            coords.push_back(v);
            if (self(self, t + 1, pos + 1)) return true;
            ranks.pop_back();
            coords.pop_back();
        }
        return false;
    };
    return search(search, 0, 0);
}

DPermutation permutation_to_dpermutation(const Permutation& sigma) {
    std::vector<SupportVector> support;
    support.reserve(sigma.size());
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
        support.push_back({static_cast<std::uint32_t>(i), sigma(i)});
    }
    return DPermutation(1, sigma.size(), std::move(support));
}

bool dperm_contains_pattern(const DPermutation& m, const DPattern& pattern) {
    if (pattern.d() != m.d()) throw DomainError("pattern dimension does not match d-permutation");
    const std::size_t n = m.order();
    const std::size_t k = pattern.order();
    const std::size_t d = m.d();
    if (k > n) return false;

    // rows[x] = support vectors with first coordinate x + 1
    std::vector<std::vector<const SupportVector*>> rows(n);
    for (const auto& v : m.support()) rows[v[0] - 1].push_back(&v);

    std::vector<std::vector<std::uint32_t>> ranks(d), coords(d);
    auto search = [&](auto& self, std::size_t t, std::size_t next_row) -> bool {
        if (t == k) return true;
        std::vector<Window> windows(d);
        for (std::size_t l = 0; l < d; ++l) {
            windows[l] = rank_window(pattern.components[l].values()[t], k, n, ranks[l], coords[l]);
            if (windows[l].lo > windows[l].hi) return false;
        }
        for (std::size_t row = next_row; row + (k - t) <= n; ++row) {
            for (const SupportVector* v : rows[row]) {
                bool fits = true;
                for (std::size_t l = 0; l < d && fits; ++l) {
                    fits = (*v)[l + 1] >= windows[l].lo && (*v)[l + 1] <= windows[l].hi;
                }
                if (!fits) continue;
                for (std::size_t l = 0; l < d; ++l) {
                    ranks[l].push_back(pattern.components[l].values()[t]);
                    coords[l].push_back((*v)[l + 1]);
                }
                if (self(self, t + 1, row + 1)) return true;
                for (std::size_t l = 0; l < d; ++l) {
                    ranks[l].pop_back();
                    coords[l].pop_back();
                }
            }
        }
        return false;
    };
    return search(search, 0, 0);
}

bool is_k_pattern_universal(const DPermutation& m, std::size_t k) {
    const auto perms = all_permutations(k);
    std::uint64_t total = 1;
    for (std::size_t l = 0; l < m.d(); ++l) {
        if (total > 1'000'000 / perms.size()) throw DomainError("instance too large");
        total *= perms.size();
    }
    std::vector<std::size_t> odo(m.d(), 0);
    while (true) {
        std::vector<Permutation> comps;
        for (std::size_t idx : odo) comps.push_back(perms[idx]);
        if (!dperm_contains_pattern(m, DPattern{std::move(comps)})) return false;
        std::size_t j = odo.size();
        while (j > 0 && odo[j - 1] + 1 == perms.size()) odo[--j] = 0;
        if (j == 0) return true;
        ++odo[j - 1];
    }
}

namespace detail {

std::size_t longest_chain_quadratic(const std::vector<SupportVector>& sorted_support) {
    const std::size_t count = sorted_support.size();
    std::vector<std::size_t> best(count, 1);
    std::size_t overall = count ? 1 : 0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& vi = sorted_support[i];
        for (std::size_t j = 0; j < i; ++j) {
            const auto& vj = sorted_support[j];
            bool below = true;
            for (std::size_t c = 0; c < vi.size() && below; ++c) below = vj[c] < vi[c];
            if (below) best[i] = std::max(best[i], best[j] + 1);
        }
        overall = std::max(overall, best[i]);
    }
    return overall;
}

}  // namespace detail

std::size_t longest_monotone_subsequence(const DPermutation& m) {
    if (m.d() >= 2) return detail::longest_chain_quadratic(m.support());
    // d = 1: first coordinates are 1..n in order, so this is the longest
    // increasing subsequence of the second coordinates (patience sorting).
    std::vector<std::uint32_t> tails;
    for (const auto& v : m.support()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v[1]);
        if (it == tails.end()) {
            tails.push_back(v[1]);
        } else {
            *it = v[1];
        }
    }
    return tails.size();
}

Permutation sample_random_permutation(std::size_t n, Engine& engine) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = engine.below(i);
        std::swap(v[i - 1], v[j]);
    }
    return Permutation(std::move(v));
}

Permutation sample_random_permutation(std::size_t n, const RandomSource& source) {
    Engine engine = source.engine();
    return sample_random_permutation(n, engine);
}

}  // namespace ulab
