#pragma once

// Independent brute-force references shared by the unit tests and the
// acceptance suite. None of these call the library's own search code.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ulab/darray.hpp"
#include "ulab/random.hpp"
#include "ulab/words.hpp"

namespace oracle {

using Symbols = std::vector<std::uint32_t>;

// Calls visit(idx) for every strictly increasing 0-based index vector of
// length m drawn from [0, n).
inline void for_each_subset(std::size_t n, std::size_t m,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (m > n) return;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Number of index subsets of w that spell u.
inline std::uint64_t count_embeddings(const Symbols& w, const Symbols& u) {
    std::uint64_t count = 0;
    for_each_subset(w.size(), u.size(), [&](const std::vector<std::size_t>& idx) {
        bool ok = true;
        for (std::size_t j = 0; j < idx.size() && ok; ++j) ok = w[idx[j]] == u[j];
        if (ok) ++count;
    });
    return count;
}

inline bool is_subsequence(const Symbols& w, const Symbols& u) { return count_embeddings(w, u) > 0; }

// Every word of length len over [q], lexicographic.
inline std::vector<Symbols> all_words(std::uint32_t q, std::size_t len) {
    std::vector<Symbols> out;
    Symbols cur(len, 1);
    while (true) {
        out.push_back(cur);
        std::size_t pos = len;
        while (pos > 0 && cur[pos - 1] == q) cur[--pos] = 1;
        if (pos == 0) return out;
        ++cur[pos - 1];
    }
}

// k-universality by counting distinct length-k subsequences: w is k-universal
// iff it has q^k of them.
inline bool is_k_universal(const Symbols& w, std::uint32_t q, std::size_t k) {
    std::set<Symbols> seen;
    for_each_subset(w.size(), k, [&](const std::vector<std::size_t>& idx) {
        Symbols u;
        for (std::size_t i : idx) u.push_back(w[i]);
        seen.insert(u);
    });
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    return seen.size() == total;
}

inline long double binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
    return r;
}

// All arrays reachable from a by iterated coordinate restriction, including a.
inline std::set<std::string> restriction_closure(const ulab::DArray& a) {
    std::set<std::string> seen{a.canonical_key()};
    std::vector<ulab::DArray> frontier{a};
    while (!frontier.empty()) {
        std::vector<ulab::DArray> next;
        for (const auto& cur : frontier) {
            for (std::size_t axis = 1; axis <= cur.d(); ++axis) {
                if (cur.shape()[axis - 1] == 1) continue;
                for (std::size_t i = 1; i <= cur.shape()[axis - 1]; ++i) {
                    ulab::DArray r = ulab::coordinate_restrict(cur, axis, i);
                    if (seen.insert(r.canonical_key()).second) next.push_back(std::move(r));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Uniform array with every extent drawn from [1, max_order].
inline ulab::DArray random_array(std::size_t d, std::uint32_t q, std::size_t max_order,
                                 ulab::Engine& engine) {
    std::vector<std::size_t> dims(d);
    std::size_t cells = 1;
    for (auto& n : dims) {
        n = 1 + engine.below(max_order);
        cells *= n;
    }
    std::vector<ulab::Symbol> values(cells);
    for (auto& v : values) v = 1 + static_cast<ulab::Symbol>(engine.below(q));
    return ulab::DArray(ulab::Alphabet(q), ulab::Shape(dims), values);
}

}  // namespace oracle
