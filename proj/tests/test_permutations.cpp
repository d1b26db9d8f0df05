#include "doctest.h"

#include <map>
#include <set>

#include "oracles.hpp"
#include "ulab/permutations.hpp"

using namespace ulab;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

// Brute force over k-subsets of the support with distinct, increasing first
// coordinates.
bool contains_oracle(const DPermutation& m, const DPattern& p) {
    const auto& support = m.support();
    const std::size_t k = p.order();
    bool found = false;
    oracle::for_each_subset(support.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (found) return;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                if (a == b) continue;
                const auto& x = support[idx[a]];
                const auto& y = support[idx[b]];
                if ((x[0] < y[0]) != (a < b)) return;
                for (std::size_t l = 0; l < p.d(); ++l) {
                    if ((x[l + 1] < y[l + 1]) != (p.components[l](a + 1) < p.components[l](b + 1))) return;
                }
            }
        }
        found = true;
    });
    return found;
}

// Isotope of the cyclic Latin square: rows, columns and symbols relabelled.
DPermutation random_latin(std::size_t n, Engine& engine) {
    const auto r = sample_random_permutation(n, engine);
    const auto c = sample_random_permutation(n, engine);
    const auto s = sample_random_permutation(n, engine);
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[r(i + 1) - 1][c(j + 1) - 1] = s(((i + j) % n) + 1);
        }
    }
    return dpermutation_from_latin_square(rows);
}

std::vector<DPattern> all_patterns(std::size_t d, std::size_t k) {
    const auto perms = all_permutations(k);
    std::vector<DPattern> out;
    std::vector<std::size_t> odo(d, 0);
    while (true) {
        std::vector<Permutation> comps;
        for (auto i : odo) comps.push_back(perms[i]);
        out.push_back(make_pattern(comps));
        std::size_t j = d;
        while (j > 0 && odo[j - 1] + 1 == perms.size()) odo[--j] = 0;
        if (j == 0) return out;
        ++odo[j - 1];
    }
}

}  // namespace

TEST_CASE("permutation parsing and validation") {
    CHECK(perm("2413").values() == std::vector<std::uint32_t>{2, 4, 1, 3});
    CHECK(format_permutation(perm("2413")) == "2413");
    const auto big = parse_permutation("10,1,2,3,4,5,6,7,8,9");
    CHECK(big(1) == 10);
    CHECK(format_permutation(big) == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(perm("122"), DomainError);
    CHECK_THROWS_AS(perm("13"), DomainError);
    CHECK_THROWS_AS(perm("1a"), DomainError);
    CHECK(Permutation::identity(4) == perm("1234"));
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(3).front() == perm("123"));
    CHECK(all_permutations(3).back() == perm("321"));
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("d-permutation validation") {
    CHECK_NOTHROW(DPermutation(1, 2, {{1, 2}, {2, 1}}));
    CHECK_THROWS_AS(DPermutation(1, 2, {{1, 2}, {2, 2}}), DomainError);
    CHECK_THROWS_AS(DPermutation(1, 2, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(DPermutation(1, 2, {{1, 3}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(DPermutation(2, 2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}}), DomainError);
    try {
        DPermutation(1, 2, {{1, 1}, {2, 1}});
        FAIL("expected a line violation");
    } catch (const DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line violation") != std::string::npos);
        CHECK(msg.find("axis") != std::string::npos);
    }
    const auto latin = dpermutation_from_latin_square({{1, 2}, {2, 1}});
    CHECK(latin.d() == 2);
    CHECK(latin.support().size() == 4);
    CHECK_THROWS_AS(dpermutation_from_latin_square({{1, 2}, {1, 2}}), DomainError);

    Engine engine(3);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto m = random_latin(n, engine);
        CHECK(m.support().size() == n * n);
        CHECK(std::is_sorted(m.support().begin(), m.support().end()));
    }
}

TEST_CASE("permutation containment examples") {
    CHECK(permutation_contains(perm("2413"), perm("21")));
    CHECK_FALSE(permutation_contains(perm("1234"), perm("21")));
    CHECK(permutation_contains(perm("25314"), perm("231")));  // 2,5,1
    CHECK_FALSE(permutation_contains(perm("12"), perm("123")));
    CHECK(permutation_contains(perm("1"), perm("1")));
}

TEST_CASE("d = 1 containment matches permutations, exhaustively") {
    for (const auto& sigma : all_permutations(4)) {
        const auto m = permutation_to_dpermutation(sigma);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (const auto& tau : all_permutations(k)) {
                const bool direct = permutation_contains(sigma, tau);
                CHECK(dperm_contains_pattern(m, make_pattern({tau})) == direct);
                CHECK(contains_oracle(m, make_pattern({tau})) == direct);
            }
        }
    }
    const auto id = permutation_to_dpermutation(perm("123"));
    CHECK(id.support() == std::vector<SupportVector>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(permutation_to_dpermutation(perm("21")).support() == std::vector<SupportVector>{{1, 2}, {2, 1}});
}

TEST_CASE("2-permutations against brute force") {
    const auto square = dpermutation_from_latin_square({{1, 2}, {2, 1}});
    for (const auto& p : all_patterns(2, 2)) CHECK(dperm_contains_pattern(square, p) == contains_oracle(square, p));
    CHECK(dperm_contains_pattern(square, parse_pattern("1/1")));

    Engine engine(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + engine.below(4);
        const auto m = random_latin(n, engine);
        for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
            for (const auto& p : all_patterns(2, k)) CHECK(dperm_contains_pattern(m, p) == contains_oracle(m, p));
        }
    }
    CHECK_THROWS_AS(dperm_contains_pattern(square, parse_pattern("21")), DomainError);
    CHECK_THROWS_AS(parse_pattern("21/123"), DomainError);
}

TEST_CASE("sub-patterns of contained patterns are contained") {
    Engine engine(33);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_latin(4 + engine.below(2), engine);
        for (const auto& p : all_patterns(2, 3)) {
            if (!dperm_contains_pattern(m, p)) continue;
            for (std::size_t drop = 1; drop <= 3; ++drop) {
                std::vector<Permutation> comps;
                for (const auto& c : p.components) {
                    std::vector<std::uint32_t> vals;
                    for (std::size_t i = 1; i <= 3; ++i) {
                        if (i == drop) continue;
                        vals.push_back(c(i) > c(drop) ? c(i) - 1 : c(i));
                    }
                    comps.emplace_back(vals);
                }
                CHECK(dperm_contains_pattern(m, make_pattern(comps)));
            }
        }
    }
}

TEST_CASE("pattern universality") {
    CHECK(is_k_pattern_universal(permutation_to_dpermutation(perm("2413")), 1));
    CHECK(is_k_pattern_universal(permutation_to_dpermutation(perm("2413")), 2));
    CHECK_FALSE(is_k_pattern_universal(permutation_to_dpermutation(Permutation::identity(6)), 2));
    CHECK_FALSE(is_k_pattern_universal(permutation_to_dpermutation(perm("2413")), 3));
    for (const auto& sigma : all_permutations(5)) {
        bool all = true;
        for (const auto& tau : all_permutations(3)) all = all && permutation_contains(sigma, tau);
        CHECK(is_k_pattern_universal(permutation_to_dpermutation(sigma), 3) == all);
    }
    Engine engine(4);
    const auto m = random_latin(3, engine);
    CHECK(is_k_pattern_universal(m, 1));
    CHECK_THROWS_WITH_AS(is_k_pattern_universal(permutation_to_dpermutation(Permutation::identity(10)), 10),
                         "instance too large", DomainError);
}

TEST_CASE("longest monotone subsequence") {
    CHECK(longest_monotone_subsequence(permutation_to_dpermutation(Permutation::identity(50))) == 50);
    std::vector<std::uint32_t> rev(50);
    for (std::uint32_t i = 0; i < 50; ++i) rev[i] = 50 - i;
    CHECK(longest_monotone_subsequence(permutation_to_dpermutation(Permutation(rev))) == 1);

    Engine engine(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sigma = sample_random_permutation(1 + engine.below(30), engine);
        const auto m = permutation_to_dpermutation(sigma);
        CHECK(longest_monotone_subsequence(m) == detail::longest_chain_quadratic(m.support()));
    }
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_latin(2 + engine.below(4), engine);
        const std::size_t lis = longest_monotone_subsequence(m);
        for (std::size_t k = 1; k <= m.order(); ++k) {
            std::vector<Permutation> ids(2, Permutation::identity(k));
            CHECK((lis >= k) == dperm_contains_pattern(m, make_pattern(ids)));
        }
    }
}

TEST_CASE("random permutations") {
    CHECK(sample_random_permutation(1, RandomSource{1, 0}) == Permutation::identity(1));
    CHECK(sample_random_permutation(20, RandomSource{8, 3}) == sample_random_permutation(20, RandomSource{8, 3}));

    Engine engine(6);
    double fixed = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const auto p = sample_random_permutation(100, engine);
        for (std::size_t i = 1; i <= 100; ++i) fixed += p(i) == i;
    }
    // Fixed points are approximately Poisson(1): SE of the mean is about 1 / sqrt(trials).
    CHECK(std::abs(fixed / trials - 1.0) < 4.0 / std::sqrt(static_cast<double>(trials)));

    std::map<std::vector<std::uint32_t>, int> seen;
    for (int t = 0; t < 10000; ++t) ++seen[sample_random_permutation(3, engine).values()];
    CHECK(seen.size() == 6);
    for (const auto& [p, c] : seen) CHECK(std::abs(c - 10000.0 / 6) < 200);
}
