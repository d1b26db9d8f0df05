#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "ulab/words.hpp"

using namespace ulab;

namespace {

Word w2(const char* text) { return parse_word(text, 2); }

std::string fmt(const Word& w) { return format_word(w); }

}  // namespace

TEST_CASE("alphabet and word validation") {
    CHECK_THROWS_AS(Alphabet(0), DomainError);
    CHECK_THROWS_AS(Word(Alphabet(2), {1, 3}), DomainError);
    CHECK_THROWS_AS(parse_word("123", 2), DomainError);
    CHECK_THROWS_AS(parse_word("0", 2), DomainError);
    CHECK(parse_word("", 3).empty());

    const Word w = parse_word("1,12,3", 12);
    CHECK(w.symbols() == std::vector<Symbol>{1, 12, 3});
    CHECK(fmt(w) == "1,12,3");
    CHECK(fmt(parse_word("121212", 2)) == "121212");
    CHECK_THROWS_AS(parse_word("1,13", 12), DomainError);
}

TEST_CASE("decompose examples") {
    auto check = [](const char* text, std::vector<std::string> blocks, std::string tail) {
        const auto dec = decompose(w2(text));
        std::vector<std::string> got;
        for (const auto& b : dec.blocks) got.push_back(fmt(b));
        CHECK(got == blocks);
        CHECK(fmt(dec.tail) == tail);
        CHECK(dec.index() == blocks.size());
    };
    check("1122", {"112"}, "2");
    check("112212", {"112", "21"}, "2");
    check("", {}, "");
    check("1212", {"12", "12"}, "");
}

TEST_CASE("universality index examples") {
    CHECK(universality_index(w2("121212")) == 3);
    CHECK(universality_index(w2("111111")) == 0);
    CHECK(universality_index(w2("1122")) == 1);
    CHECK(universality_index(parse_word("11111", 1)) == 5);

    CHECK(is_k_universal(w2("1212"), 2));
    CHECK_FALSE(is_k_universal(w2("1212"), 3));
    CHECK(is_k_universal(w2("112212"), 2));
    CHECK_FALSE(is_k_universal(w2("112212"), 3));
}

TEST_CASE("containment and embeddings") {
    CHECK_FALSE(contains_subword(w2("1122"), w2("21")));
    CHECK(contains_subword(w2("1122"), w2("12")));
    CHECK(contains_subword(w2("1122"), w2("")));
    CHECK(contains_subword(w2(""), w2("")));

    CHECK(find_embedding(w2("112212"), w2("22")) == std::vector<std::size_t>{3, 4});
    CHECK_FALSE(find_embedding(w2("12"), w2("21")).has_value());
    CHECK(find_embedding(w2("11"), w2("1")) == std::vector<std::size_t>{1});
}

TEST_CASE("witness examples") {
    CHECK(fmt(non_contained_witness(w2("1122"), 2)) == "21");
    CHECK(fmt(non_contained_witness(w2(""), 1)) == "1");
    const Word w = non_contained_witness(w2("1212"), 3);
    CHECK(fmt(w) == "221");
    CHECK_FALSE(contains_subword(w2("1212"), w));
    CHECK_THROWS_WITH_AS(non_contained_witness(w2("1212"), 2), "already k-universal", DomainError);
}

TEST_CASE("minimal universal word") {
    CHECK(fmt(minimal_universal_word(2, 3)) == "121212");
    CHECK(fmt(minimal_universal_word(1, 5)) == "11111");
    CHECK(fmt(minimal_universal_word(3, 2)) == "123123");
    for (std::uint32_t q = 1; q <= 6; ++q) {
        for (std::size_t k = 1; k <= 50; ++k) {
            const Word w = minimal_universal_word(q, k);
            CHECK(w.size() == q * k);
            CHECK(universality_index(w) == k);
        }
    }
}

TEST_CASE("brute-force universality examples and guard") {
    CHECK(brute_force_is_k_universal(w2("121212"), 3));
    CHECK_FALSE(brute_force_is_k_universal(w2("12121"), 3));
    CHECK(brute_force_is_k_universal(w2("112212"), 2));
    CHECK_THROWS_WITH_AS(brute_force_is_k_universal(w2("12"), 24), "instance too large", DomainError);
}

TEST_CASE("occurrence counting examples") {
    CHECK(count_subword_occurrences(w2("112"), w2("12")) == 2);
    CHECK(count_subword_occurrences(w2("1212"), w2("12")) == 3);
    CHECK(count_subword_occurrences(w2("1221"), w2("")) == 1);
    CHECK(count_subword_occurrences(w2(""), w2("1")) == 0);

    CHECK(fmt(find_repeated_subword(w2("1212"), 2)) == "12");
    const Word u = find_repeated_subword(w2("121212"), 3);
    CHECK(count_subword_occurrences(w2("121212"), u) >= 2);
    CHECK(fmt(find_repeated_subword(parse_word("11", 1), 1)) == "1");
    CHECK_THROWS_WITH_AS(find_repeated_subword(w2("12"), 2), "no repeat found", DomainError);
}

TEST_CASE("counts agree with index-set enumeration and sum to C(n,k)") {
    // Large counts need more than 64 bits.
    const Word big = minimal_universal_word(2, 60);
    const BigCount c = count_subword_occurrences(big, w2("12121212121212121212121212121212"));
    CHECK(c > BigCount(std::numeric_limits<std::uint64_t>::max()));

    Engine engine(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(engine.below(2));
        const std::size_t n = engine.below(13);
        const Word w = sample_uniform_word(q, n, engine);
        const std::size_t k = engine.below(std::min<std::size_t>(n, 5) + 1);
        BigCount total = 0;
        for_each_word(q, k, [&](const Word& u) {
            const BigCount got = count_subword_occurrences(w, u);
            total += got;
            CHECK(got == oracle::count_embeddings(w.symbols(), u.symbols()));
            return true;
        });
        CHECK(total == BigCount(static_cast<std::uint64_t>(oracle::binomial(n, k) + 0.5L)));
    }
}

TEST_CASE("oracle equivalence on random words up to length 14") {
    Engine engine(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(engine.below(2));
        const Word w = sample_uniform_word(q, engine.below(15), engine);
        for (std::size_t k = 1; k <= 4; ++k) {
            const bool got = is_k_universal(w, k);
            CHECK(got == brute_force_is_k_universal(w, k));
            CHECK(got == oracle::is_k_universal(w.symbols(), q, k));
        }
    }
}

TEST_CASE("decomposition, witness and prefix properties") {
    Engine engine(77);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t q = 1 + static_cast<std::uint32_t>(engine.below(4));
        const Word w = sample_uniform_word(q, engine.below(30), engine);
        const auto dec = decompose(w);

        Word joined(w.alphabet());
        for (const auto& b : dec.blocks) {
            std::vector<bool> seen(q + 1, false);
            for (Symbol s : b.symbols()) seen[s] = true;
            CHECK(std::count(seen.begin() + 1, seen.end(), true) == static_cast<long>(q));
            const auto& sym = b.symbols();
            CHECK(std::count(sym.begin(), sym.end(), sym.back()) == 1);
            joined = joined.concat(b);
        }
        joined = joined.concat(dec.tail);
        CHECK(joined == w);
        std::vector<bool> tail_seen(q + 1, false);
        for (Symbol s : dec.tail.symbols()) tail_seen[s] = true;
        CHECK(std::count(tail_seen.begin() + 1, tail_seen.end(), true) < static_cast<long>(q));
        CHECK(dec.index() == universality_index(w));

        const std::size_t k = 1 + engine.below(6);
        if (dec.index() < k) {
            const Word witness = non_contained_witness(w, k);
            CHECK(witness.size() == dec.index() + 1);
            CHECK_FALSE(contains_subword(w, witness));
            CHECK_FALSE(universal_prefix_length(w, k).has_value());
        } else {
            const auto len = universal_prefix_length(w, k);
            REQUIRE(len.has_value());
            const Word prefix(w.alphabet(), {w.symbols().begin(), w.symbols().begin() + *len});
            const Word shorter(w.alphabet(), {w.symbols().begin(), w.symbols().begin() + *len - 1});
            CHECK(is_k_universal(prefix, k));
            CHECK_FALSE(is_k_universal(shorter, k));
        }
    }
}

TEST_CASE("embeddings are leftmost and valid") {
    Engine engine(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Word w = sample_uniform_word(3, engine.below(12), engine);
        const Word u = sample_uniform_word(3, engine.below(5), engine);
        const auto emb = find_embedding(w, u);
        CHECK(emb.has_value() == oracle::is_subsequence(w.symbols(), u.symbols()));
        CHECK(emb.has_value() == contains_subword(w, u));
        if (!emb) continue;
        std::vector<std::size_t> least;
        oracle::for_each_subset(w.size(), u.size(), [&](const std::vector<std::size_t>& idx) {
            if (!least.empty()) return;
            bool ok = true;
            for (std::size_t j = 0; j < idx.size() && ok; ++j) ok = w[idx[j]] == u[j];
            if (ok) {
                for (std::size_t i : idx) least.push_back(i + 1);
            }
        });
        if (u.empty()) CHECK(emb->empty());
        else CHECK(*emb == least);
    }
}

TEST_CASE("subwords never have larger index") {
    Engine engine(8);
    for (int trial = 0; trial < 300; ++trial) {
        const Word w = sample_uniform_word(2, engine.below(20), engine);
        std::vector<Symbol> kept;
        for (Symbol s : w.symbols()) {
            if (engine.below(2) == 0) kept.push_back(s);
        }
        CHECK(universality_index(Word(w.alphabet(), kept)) <= universality_index(w));
    }
}

TEST_CASE("pigeonhole repeat on universal words") {
    Engine engine(99);
    int checked = 0;
    while (checked < 100) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(engine.below(2));
        const Word w = sample_uniform_word(q, 4 + engine.below(14), engine);
        const std::size_t k = 2 + engine.below(2);
        if (!is_k_universal(w, k)) continue;
        ++checked;
        CHECK(count_subword_occurrences(w, find_repeated_subword(w, k)) >= 2);
    }
}
