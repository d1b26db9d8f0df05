#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulab/error.hpp"

namespace ulab {

using Symbol = std::uint32_t;
using BigCount = boost::multiprecision::cpp_int;

// Alphabet [q] = {1, ..., q}.
class Alphabet {
public:
    explicit Alphabet(std::uint32_t q);

    std::uint32_t size() const noexcept { return q_; }
    bool contains(Symbol s) const noexcept { return s >= 1 && s <= q_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t q_;
};

// A finite word over [q]. Symbols are 1-based everywhere in the public API.
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
    Word(Alphabet alphabet, std::vector<Symbol> symbols);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t q() const noexcept { return alphabet_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    void push_back(Symbol s);
    Word concat(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

// Digit string for q <= 9 ("121212"), comma-separated integers otherwise.
Word parse_word(std::string_view text, std::uint32_t q);
std::string format_word(const Word& w);

// w = u_1 ... u_l u' with every block u_i a minimal prefix (of the remainder)
// containing all q symbols, and a tail u' missing at least one symbol.
struct UniversalDecomposition {
    std::vector<Word> blocks;
    Word tail;

    std::size_t index() const noexcept { return blocks.size(); }
};

UniversalDecomposition decompose(const Word& w);

// Number of completed blocks of the greedy decomposition, without
// materializing them.
std::size_t universality_index(const Word& w);

bool is_k_universal(const Word& w, std::size_t k);

// Length of the shortest prefix of w that is k-universal, if any.
std::optional<std::size_t> universal_prefix_length(const Word& w, std::size_t k);

bool contains_subword(const Word& w, const Word& u);

// Leftmost-greedy embedding of u into w as 1-based strictly increasing
// positions, or nullopt when u is not a subword of w.
std::optional<std::vector<std::size_t>> find_embedding(const Word& w, const Word& u);

// A word of length universality_index(w) + 1 that w does not contain: the
// final symbol of every block followed by the smallest symbol absent from the
// tail. Throws DomainError("already k-universal") when index(w) >= k.
Word non_contained_witness(const Word& w, std::size_t k);

// (1 2 ... q)^k.
Word minimal_universal_word(std::uint32_t q, std::size_t k);

// Checks every one of the q^k targets directly. Throws "instance too large"
// when q^k exceeds kEnumerationBudget.
bool brute_force_is_k_universal(const Word& w, std::size_t k);

// Number of strictly increasing index sequences embedding u into w.
BigCount count_subword_occurrences(const Word& w, const Word& u);

// First u in lexicographic order over [q]^k occurring at least twice in w.
Word find_repeated_subword(const Word& w, std::size_t k);

// Calls visit(u) for every u in [q]^k in lexicographic order until visit
// returns false. Returns false iff stopped early. Guarded like the oracles.
template <class Visit>
bool for_each_word(std::uint32_t q, std::size_t k, Visit&& visit);

namespace detail {
unsigned long long checked_power(unsigned long long base, std::size_t exp,
                                 unsigned long long limit);
}

template <class Visit>
bool for_each_word(std::uint32_t q, std::size_t k, Visit&& visit) {
    if (detail::checked_power(q, k, kEnumerationBudget) > kEnumerationBudget) {
        throw DomainError("instance too large");
    }
    Alphabet alphabet(q);
    std::vector<Symbol> cur(k, 1);
    while (true) {
        if (!visit(Word(alphabet, cur))) return false;
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == q) {
            cur[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) return true;
        ++cur[pos - 1];
    }
}

}  // namespace ulab
