#include "ulab/words.hpp"

#include <charconv>

namespace ulab {

namespace detail {

unsigned long long checked_power(unsigned long long base, std::size_t exp,
                                 unsigned long long limit) {
    unsigned long long result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return limit + 1;
        result *= base;
    }
    return result;
}

}  // namespace detail

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
    if (q == 0) throw DomainError("alphabet size must be at least 1");
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
        if (!alphabet_.contains(s)) {
            throw DomainError("symbol " + std::to_string(s) + " outside [1," +
                              std::to_string(alphabet_.size()) + "]");
        }
    }
}

void Word::push_back(Symbol s) {
    if (!alphabet_.contains(s)) {
        throw DomainError("symbol " + std::to_string(s) + " outside [1," +
                          std::to_string(alphabet_.size()) + "]");
    }
    symbols_.push_back(s);
}

Word Word::concat(const Word& other) const {
    if (!(alphabet_ == other.alphabet_)) throw DomainError("alphabet mismatch");
    Word out = *this;
    out.symbols_.insert(out.symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return out;
}

Word parse_word(std::string_view text, std::uint32_t q) {
    Alphabet alphabet(q);
    std::vector<Symbol> symbols;
    if (q <= 9) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw DomainError(std::string("invalid character '") + c + "' in word");
            }
            symbols.push_back(static_cast<Symbol>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t end = text.find(',', start);
            std::string_view tok = text.substr(start, end == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : end - start);
            Symbol value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
                throw DomainError("invalid symbol '" + std::string(tok) + "' in word");
            }
            symbols.push_back(value);
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
    }
    return Word(alphabet, std::move(symbols));
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.q() <= 9) {
        out.reserve(w.size());
        for (Symbol s : w.symbols()) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

UniversalDecomposition decompose(const Word& w) {
    const std::uint32_t q = w.q();
    UniversalDecomposition result{{}, Word(w.alphabet())};
    // seen[s] == block id  <=>  s already occurred in the current block
    std::vector<std::size_t> seen(q + 1, 0);
    std::size_t block_id = 1;
    std::uint32_t distinct = 0;
    std::vector<Symbol> current;
    for (Symbol s : w.symbols()) {
        current.push_back(s);
        if (seen[s] != block_id) {
            seen[s] = block_id;
            if (++distinct == q) {
                result.blocks.emplace_back(w.alphabet(), std::move(current));
                current.clear();
                distinct = 0;
                ++block_id;
            }
        }
    }
    result.tail = Word(w.alphabet(), std::move(current));
    return result;
}

std::size_t universality_index(const Word& w) {
    const std::uint32_t q = w.q();
    std::vector<std::size_t> seen(q + 1, 0);
    std::size_t blocks = 0;
    std::uint32_t distinct = 0;
    for (Symbol s : w.symbols()) {
        if (seen[s] != blocks + 1) {
            seen[s] = blocks + 1;
            if (++distinct == q) {
                ++blocks;
                distinct = 0;
            }
        }
    }
    return blocks;
}

bool is_k_universal(const Word& w, std::size_t k) {
    return universality_index(w) >= k;
}

std::optional<std::size_t> universal_prefix_length(const Word& w, std::size_t k) {
    if (k == 0) return 0;
    const std::uint32_t q = w.q();
    std::vector<std::size_t> seen(q + 1, 0);
    std::size_t blocks = 0;
    std::uint32_t distinct = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Symbol s = w[i];
        if (seen[s] != blocks + 1) {
            seen[s] = blocks + 1;
            if (++distinct == q) {
                distinct = 0;
                if (++blocks == k) return i + 1;
            }
        }
    }
    return std::nullopt;
}

bool contains_subword(const Word& w, const Word& u) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size() && j < u.size(); ++i) {
        if (w[i] == u[j]) ++j;
    }
    return j == u.size();
}

std::optional<std::vector<std::size_t>> find_embedding(const Word& w, const Word& u) {
    std::vector<std::size_t> positions;
    positions.reserve(u.size());
    for (std::size_t i = 0; i < w.size() && positions.size() < u.size(); ++i) {
        if (w[i] == u[positions.size()]) positions.push_back(i + 1);
    }
    if (positions.size() != u.size()) return std::nullopt;
    return positions;
}

Word non_contained_witness(const Word& w, std::size_t k) {
    UniversalDecomposition dec = decompose(w);
    if (dec.index() >= k) throw DomainError("already k-universal");
    Word witness(w.alphabet());
    for (const Word& block : dec.blocks) witness.push_back(block.symbols().back());
    std::vector<bool> in_tail(w.q() + 1, false);
    for (Symbol s : dec.tail.symbols()) in_tail[s] = true;
    for (Symbol s = 1; s <= w.q(); ++s) {
        if (!in_tail[s]) {
            witness.push_back(s);
            break;
        }
    }
    return witness;
}

Word minimal_universal_word(std::uint32_t q, std::size_t k) {
    Alphabet alphabet(q);
    std::vector<Symbol> symbols;
    symbols.reserve(static_cast<std::size_t>(q) * k);
    for (std::size_t rep = 0; rep < k; ++rep) {
        for (Symbol s = 1; s <= q; ++s) symbols.push_back(s);
    }
    return Word(alphabet, std::move(symbols));
}

bool brute_force_is_k_universal(const Word& w, std::size_t k) {
    return for_each_word(w.q(), k, [&](const Word& u) { return contains_subword(w, u); });
}

BigCount count_subword_occurrences(const Word& w, const Word& u) {
    // ways[j] = embeddings of u[0..j) into the prefix scanned so far
    std::vector<BigCount> ways(u.size() + 1);
    ways[0] = 1;
    for (Symbol s : w.symbols()) {
        for (std::size_t j = u.size(); j > 0; --j) {
            if (u[j - 1] == s) ways[j] += ways[j - 1];
        }
    }
    return ways[u.size()];
}

Word find_repeated_subword(const Word& w, std::size_t k) {
    std::optional<Word> found;
    for_each_word(w.q(), k, [&](const Word& u) {
        if (count_subword_occurrences(w, u) >= 2) {
            found = u;
            return false;
        }
        return true;
    });
    if (!found) throw DomainError("no repeat found");
    return *found;
}

}  // namespace ulab
