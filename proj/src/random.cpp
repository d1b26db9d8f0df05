#include "ulab/random.hpp"

#include <bit>

namespace ulab {

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t key) {
    std::uint64_t x = key;
    for (auto& word : s_) {
        word = splitmix64_mix(x);
        x += 0x9E3779B97F4A7C15ULL;
    }
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256StarStar::below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>((*this)()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double Xoshiro256StarStar::unit() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

void Xoshiro256StarStar::jump() noexcept {
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    std::uint64_t t[4] = {0, 0, 0, 0};
    for (std::uint64_t mask : kJump) {
        for (int b = 0; b < 64; ++b) {
            if (mask & (std::uint64_t{1} << b)) {
                for (int i = 0; i < 4; ++i) t[i] ^= s_[i];
            }
            (*this)();
        }
    }
    for (int i = 0; i < 4; ++i) s_[i] = t[i];
}

Engine RandomSource::engine() const {
    const std::uint64_t seed_key = splitmix64_mix(master_seed);
    return Engine(splitmix64_mix(seed_key ^ splitmix64_mix(stream_id ^ 0xD1B54A32D192ED03ULL)));
}

RandomSource RandomSource::split(std::uint64_t sub) const {
    return RandomSource{master_seed, splitmix64_mix(stream_id * 0xA0761D6478BD642FULL + sub)};
}

Harmonic harmonic(std::uint32_t q) {
    if (q == 0) throw DomainError("harmonic number needs q >= 1");
    boost::multiprecision::cpp_rational h = 0;
    for (std::uint32_t i = 1; i <= q; ++i) h += boost::multiprecision::cpp_rational(1, i);
    return Harmonic{h, static_cast<double>(h)};
}

double threshold_constant(std::uint32_t q) {
    return static_cast<double>(q * harmonic(q).exact);
}

Word sample_uniform_word(std::uint32_t q, std::size_t n, Engine& engine) {
    Alphabet alphabet(q);
    std::vector<Symbol> symbols(n);
    for (auto& s : symbols) s = static_cast<Symbol>(engine.below(q) + 1);
    return Word(alphabet, std::move(symbols));
}

Word sample_uniform_word(std::uint32_t q, std::size_t n, const RandomSource& source) {
    Engine engine = source.engine();
    return sample_uniform_word(q, n, engine);
}

Word sample_coupon_block(std::uint32_t q, Engine& engine) {
    Word block{Alphabet(q)};
    std::vector<bool> seen(q, false);
    std::uint32_t distinct = 0;
    while (distinct < q) {
        auto s = static_cast<Symbol>(engine.below(q));
        if (!seen[s]) {
            seen[s] = true;
            ++distinct;
        }
        block.push_back(s + 1);
    }
    return block;
}

Word sample_coupon_block(std::uint32_t q, const RandomSource& source) {
    Engine engine = source.engine();
    return sample_coupon_block(q, engine);
}

std::size_t coupon_block_length(std::uint32_t q, Engine& engine) {
    if (q == 0) throw DomainError("alphabet size must be at least 1");
    std::vector<bool> seen(q, false);
    std::uint32_t distinct = 0;
    std::size_t length = 0;
    while (distinct < q) {
        auto s = engine.below(q);
        ++length;
        if (!seen[s]) {
            seen[s] = true;
            ++distinct;
        }
    }
    return length;
}

}  // namespace ulab
