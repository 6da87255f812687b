#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace netoverlap {

// All randomized code in the library draws from std::mt19937_64 through the
// helpers below, so a seed fully determines every output. Derived streams
// (one per sweep replicate) come from the splitmix64 sequence, which is
// injective in the stream index.

// splitmix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit words.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// k-th element of the splitmix64 stream seeded with `seed`. Distinct k give
// distinct results for a fixed seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
    return splitmix64_mix(seed + (k + 1) * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0, 1) from the top 53 bits. Hand-rolled instead of
// std::uniform_real_distribution so results do not depend on the standard
// library implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, n). n must be > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

// Fisher-Yates shuffle using uniform_below; stable across standard libraries.
template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace netoverlap
