#pragma once

#include <cstdint>
#include <random>

namespace cobex {

/// All randomized paths draw from std::mt19937_64 (a fully specified
/// generator) through the explicit samplers below, so a (seed, algorithm)
/// pair identifies the byte-exact output on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for batch `index` of a run seeded with `seed`. Batches can be
/// consumed in any order (or in parallel) without changing the result.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

/// Uniform draw from [0, n) by masked rejection; unbiased and deterministic
/// given the generator state (std::uniform_int_distribution is not
/// implementation-defined-free, so it is avoided).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        std::uint64_t x = rng() & mask;
        if (x < n) return x;
    }
}

}  // namespace cobex
