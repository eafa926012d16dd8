#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace netlabel {

/// Engine used everywhere; its output sequence is fixed by the standard.
using Rng = std::mt19937_64;

// The standard distributions are implementation-defined, so draws go
// through these helpers to keep results identical across toolchains.

/// Uniform integer in [0, n). n must be positive.
inline std::size_t uniform_index(Rng &rng, std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold)
            return static_cast<std::size_t>(r % bound);
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void shuffle(std::span<T> items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[uniform_index(rng, i)]);
}

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable 64-bit hash for seed derivation (FNV-1a over bytes, then mixed).
class SeedHasher {
public:
    explicit SeedHasher(std::uint64_t seed) : state_(mix64(seed)) {}

    SeedHasher &add(std::string_view bytes) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        // length-prefix so ("ab","c") and ("a","bc") differ
        state_ = mix64(state_ ^ mix64(h + bytes.size()));
        return *this;
    }

    SeedHasher &add(std::uint64_t value) {
        state_ = mix64(state_ ^ mix64(value ^ 0x5851f42d4c957f2dULL));
        return *this;
    }

    std::uint64_t value() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

} // namespace netlabel
