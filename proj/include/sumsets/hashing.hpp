#pragma once

#include <cstdint>
#include <string_view>

namespace sumsets {

// Published mixing functions, fixed forever so that fixtures reproduce
// across languages and platforms.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;       // 2^64 / phi
inline constexpr std::uint64_t kFnvBasis = 0xCBF29CE484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ull;

// splitmix64 finalizer (Steele/Lea/Flood; Vigna's splitmix64.c).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// n-th output of the splitmix64 stream seeded at `seed`.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n) {
    return mix64(seed + kGolden * (n + 1));
}

// FNV-1a over bytes, starting from an arbitrary basis.
constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = kFnvBasis) {
    std::uint64_t h = basis;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

// Deterministic color of a text key: FNV-1a absorbed, splitmix64 finalized.
constexpr int seeded_text_color(std::uint64_t seed, int k, std::string_view text) {
    return static_cast<int>(mix64(fnv1a64(text, kFnvBasis ^ seed)) % static_cast<std::uint64_t>(k));
}

constexpr int seeded_int_color(std::uint64_t seed, int k, std::uint64_t n) {
    return static_cast<int>(splitmix64_at(seed, n) % static_cast<std::uint64_t>(k));
}

}  // namespace sumsets
