#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace spanex {

// All randomness in a run flows from one root seed through named substreams
// so that components can be re-run or re-ordered without perturbing each
// other ("train", "variants", "lissa-shuffle", "generator", ...).

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t substream_seed(uint64_t root, std::string_view name, uint64_t index = 0) {
    return splitmix64(splitmix64(root ^ fnv1a64(name)) + index);
}

inline std::mt19937_64 make_rng(uint64_t root, std::string_view name, uint64_t index = 0) {
    return std::mt19937_64(substream_seed(root, name, index));
}

// Deterministic helpers pinned to the raw bit stream (no distribution
// implementation dependence).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Box-Muller from the pinned uniform; consumes two draws per pair.
inline double normal(std::mt19937_64& rng, double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    return mean + stddev * z;
}

// Uniform integer in [0, n) by rejection-free modulo of a 64-bit draw; the
// bias is negligible for the small n used here but we reject to stay exact.
inline uint64_t uniform_index(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

} // namespace spanex
