#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace spssot {

// Every stochastic component draws from its own mt19937_64 seeded through
// derive_seed, so adding or removing draws in one component never shifts the
// stream of another. Tags used by the trainer are part of its determinism
// contract and documented in trainer.hpp.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index = 0) {
    return splitmix64(splitmix64(base ^ fnv1a(tag)) ^ index);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace spssot
