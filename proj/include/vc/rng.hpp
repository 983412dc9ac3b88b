#pragma once

#include <cstdint>
#include <random>

namespace vc {

// splitmix64: cheap stateless mixer, used to derive independent stream seeds
// from a master seed without correlated low bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    return mix64(master ^ mix64(salt));
}

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi], inclusive.
inline long long uniform_ll(Rng& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

}  // namespace vc
