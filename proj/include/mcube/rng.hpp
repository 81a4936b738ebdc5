#pragma once

#include <cstdint>
#include <random>

namespace mcube::rng {

// splitmix64 finalizer; used to derive decorrelated stream seeds.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
    std::uint64_t z = mix(seed);
    z = mix(z ^ (a * 0xd6e8feb86659fd93ULL));
    z = mix(z ^ (b * 0xa5a5a5a5a5a5a5a5ULL));
    z = mix(z ^ (c * 0xc2b2ae3d27d4eb4fULL));
    return z;
}

// Uniform integer in [0, bound) by rejection; unlike
// std::uniform_int_distribution this is identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = gen();
    } while (r >= limit);
    return r % bound;
}

// Uniform double in [-1, 1], 53-bit resolution.
inline double uniform_signed_unit(std::mt19937_64& gen) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace mcube::rng
