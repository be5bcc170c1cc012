// Counter-based pseudo-random sampling. Every draw is a pure function of
// (seed, index), so sample i is the same value no matter which thread asks
// for it or in what order.
#pragma once

#include <cstdint>

#include "tproj/vector.hpp"

namespace tproj {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t bits = splitmix64(splitmix64(seed) ^ index);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform in [-radius, radius)^dim; `stream` separates independent draws
// that share one sample index (e.g. the two points of a pair).
Vector sample_box(std::uint64_t seed, std::uint64_t index, int stream, int dim,
                  double radius);

}  // namespace tproj
