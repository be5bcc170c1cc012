#include "tproj/rng.hpp"

namespace tproj {

Vector sample_box(std::uint64_t seed, std::uint64_t index, int stream, int dim,
                  double radius) {
    std::vector<double> out(static_cast<std::size_t>(dim));
    const std::uint64_t base =
        splitmix64(seed ^ (0x51ed2701a2b9e4d3ULL * static_cast<std::uint64_t>(stream + 1)));
    for (int i = 0; i < dim; ++i) {
        const std::uint64_t k = index * 64ULL + static_cast<std::uint64_t>(i);
        out[static_cast<std::size_t>(i)] = radius * (2.0 * uniform01(base, k) - 1.0);
    }
    return Vector(std::move(out));
}

}  // namespace tproj
