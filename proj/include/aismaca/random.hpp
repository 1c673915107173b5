// Seeded randomness helpers. All sampling goes through these routines
// rather than std distributions so that identical seeds give identical
// results on any platform, and derived streams keep results independent of
// evaluation order and worker count.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace aismaca {

// Stream tags for derived generators.
enum class RngStream : std::uint64_t {
    PopulationInit = 1,
    Hypermutation = 2,
    Newcomer = 3,
    FoldSplit = 4,
    FoldSeed = 5,
};

std::mt19937_64 make_rng(std::uint64_t seed, RngStream stream,
                         std::uint64_t a = 0, std::uint64_t b = 0);

// Uniform integer in [0, bound) by rejection; bound >= 1.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

// Uniform double in [0, 1) from the top 53 bits.
double uniform_real(std::mt19937_64& rng);

template <typename T>
void shuffle_values(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j =
            static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace aismaca
