#include "aismaca/random.hpp"

namespace aismaca {

std::mt19937_64 make_rng(std::uint64_t seed, RngStream stream, std::uint64_t a,
                         std::uint64_t b) {
    const std::uint64_t tag = static_cast<std::uint64_t>(stream);
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(tag),  static_cast<std::uint32_t>(tag >> 32),
        static_cast<std::uint32_t>(a),    static_cast<std::uint32_t>(a >> 32),
        static_cast<std::uint32_t>(b),    static_cast<std::uint32_t>(b >> 32),
    };
    return std::mt19937_64(seq);
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace aismaca
