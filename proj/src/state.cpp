#include "aismaca/state.hpp"

#include <cmath>
#include <cstdio>

namespace aismaca {

bool is_boolean(const StateVector& state) {
    for (double x : state) {
        if (x != 0.0 && x != 1.0) {
            return false;
        }
    }
    return true;
}

void validate_unit_range(const StateVector& state) {
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!(state[i] >= 0.0 && state[i] <= 1.0)) {
            throw DomainError("state component " + std::to_string(i) +
                              " = " + std::to_string(state[i]) +
                              " outside [0, 1]");
        }
    }
}

static void validate_depth(int q) {
    if (q < 1 || q > 16) {
        throw ConfigError("quantization depth " + std::to_string(q) +
                          " outside [1, 16]");
    }
}

AttractorSignature quantize(const StateVector& state, int q) {
    validate_depth(q);
    const double scale = static_cast<double>((1u << q) - 1u);
    AttractorSignature sig;
    sig.q = q;
    sig.levels.reserve(state.size());
    for (double x : state) {
        // std::round is half-away-from-zero; inputs are non-negative.
        sig.levels.push_back(static_cast<std::uint16_t>(std::lround(x * scale)));
    }
    return sig;
}

std::uint64_t l1_distance(const AttractorSignature& a,
                          const AttractorSignature& b) {
    if (a.levels.size() != b.levels.size() || a.q != b.q) {
        throw ShapeError("signature shape mismatch in L1 distance");
    }
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        const int diff = static_cast<int>(a.levels[i]) - static_cast<int>(b.levels[i]);
        d += static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
    }
    return d;
}

static int hex_width(int q) { return (q + 3) / 4; }

std::string signature_to_hex(const AttractorSignature& sig) {
    const int width = hex_width(sig.q);
    std::string out;
    out.reserve(sig.levels.size() * static_cast<std::size_t>(width));
    char buf[8];
    for (std::uint16_t level : sig.levels) {
        std::snprintf(buf, sizeof(buf), "%0*x", width, level);
        out += buf;
    }
    return out;
}

AttractorSignature signature_from_hex(const std::string& hex, int q) {
    validate_depth(q);
    const std::size_t width = static_cast<std::size_t>(hex_width(q));
    if (hex.size() % width != 0) {
        throw FormatError("signature hex length " + std::to_string(hex.size()) +
                          " not a multiple of level width " +
                          std::to_string(width));
    }
    const std::uint32_t max_level = (1u << q) - 1u;
    AttractorSignature sig;
    sig.q = q;
    sig.levels.reserve(hex.size() / width);
    for (std::size_t i = 0; i < hex.size(); i += width) {
        std::uint32_t level = 0;
        for (std::size_t j = 0; j < width; ++j) {
            const char ch = hex[i + j];
            std::uint32_t digit;
            if (ch >= '0' && ch <= '9') {
                digit = static_cast<std::uint32_t>(ch - '0');
            } else if (ch >= 'a' && ch <= 'f') {
                digit = static_cast<std::uint32_t>(ch - 'a' + 10);
            } else {
                throw FormatError(std::string("bad hex digit '") + ch +
                                  "' in signature");
            }
            level = (level << 4) | digit;
        }
        if (level > max_level) {
            throw FormatError("signature level " + std::to_string(level) +
                              " exceeds 2^q - 1");
        }
        sig.levels.push_back(static_cast<std::uint16_t>(level));
    }
    return sig;
}

}  // namespace aismaca
