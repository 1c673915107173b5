// State vectors and their quantized signatures. A signature identifies the
// attractor a trajectory has reached: per-cell levels in [0, 2^q - 1] with a
// lexicographic total order (cell 0 most significant).
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "aismaca/errors.hpp"

namespace aismaca {

// Per-cell values in [0, 1]; Boolean states are the {0,1} corners.
using StateVector = std::vector<double>;

bool is_boolean(const StateVector& state);

// Throws DomainError if any component leaves [0, 1].
void validate_unit_range(const StateVector& state);

struct AttractorSignature {
    std::vector<std::uint16_t> levels;
    int q = 8;

    friend auto operator<=>(const AttractorSignature&,
                            const AttractorSignature&) = default;
};

// level_i = round(state_i * (2^q - 1)), half away from zero. 1 <= q <= 16.
AttractorSignature quantize(const StateVector& state, int q);

// Sum of per-cell level differences; operands must have equal length and q.
std::uint64_t l1_distance(const AttractorSignature& a,
                          const AttractorSignature& b);

// Fixed-width hex rendering: ceil(q/4) digits per level, concatenated.
std::string signature_to_hex(const AttractorSignature& sig);
AttractorSignature signature_from_hex(const std::string& hex, int q);

}  // namespace aismaca
