// The cellular-automata engine: synchronous fuzzy updates under a per-cell
// rule vector with null boundary, attractor detection on quantized
// trajectories, and exact basin enumeration over Boolean states.
#pragma once

#include <cstdint>
#include <vector>

#include "aismaca/rules.hpp"
#include "aismaca/state.hpp"

namespace aismaca {

struct EngineConfig {
    int max_steps = 64;
    int q = 8;
    double epsilon = 1e-6;

    void validate() const;

    friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

// Per-cell corner tables decoded once; reused across trajectories.
using CompiledRules = std::vector<std::array<double, 8>>;

CompiledRules compile_rules(const RuleVector& rv);

// One synchronous update. Throws ShapeError on length mismatch.
StateVector step(const StateVector& state, const RuleVector& rv);

// Hot path: no checks, `out` must be sized like `in` and distinct from it.
void step_into(const StateVector& in, const CompiledRules& rules,
               StateVector& out);

struct AttractorResult {
    AttractorSignature signature;  // lexicographic minimum over the cycle
    int steps_to_attractor = 0;
    int cycle_length = 0;  // 0 when not converged
    bool converged = false;
};

// Iterates the CA from `start`, recording quantized signatures. The first
// revisited signature closes the cycle; successive raw states closer than
// epsilon in max-norm exit early as a fixed point. Exhausting max_steps
// reports converged = false with the final quantized state.
AttractorResult find_attractor(const StateVector& start, const RuleVector& rv,
                               const EngineConfig& cfg);
AttractorResult find_attractor(const StateVector& start,
                               const CompiledRules& rules,
                               const EngineConfig& cfg);

// Boolean states packed as bit masks: bit i holds cell i.
std::uint32_t boolean_step(std::uint32_t mask, const RuleVector& rv);
StateVector mask_to_state(std::uint32_t mask, std::size_t n);
std::uint32_t state_to_mask(const StateVector& state);

struct BasinCensus {
    std::size_t basin_count = 0;
    // Indexed by state mask; value is the basin id of that state.
    std::vector<std::uint32_t> basin_of;
    // Indexed by basin id; each cycle is rotated so its cell-lexicographic
    // minimum state comes first.
    std::vector<std::vector<std::uint32_t>> attractor_cycles;
};

inline constexpr std::size_t kMaxCensusCells = 20;

// Exhaustive transition-graph decomposition over all 2^n Boolean states.
// Throws ResourceLimitError for n > kMaxCensusCells.
BasinCensus enumerate_basins(const RuleVector& rv, std::size_t n);

}  // namespace aismaca
