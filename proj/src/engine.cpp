#include "aismaca/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace aismaca {

void EngineConfig::validate() const {
    if (max_steps < 1) {
        throw ConfigError("max_steps must be >= 1");
    }
    if (q < 1 || q > 16) {
        throw ConfigError("quantization depth outside [1, 16]");
    }
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw ConfigError("epsilon must be finite and >= 0");
    }
}

CompiledRules compile_rules(const RuleVector& rv) {
    CompiledRules rules;
    rules.reserve(rv.size());
    for (std::size_t i = 0; i < rv.size(); ++i) {
        rules.push_back(rule_corners(rv[i]));
    }
    return rules;
}

void step_into(const StateVector& in, const CompiledRules& rules,
               StateVector& out) {
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double l = i > 0 ? in[i - 1] : 0.0;
        const double r = i + 1 < n ? in[i + 1] : 0.0;
        out[i] = eval_corners(rules[i], l, in[i], r);
    }
}

StateVector step(const StateVector& state, const RuleVector& rv) {
    if (state.size() != rv.size()) {
        throw ShapeError("state length " + std::to_string(state.size()) +
                         " != rule vector length " + std::to_string(rv.size()));
    }
    validate_unit_range(state);
    StateVector out(state.size());
    step_into(state, compile_rules(rv), out);
    return out;
}

namespace {

struct SignatureHash {
    std::size_t operator()(const AttractorSignature& sig) const {
        // FNV-1a over the level bytes.
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint16_t level : sig.levels) {
            h = (h ^ (level & 0xffu)) * 1099511628211ull;
            h = (h ^ (level >> 8)) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

double max_norm_diff(const StateVector& a, const StateVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::fabs(a[i] - b[i]));
    }
    return d;
}

}  // namespace

AttractorResult find_attractor(const StateVector& start,
                               const CompiledRules& rules,
                               const EngineConfig& cfg) {
    cfg.validate();
    if (start.size() != rules.size()) {
        throw ShapeError("state length " + std::to_string(start.size()) +
                         " != rule vector length " +
                         std::to_string(rules.size()));
    }

    std::vector<AttractorSignature> visited;
    visited.reserve(static_cast<std::size_t>(cfg.max_steps) + 1);
    std::unordered_map<AttractorSignature, int, SignatureHash> first_seen;
    first_seen.reserve(static_cast<std::size_t>(cfg.max_steps) + 1);

    visited.push_back(quantize(start, cfg.q));
    first_seen.emplace(visited.back(), 0);

    StateVector current = start;
    StateVector next(start.size());

    for (int t = 1; t <= cfg.max_steps; ++t) {
        step_into(current, rules, next);

        if (max_norm_diff(current, next) < cfg.epsilon) {
            AttractorResult res;
            res.signature = quantize(next, cfg.q);
            res.steps_to_attractor = t - 1;
            res.cycle_length = 1;
            res.converged = true;
            return res;
        }

        AttractorSignature sig = quantize(next, cfg.q);
        auto [it, inserted] = first_seen.try_emplace(sig, t);
        if (!inserted) {
            const int entry = it->second;
            AttractorResult res;
            res.signature = visited[entry];
            for (int s = entry + 1; s < t; ++s) {
                res.signature = std::min(res.signature, visited[s]);
            }
            res.steps_to_attractor = entry;
            res.cycle_length = t - entry;
            res.converged = true;
            return res;
        }
        visited.push_back(std::move(sig));
        current.swap(next);
    }

    AttractorResult res;
    res.signature = visited.back();
    res.steps_to_attractor = cfg.max_steps;
    res.cycle_length = 0;
    res.converged = false;
    return res;
}

AttractorResult find_attractor(const StateVector& start, const RuleVector& rv,
                               const EngineConfig& cfg) {
    return find_attractor(start, compile_rules(rv), cfg);
}

std::uint32_t boolean_step(std::uint32_t mask, const RuleVector& rv) {
    const std::size_t n = rv.size();
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool l = i > 0 && ((mask >> (i - 1)) & 1u);
        const bool c = (mask >> i) & 1u;
        const bool r = i + 1 < n && ((mask >> (i + 1)) & 1u);
        if (rv[i].output(l, c, r)) {
            next |= 1u << i;
        }
    }
    return next;
}

StateVector mask_to_state(std::uint32_t mask, std::size_t n) {
    StateVector state(n);
    for (std::size_t i = 0; i < n; ++i) {
        state[i] = (mask >> i) & 1u ? 1.0 : 0.0;
    }
    return state;
}

std::uint32_t state_to_mask(const StateVector& state) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] == 1.0) {
            mask |= 1u << i;
        } else if (state[i] != 0.0) {
            throw DomainError("state is not Boolean");
        }
    }
    return mask;
}

namespace {

// Cell-lexicographic order (cell 0 most significant), matching the order of
// quantized signatures rather than numeric mask order.
bool mask_lex_less(std::uint32_t a, std::uint32_t b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t ba = (a >> i) & 1u;
        const std::uint32_t bb = (b >> i) & 1u;
        if (ba != bb) {
            return ba < bb;
        }
    }
    return false;
}

}  // namespace

BasinCensus enumerate_basins(const RuleVector& rv, std::size_t n) {
    if (n == 0 || rv.size() != n) {
        throw ShapeError("rule vector length " + std::to_string(rv.size()) +
                         " != cell count " + std::to_string(n));
    }
    if (n > kMaxCensusCells) {
        throw ResourceLimitError(
            "exact basin census capped at " + std::to_string(kMaxCensusCells) +
            " cells (2^n states); use trajectory mode for larger automata");
    }

    const std::uint32_t count = 1u << n;
    std::vector<std::uint32_t> next(count);
    for (std::uint32_t s = 0; s < count; ++s) {
        next[s] = boolean_step(s, rv);
    }

    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    BasinCensus census;
    census.basin_of.assign(count, kUnassigned);

    // Position of each state on the current walk, reset per walk below.
    std::vector<std::uint32_t> pos(count, kUnassigned);
    std::vector<std::uint32_t> path;
    for (std::uint32_t start = 0; start < count; ++start) {
        if (census.basin_of[start] != kUnassigned) {
            continue;
        }
        // Walk until an assigned state or a state already on this path.
        path.clear();
        std::uint32_t s = start;
        while (census.basin_of[s] == kUnassigned && pos[s] == kUnassigned) {
            pos[s] = static_cast<std::uint32_t>(path.size());
            path.push_back(s);
            s = next[s];
        }

        std::uint32_t basin;
        if (census.basin_of[s] != kUnassigned) {
            basin = census.basin_of[s];
        } else {
            // New cycle: path[pos[s]..] closes on itself.
            basin = static_cast<std::uint32_t>(census.attractor_cycles.size());
            std::vector<std::uint32_t> cycle(path.begin() + pos[s], path.end());
            // Rotate the minimum state to the front for a canonical form.
            std::size_t min_at = 0;
            for (std::size_t i = 1; i < cycle.size(); ++i) {
                if (mask_lex_less(cycle[i], cycle[min_at], n)) {
                    min_at = i;
                }
            }
            std::rotate(cycle.begin(), cycle.begin() + min_at, cycle.end());
            census.attractor_cycles.push_back(std::move(cycle));
        }
        for (std::uint32_t state : path) {
            census.basin_of[state] = basin;
            pos[state] = kUnassigned;
        }
    }

    census.basin_count = census.attractor_cycles.size();
    return census;
}

}  // namespace aismaca
