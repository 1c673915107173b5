// Clonal-selection search over rule vectors: rank-proportional cloning,
// affinity-inverse hypermutation, elitist replacement with random
// newcomers. Results are deterministic for a given seed and independent of
// the worker count.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aismaca/classifier.hpp"

namespace aismaca {

struct Antibody {
    RuleVector rv;
    double affinity = 0.0;
    bool evaluated = false;
    std::size_t attractor_count = 0;
};

std::vector<int> all_rule_numbers();

struct EvolutionConfig {
    std::size_t population = 40;
    std::size_t selection = 10;        // n_sel, ranked antibodies cloned
    double clone_factor = 1.0;         // beta
    double hypermutation_rho = 3.0;
    std::size_t newcomers = 4;         // d, random replacements per generation
    std::size_t max_generations = 100;
    std::size_t stagnation_window = 20;
    double target_fitness = 0.99;
    std::vector<int> rule_set = all_rule_numbers();
    std::uint64_t seed = 7;
    std::size_t workers = 1;

    void validate() const;
};

std::vector<Antibody> init_population(std::size_t n_cells,
                                      const EvolutionConfig& cfg);

// Nc_i = max(1, round(beta * N / i)) for 1-based ranks 1..n_ranks.
std::vector<std::size_t> clone_counts(const EvolutionConfig& cfg,
                                      std::size_t n_ranks);

// Per-gene mutation with probability exp(-rho * affinity); mutated genes are
// resampled from the rule set excluding their current value. The clone is
// returned unevaluated.
Antibody hypermutate(const Antibody& parent, const EvolutionConfig& cfg,
                     std::mt19937_64& rng);

struct GenerationStats {
    std::size_t generation = 0;  // 1-based
    double best = 0.0;           // best affinity in the evaluated population
    double mean = 0.0;
    std::size_t attractors = 0;  // attractor count of the best antibody
    std::size_t evaluations = 0; // fitness evaluations spent this generation
};

struct EvolutionTrace {
    std::vector<GenerationStats> generations;
    std::size_t total_evaluations() const;
};

struct EvolutionResult {
    TrainedClassifier best;
    EvolutionTrace trace;
    double best_affinity = 0.0;
};

// Generational loop: evaluate, rank, clone the top n_sel, hypermutate,
// merge elitist with d random newcomers. Stops on the generation budget,
// the target fitness, or a stagnant best affinity.
EvolutionResult evolve(const Dataset& data, const FeatureConfig& features,
                       const EngineConfig& engine, const EvolutionConfig& cfg);

}  // namespace aismaca
