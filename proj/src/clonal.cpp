#include "aismaca/clonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aismaca/parallel.hpp"
#include "aismaca/random.hpp"

namespace aismaca {

std::vector<int> all_rule_numbers() {
    std::vector<int> rules(256);
    std::iota(rules.begin(), rules.end(), 0);
    return rules;
}

void EvolutionConfig::validate() const {
    if (population < 1) {
        throw ConfigError("population must be >= 1");
    }
    if (selection < 1 || selection > population) {
        throw ConfigError("selection size must be in [1, population]");
    }
    if (newcomers >= population) {
        throw ConfigError("newcomer count must be < population");
    }
    if (!(clone_factor > 0.0)) {
        throw ConfigError("clone factor must be > 0");
    }
    if (!(hypermutation_rho >= 0.0)) {
        throw ConfigError("hypermutation steepness must be >= 0");
    }
    if (max_generations < 1) {
        throw ConfigError("max generations must be >= 1");
    }
    if (stagnation_window < 1) {
        throw ConfigError("stagnation window must be >= 1");
    }
    if (rule_set.empty()) {
        throw ConfigError("rule set is empty");
    }
    for (int r : rule_set) {
        if (r < 0 || r > 255) {
            throw InvalidRuleError("rule number " + std::to_string(r) +
                                   " outside [0, 255]");
        }
    }
}

namespace {

std::vector<int> canonical_rule_set(const EvolutionConfig& cfg) {
    std::vector<int> rules = cfg.rule_set;
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    return rules;
}

RuleVector random_rule_vector(std::size_t n_cells,
                              const std::vector<int>& rules,
                              std::mt19937_64& rng) {
    std::vector<Rule> genes;
    genes.reserve(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) {
        genes.emplace_back(
            rules[uniform_index(rng, rules.size())]);
    }
    return RuleVector(std::move(genes));
}

}  // namespace

std::vector<Antibody> init_population(std::size_t n_cells,
                                      const EvolutionConfig& cfg) {
    cfg.validate();
    if (n_cells < 1) {
        throw ConfigError("cell count must be >= 1");
    }
    const std::vector<int> rules = canonical_rule_set(cfg);
    std::mt19937_64 rng = make_rng(cfg.seed, RngStream::PopulationInit);
    std::vector<Antibody> population;
    population.reserve(cfg.population);
    for (std::size_t i = 0; i < cfg.population; ++i) {
        population.push_back(Antibody{random_rule_vector(n_cells, rules, rng)});
    }
    return population;
}

std::vector<std::size_t> clone_counts(const EvolutionConfig& cfg,
                                      std::size_t n_ranks) {
    std::vector<std::size_t> counts;
    counts.reserve(n_ranks);
    for (std::size_t rank = 1; rank <= n_ranks; ++rank) {
        const double raw = cfg.clone_factor *
                           static_cast<double>(cfg.population) /
                           static_cast<double>(rank);
        counts.push_back(static_cast<std::size_t>(
            std::max<long long>(1, std::llround(raw))));
    }
    return counts;
}

Antibody hypermutate(const Antibody& parent, const EvolutionConfig& cfg,
                     std::mt19937_64& rng) {
    if (!parent.evaluated) {
        throw ArgumentError("hypermutation requires an evaluated antibody");
    }
    const std::vector<int> rules = canonical_rule_set(cfg);
    const double alpha =
        std::exp(-cfg.hypermutation_rho * parent.affinity);

    std::vector<Rule> genes = parent.rv.rules();
    if (rules.size() > 1) {
        for (Rule& gene : genes) {
            if (uniform_real(rng) >= alpha) {
                continue;
            }
            // Resample uniformly from the rule set minus the current value.
            const auto at = std::lower_bound(rules.begin(), rules.end(),
                                             gene.number());
            std::size_t pick = static_cast<std::size_t>(
                uniform_index(rng, rules.size() - 1));
            if (at != rules.end() && *at == gene.number() &&
                pick >= static_cast<std::size_t>(at - rules.begin())) {
                ++pick;
            }
            gene = Rule(rules[pick]);
        }
    }
    Antibody clone;
    clone.rv = RuleVector(std::move(genes));
    return clone;
}

std::size_t EvolutionTrace::total_evaluations() const {
    std::size_t total = 0;
    for (const GenerationStats& g : generations) {
        total += g.evaluations;
    }
    return total;
}

namespace {

std::size_t evaluate_unevaluated(std::vector<Antibody>& antibodies,
                                 const EncodedDataset& data,
                                 const EngineConfig& engine,
                                 std::size_t workers) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < antibodies.size(); ++i) {
        if (!antibodies[i].evaluated) {
            pending.push_back(i);
        }
    }
    parallel_for(pending.size(), workers, [&](std::size_t k) {
        Antibody& a = antibodies[pending[k]];
        const FitnessResult fit = fitness(a.rv, data, engine);
        a.affinity = fit.score;
        a.attractor_count = fit.map.size();
        a.evaluated = true;
    });
    return pending.size();
}

// Indices sorted by affinity descending, ties toward the earlier index.
std::vector<std::size_t> rank_indices(const std::vector<Antibody>& pop) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return pop[a].affinity > pop[b].affinity;
                     });
    return order;
}

}  // namespace

EvolutionResult evolve(const Dataset& data, const FeatureConfig& features,
                       const EngineConfig& engine,
                       const EvolutionConfig& cfg) {
    cfg.validate();
    engine.validate();
    const EncodedDataset encoded =
        encode_dataset(data.examples, data.class_names.size(), features);
    const std::size_t n_cells = encoded.states.front().size();
    const std::vector<int> rules = canonical_rule_set(cfg);

    std::vector<Antibody> population = init_population(n_cells, cfg);

    EvolutionTrace trace;
    Antibody best_ever;
    bool have_best = false;
    std::size_t stagnant = 0;

    const auto consider = [&](const Antibody& a) {
        if (!have_best || a.affinity > best_ever.affinity) {
            best_ever = a;
            have_best = true;
            return true;
        }
        return false;
    };

    for (std::size_t g = 1; g <= cfg.max_generations; ++g) {
        const std::size_t newly =
            evaluate_unevaluated(population, encoded, engine, cfg.workers);
        const std::vector<std::size_t> order = rank_indices(population);

        bool improved = false;
        for (const Antibody& a : population) {
            improved |= consider(a);
        }

        GenerationStats row;
        row.generation = g;
        row.best = population[order.front()].affinity;
        row.mean = 0.0;
        for (const Antibody& a : population) {
            row.mean += a.affinity;
        }
        row.mean /= static_cast<double>(population.size());
        row.attractors = population[order.front()].attractor_count;
        row.evaluations = newly;

        if (best_ever.affinity >= cfg.target_fitness) {
            trace.generations.push_back(row);
            break;
        }

        // Clone the ranked elite and hypermutate with per-clone streams.
        const std::vector<std::size_t> counts =
            clone_counts(cfg, std::min(cfg.selection, population.size()));
        std::vector<Antibody> clones;
        std::size_t ordinal = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const Antibody& parent = population[order[i]];
            for (std::size_t c = 0; c < counts[i]; ++c, ++ordinal) {
                std::mt19937_64 rng =
                    make_rng(cfg.seed, RngStream::Hypermutation, g, ordinal);
                clones.push_back(hypermutate(parent, cfg, rng));
            }
        }
        evaluate_unevaluated(clones, encoded, engine, cfg.workers);
        for (const Antibody& a : clones) {
            improved |= consider(a);
        }
        row.evaluations = newly + clones.size();
        trace.generations.push_back(row);

        if (best_ever.affinity >= cfg.target_fitness) {
            break;
        }
        if (improved) {
            stagnant = 0;
        } else if (++stagnant >= cfg.stagnation_window) {
            break;
        }
        if (g == cfg.max_generations) {
            break;
        }

        // Elitist merge: keep the best N - d of parents and clones, then
        // refill with d fresh random antibodies.
        std::vector<Antibody> merged = std::move(population);
        merged.insert(merged.end(), std::make_move_iterator(clones.begin()),
                      std::make_move_iterator(clones.end()));
        std::stable_sort(merged.begin(), merged.end(),
                         [](const Antibody& a, const Antibody& b) {
                             return a.affinity > b.affinity;
                         });
        merged.resize(cfg.population - cfg.newcomers);
        for (std::size_t j = 0; j < cfg.newcomers; ++j) {
            std::mt19937_64 rng = make_rng(cfg.seed, RngStream::Newcomer, g, j);
            merged.push_back(Antibody{random_rule_vector(n_cells, rules, rng)});
        }
        population = std::move(merged);
    }

    EvolutionResult result;
    result.best_affinity = best_ever.affinity;
    result.trace = std::move(trace);
    result.best = build_classifier(best_ever.rv, data, features, engine,
                                   cfg.seed);
    return result;
}

}  // namespace aismaca
