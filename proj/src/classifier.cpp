#include "aismaca/classifier.hpp"

#include <algorithm>
#include <limits>

namespace aismaca {

EncodedDataset encode_dataset(const std::vector<LabeledExample>& examples,
                              std::size_t class_count,
                              const FeatureConfig& cfg) {
    if (examples.empty()) {
        throw ArgumentError("dataset is empty");
    }
    EncodedDataset data;
    data.class_count = class_count;
    data.window_length = examples.front().window.size();
    data.states.reserve(examples.size());
    data.labels.reserve(examples.size());
    for (const LabeledExample& ex : examples) {
        if (ex.window.size() != data.window_length) {
            throw ShapeError("window length " + std::to_string(ex.window.size()) +
                             " differs from dataset length " +
                             std::to_string(data.window_length));
        }
        if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= class_count) {
            throw ArgumentError("label " + std::to_string(ex.label) +
                                " outside class table");
        }
        data.states.push_back(extract_features(ex.window, cfg));
        data.labels.push_back(ex.label);
    }
    return data;
}

FitnessResult fitness(const RuleVector& rv, const EncodedDataset& data,
                      const EngineConfig& cfg) {
    if (data.states.empty()) {
        throw ArgumentError("dataset is empty");
    }
    if (rv.size() != data.states.front().size()) {
        throw ShapeError("rule vector length " + std::to_string(rv.size()) +
                         " != state length " +
                         std::to_string(data.states.front().size()));
    }

    const CompiledRules rules = compile_rules(rv);

    // Per-attractor class tallies.
    std::map<AttractorSignature, std::vector<std::uint64_t>> tallies;
    std::vector<const AttractorSignature*> example_sig(data.states.size(),
                                                       nullptr);
    FitnessResult result;
    for (std::size_t i = 0; i < data.states.size(); ++i) {
        const AttractorResult attractor =
            find_attractor(data.states[i], rules, cfg);
        if (!attractor.converged) {
            ++result.non_converged;
            continue;
        }
        auto [it, inserted] = tallies.try_emplace(
            attractor.signature, std::vector<std::uint64_t>(data.class_count));
        ++it->second[static_cast<std::size_t>(data.labels[i])];
        example_sig[i] = &it->first;
    }

    for (const auto& [sig, counts] : tallies) {
        AttractorInfo info;
        std::uint64_t best = 0;
        std::uint64_t total = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            total += counts[c];
            if (counts[c] > best) {  // ties keep the lowest class index
                best = counts[c];
                info.class_index = static_cast<int>(c);
            }
        }
        info.support = total;
        info.purity = static_cast<double>(best) / static_cast<double>(total);
        result.map.emplace(sig, info);
    }

    std::uint64_t correct = 0;
    for (std::size_t i = 0; i < data.states.size(); ++i) {
        if (example_sig[i] == nullptr) {
            continue;  // non-converged examples score as wrong
        }
        if (result.map.at(*example_sig[i]).class_index == data.labels[i]) {
            ++correct;
        }
    }

    result.raw_accuracy =
        static_cast<double>(correct) / static_cast<double>(data.states.size());
    const double attractors = static_cast<double>(result.map.size());
    const double classes = static_cast<double>(data.class_count);
    double penalty = 0.0;
    if (attractors > classes) {
        penalty = kAttractorPenaltyWeight * (attractors - classes) / attractors;
    }
    result.score = std::max(0.0, result.raw_accuracy - penalty);
    return result;
}

FitnessResult fitness(const RuleVector& rv,
                      const std::vector<LabeledExample>& examples,
                      std::size_t class_count, const FeatureConfig& features,
                      const EngineConfig& cfg) {
    return fitness(rv, encode_dataset(examples, class_count, features), cfg);
}

std::vector<std::uint64_t> TrainedClassifier::class_support() const {
    std::vector<std::uint64_t> support(class_names.size(), 0);
    for (const auto& [sig, info] : attractor_map) {
        support[static_cast<std::size_t>(info.class_index)] += info.support;
    }
    return support;
}

int TrainedClassifier::majority_class() const {
    const std::vector<std::uint64_t> support = class_support();
    std::size_t best = 0;
    for (std::size_t c = 1; c < support.size(); ++c) {
        if (support[c] > support[best]) {
            best = c;
        }
    }
    return static_cast<int>(best);
}

void TrainedClassifier::validate() const {
    engine.validate();
    feature_config.validate();
    if (class_names.empty()) {
        throw ConfigError("classifier has no classes");
    }
    if (attractor_map.empty()) {
        throw ConfigError("classifier has an empty attractor map");
    }
    if (window_length == 0) {
        throw ConfigError("classifier window length is zero");
    }
    const std::size_t state_len = feature_config.state_length(window_length);
    if (rule_vector.size() != state_len) {
        throw ShapeError("rule vector length " +
                         std::to_string(rule_vector.size()) +
                         " != state length " + std::to_string(state_len));
    }
    for (const auto& [sig, info] : attractor_map) {
        if (sig.levels.size() != state_len || sig.q != engine.q) {
            throw ShapeError("attractor signature shape mismatch");
        }
        if (info.class_index < 0 ||
            static_cast<std::size_t>(info.class_index) >= class_names.size()) {
            throw ConfigError("attractor class outside class table");
        }
        if (!(info.purity > 0.0 && info.purity <= 1.0) || info.support < 1) {
            throw ConfigError("attractor purity/support out of range");
        }
    }
}

TrainedClassifier build_classifier(const RuleVector& rv, const Dataset& data,
                                   const FeatureConfig& features,
                                   const EngineConfig& engine,
                                   std::uint64_t seed,
                                   TrainingDiagnostics* diagnostics) {
    const EncodedDataset encoded =
        encode_dataset(data.examples, data.class_names.size(), features);
    const FitnessResult fit = fitness(rv, encoded, engine);
    if (fit.map.empty()) {
        throw TrainingError("no training example converged to an attractor");
    }
    if (diagnostics != nullptr) {
        diagnostics->converged = data.examples.size() - fit.non_converged;
        diagnostics->non_converged = fit.non_converged;
    }
    TrainedClassifier clf;
    clf.rule_vector = rv;
    clf.attractor_map = fit.map;
    clf.feature_config = features;
    clf.engine = engine;
    clf.class_names = data.class_names;
    clf.window_length = encoded.window_length;
    clf.seed = seed;
    clf.validate();
    return clf;
}

std::string_view match_kind_name(MatchKind kind) {
    switch (kind) {
        case MatchKind::Exact: return "exact";
        case MatchKind::Nearest: return "nearest";
        case MatchKind::Fallback: return "fallback";
    }
    return "unknown";
}

Prediction classify(const TrainedClassifier& clf, const SequenceWindow& w) {
    if (w.size() != clf.window_length) {
        throw ShapeError("window length " + std::to_string(w.size()) +
                         " != classifier window length " +
                         std::to_string(clf.window_length));
    }
    const StateVector state = extract_features(w, clf.feature_config);
    const AttractorResult attractor =
        find_attractor(state, clf.rule_vector, clf.engine);

    Prediction pred;
    if (!attractor.converged) {
        const std::vector<std::uint64_t> support = clf.class_support();
        std::uint64_t total = 0;
        for (std::uint64_t s : support) {
            total += s;
        }
        pred.class_index = clf.majority_class();
        pred.probability =
            static_cast<double>(support[static_cast<std::size_t>(
                pred.class_index)]) /
            static_cast<double>(total);
        pred.matched = MatchKind::Fallback;
        return pred;
    }

    const auto exact = clf.attractor_map.find(attractor.signature);
    if (exact != clf.attractor_map.end()) {
        pred.class_index = exact->second.class_index;
        pred.probability = exact->second.purity;
        pred.matched = MatchKind::Exact;
        return pred;
    }

    // Nearest attractor by L1 over levels; the map's ordering makes the
    // lexicographically smaller signature win ties.
    std::uint64_t best_distance = std::numeric_limits<std::uint64_t>::max();
    const AttractorInfo* best = nullptr;
    for (const auto& [sig, info] : clf.attractor_map) {
        const std::uint64_t d = l1_distance(attractor.signature, sig);
        if (d < best_distance) {
            best_distance = d;
            best = &info;
        }
    }
    pred.class_index = best->class_index;
    pred.probability = best->purity;
    pred.matched = MatchKind::Nearest;
    return pred;
}

}  // namespace aismaca
