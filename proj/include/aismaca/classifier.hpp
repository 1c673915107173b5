// Attractor-basin classification: a rule vector's fitness on labeled
// windows, majority labeling of attractors, and purity-based prediction
// with nearest-signature matching for unseen basins.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aismaca/engine.hpp"
#include "aismaca/features.hpp"

namespace aismaca {

struct LabeledExample {
    SequenceWindow window;
    int label = 0;  // class index into the dataset's class-name table
};

struct Dataset {
    std::vector<LabeledExample> examples;
    std::vector<std::string> class_names;
};

struct AttractorInfo {
    int class_index = 0;     // majority class (ties break low)
    double purity = 1.0;     // majority count / support
    std::uint64_t support = 0;

    friend bool operator==(const AttractorInfo&,
                           const AttractorInfo&) = default;
};

using AttractorMap = std::map<AttractorSignature, AttractorInfo>;

// Windows encoded once; fitness evaluation is rule-vector work only.
struct EncodedDataset {
    std::vector<StateVector> states;
    std::vector<int> labels;
    std::size_t class_count = 0;
    std::size_t window_length = 0;
};

EncodedDataset encode_dataset(const std::vector<LabeledExample>& examples,
                              std::size_t class_count,
                              const FeatureConfig& cfg);

struct FitnessResult {
    double score = 0.0;         // raw accuracy minus the attractor penalty
    double raw_accuracy = 0.0;  // non-converged examples count as wrong
    AttractorMap map;           // converged examples only
    std::size_t non_converged = 0;
};

inline constexpr double kAttractorPenaltyWeight = 0.05;

FitnessResult fitness(const RuleVector& rv, const EncodedDataset& data,
                      const EngineConfig& cfg);
FitnessResult fitness(const RuleVector& rv,
                      const std::vector<LabeledExample>& examples,
                      std::size_t class_count, const FeatureConfig& features,
                      const EngineConfig& cfg);

struct TrainedClassifier {
    RuleVector rule_vector;
    AttractorMap attractor_map;
    FeatureConfig feature_config;
    EngineConfig engine;
    std::vector<std::string> class_names;
    std::size_t window_length = 0;
    std::uint64_t seed = 0;

    // Per-class attractor support mass; the fallback prediction uses the
    // heaviest class and its share.
    std::vector<std::uint64_t> class_support() const;
    int majority_class() const;

    void validate() const;

    friend bool operator==(const TrainedClassifier&,
                           const TrainedClassifier&) = default;
};

struct TrainingDiagnostics {
    std::size_t converged = 0;
    std::size_t non_converged = 0;
};

TrainedClassifier build_classifier(const RuleVector& rv, const Dataset& data,
                                   const FeatureConfig& features,
                                   const EngineConfig& engine,
                                   std::uint64_t seed,
                                   TrainingDiagnostics* diagnostics = nullptr);

enum class MatchKind { Exact, Nearest, Fallback };
std::string_view match_kind_name(MatchKind kind);

struct Prediction {
    int class_index = 0;
    double probability = 0.0;
    MatchKind matched = MatchKind::Fallback;
};

// Exact signature hit uses that attractor; misses fall back to the nearest
// attractor by L1 distance over levels (ties to the lexicographically
// smaller signature); non-convergence yields the majority-class fallback.
Prediction classify(const TrainedClassifier& clf, const SequenceWindow& w);

}  // namespace aismaca
