// Confusion-matrix metrics and seeded stratified k-fold cross-validation.
#pragma once

#include <cstdint>
#include <vector>

#include "aismaca/classifier.hpp"
#include "aismaca/clonal.hpp"

namespace aismaca {

class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t class_count);

    void add(int actual, int predicted, std::uint64_t count = 1);
    std::uint64_t at(std::size_t actual, std::size_t predicted) const;
    std::size_t class_count() const { return classes_; }
    std::uint64_t total() const;

private:
    std::size_t classes_;
    std::vector<std::uint64_t> counts_;  // row-major [actual][predicted]
};

ConfusionMatrix confusion(const std::vector<int>& predictions,
                          const std::vector<int>& labels,
                          std::size_t class_count);

// Ratio with a zero-denominator flag; flagged values are reported as 0.
struct MetricValue {
    double value = 0.0;
    bool undefined = false;
};

struct Metrics {
    double accuracy = 0.0;
    MetricValue sensitivity;
    MetricValue specificity;
    MetricValue precision;
    MetricValue mcc;
};

// One-vs-rest around the given positive class.
Metrics metrics(const ConfusionMatrix& m, int positive_class);

struct FoldResult {
    std::size_t fold = 0;  // 1-based
    std::size_t test_size = 0;
    Metrics metrics;
    double best_affinity = 0.0;
};

struct CrossValidationResult {
    std::vector<FoldResult> folds;
    // Mean and sample standard deviation over folds, field by field; a mean
    // or stddev value is flagged when any contributing fold was flagged.
    Metrics mean;
    Metrics stddev;
};

// Stratified fold assignment from the evolution seed; fold f is evaluated
// on its held-out examples after training on the rest with a derived seed.
CrossValidationResult cross_validate(const Dataset& data, std::size_t k,
                                     const FeatureConfig& features,
                                     const EngineConfig& engine,
                                     const EvolutionConfig& evolution,
                                     int positive_class);

// Deterministic stratified fold labels (values in [0, k)) per example.
std::vector<std::size_t> stratified_folds(const std::vector<int>& labels,
                                          std::size_t class_count,
                                          std::size_t k, std::uint64_t seed);

}  // namespace aismaca
