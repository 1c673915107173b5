#include "aismaca/evaluation.hpp"

#include <cmath>
#include <string>

#include "aismaca/random.hpp"

namespace aismaca {

ConfusionMatrix::ConfusionMatrix(std::size_t class_count)
    : classes_(class_count), counts_(class_count * class_count, 0) {
    if (class_count == 0) {
        throw ArgumentError("confusion matrix needs at least one class");
    }
}

void ConfusionMatrix::add(int actual, int predicted, std::uint64_t count) {
    if (actual < 0 || static_cast<std::size_t>(actual) >= classes_ ||
        predicted < 0 || static_cast<std::size_t>(predicted) >= classes_) {
        throw ArgumentError("class index outside the confusion matrix");
    }
    counts_[static_cast<std::size_t>(actual) * classes_ +
            static_cast<std::size_t>(predicted)] += count;
}

std::uint64_t ConfusionMatrix::at(std::size_t actual,
                                  std::size_t predicted) const {
    return counts_.at(actual * classes_ + predicted);
}

std::uint64_t ConfusionMatrix::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) {
        sum += c;
    }
    return sum;
}

ConfusionMatrix confusion(const std::vector<int>& predictions,
                          const std::vector<int>& labels,
                          std::size_t class_count) {
    if (predictions.size() != labels.size()) {
        throw ArgumentError("prediction and label lengths differ");
    }
    ConfusionMatrix m(class_count);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        m.add(labels[i], predictions[i]);
    }
    return m;
}

namespace {

MetricValue ratio(double numerator, double denominator) {
    if (denominator == 0.0) {
        return MetricValue{0.0, true};
    }
    return MetricValue{numerator / denominator, false};
}

}  // namespace

Metrics metrics(const ConfusionMatrix& m, int positive_class) {
    const std::uint64_t total = m.total();
    if (total == 0) {
        throw ArgumentError("confusion matrix is empty");
    }
    const std::size_t classes = m.class_count();
    if (positive_class < 0 ||
        static_cast<std::size_t>(positive_class) >= classes) {
        throw ArgumentError("positive class outside matrix");
    }
    const std::size_t p = static_cast<std::size_t>(positive_class);

    double tp = 0, fn = 0, fp = 0, trace = 0;
    for (std::size_t i = 0; i < classes; ++i) {
        trace += static_cast<double>(m.at(i, i));
        for (std::size_t j = 0; j < classes; ++j) {
            const double c = static_cast<double>(m.at(i, j));
            if (i == p && j == p) {
                tp += c;
            } else if (i == p) {
                fn += c;
            } else if (j == p) {
                fp += c;
            }
        }
    }
    const double tn = static_cast<double>(total) - tp - fn - fp;

    Metrics out;
    out.accuracy = trace / static_cast<double>(total);
    out.sensitivity = ratio(tp, tp + fn);
    out.specificity = ratio(tn, tn + fp);
    out.precision = ratio(tp, tp + fp);
    const double mcc_den = std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
    out.mcc = ratio(tp * tn - fp * fn, mcc_den);
    return out;
}

std::vector<std::size_t> stratified_folds(const std::vector<int>& labels,
                                          std::size_t class_count,
                                          std::size_t k, std::uint64_t seed) {
    if (k < 2) {
        throw ArgumentError("cross-validation requires k >= 2");
    }
    std::vector<std::vector<std::size_t>> by_class(class_count);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class.at(static_cast<std::size_t>(labels[i])).push_back(i);
    }
    std::vector<std::size_t> fold_of(labels.size(), 0);
    std::mt19937_64 rng = make_rng(seed, RngStream::FoldSplit);
    // Each class deals round-robin, continuing where the previous class
    // stopped, so overall fold sizes also differ by at most one.
    std::size_t offset = 0;
    for (std::size_t c = 0; c < class_count; ++c) {
        if (by_class[c].size() < k) {
            throw StratificationError(
                "class " + std::to_string(c) + " has " +
                std::to_string(by_class[c].size()) + " examples, fewer than " +
                std::to_string(k) + " folds");
        }
        shuffle_values(by_class[c], rng);
        for (std::size_t i = 0; i < by_class[c].size(); ++i) {
            fold_of[by_class[c][i]] = (i + offset) % k;
        }
        offset = (offset + by_class[c].size()) % k;
    }
    return fold_of;
}

namespace {

double metric_or_zero(const MetricValue& v) { return v.value; }

void accumulate_mean_stddev(const std::vector<FoldResult>& folds,
                            Metrics& mean, Metrics& stddev) {
    const double n = static_cast<double>(folds.size());
    const auto reduce = [&](auto pick_value, auto pick_flag, MetricValue& m,
                            MetricValue& s) {
        double sum = 0.0;
        bool flagged = false;
        for (const FoldResult& f : folds) {
            sum += pick_value(f.metrics);
            flagged |= pick_flag(f.metrics);
        }
        const double mu = sum / n;
        double var = 0.0;
        for (const FoldResult& f : folds) {
            const double d = pick_value(f.metrics) - mu;
            var += d * d;
        }
        var = folds.size() > 1 ? var / (n - 1.0) : 0.0;
        m = MetricValue{mu, flagged};
        s = MetricValue{std::sqrt(var), flagged};
    };

    double acc_sum = 0.0;
    for (const FoldResult& f : folds) {
        acc_sum += f.metrics.accuracy;
    }
    mean.accuracy = acc_sum / n;
    double acc_var = 0.0;
    for (const FoldResult& f : folds) {
        const double d = f.metrics.accuracy - mean.accuracy;
        acc_var += d * d;
    }
    stddev.accuracy =
        std::sqrt(folds.size() > 1 ? acc_var / (n - 1.0) : 0.0);

    reduce([](const Metrics& m) { return metric_or_zero(m.sensitivity); },
           [](const Metrics& m) { return m.sensitivity.undefined; },
           mean.sensitivity, stddev.sensitivity);
    reduce([](const Metrics& m) { return metric_or_zero(m.specificity); },
           [](const Metrics& m) { return m.specificity.undefined; },
           mean.specificity, stddev.specificity);
    reduce([](const Metrics& m) { return metric_or_zero(m.precision); },
           [](const Metrics& m) { return m.precision.undefined; },
           mean.precision, stddev.precision);
    reduce([](const Metrics& m) { return metric_or_zero(m.mcc); },
           [](const Metrics& m) { return m.mcc.undefined; },
           mean.mcc, stddev.mcc);
}

}  // namespace

CrossValidationResult cross_validate(const Dataset& data, std::size_t k,
                                     const FeatureConfig& features,
                                     const EngineConfig& engine,
                                     const EvolutionConfig& evolution,
                                     int positive_class) {
    if (data.examples.empty()) {
        throw ArgumentError("dataset is empty");
    }
    std::vector<int> labels;
    labels.reserve(data.examples.size());
    for (const LabeledExample& ex : data.examples) {
        labels.push_back(ex.label);
    }
    const std::vector<std::size_t> fold_of =
        stratified_folds(labels, data.class_names.size(), k, evolution.seed);

    CrossValidationResult result;
    for (std::size_t fold = 0; fold < k; ++fold) {
        Dataset train{{}, data.class_names};
        Dataset test{{}, data.class_names};
        for (std::size_t i = 0; i < data.examples.size(); ++i) {
            (fold_of[i] == fold ? test : train)
                .examples.push_back(data.examples[i]);
        }

        EvolutionConfig fold_cfg = evolution;
        fold_cfg.seed =
            make_rng(evolution.seed, RngStream::FoldSeed, fold)();

        // The fold scaler is fitted on the training split only.
        FeatureConfig fold_features = features;
        if (features.mode == FeatureMode::Features) {
            std::vector<SequenceWindow> windows;
            windows.reserve(train.examples.size());
            for (const LabeledExample& ex : train.examples) {
                windows.push_back(ex.window);
            }
            fold_features = fit_scaler(windows, fold_features);
        }

        const EvolutionResult trained =
            evolve(train, fold_features, engine, fold_cfg);

        std::vector<int> predictions;
        std::vector<int> truth;
        predictions.reserve(test.examples.size());
        for (const LabeledExample& ex : test.examples) {
            predictions.push_back(classify(trained.best, ex.window).class_index);
            truth.push_back(ex.label);
        }
        FoldResult fr;
        fr.fold = fold + 1;
        fr.test_size = test.examples.size();
        fr.metrics = metrics(
            confusion(predictions, truth, data.class_names.size()),
            positive_class);
        fr.best_affinity = trained.best_affinity;
        result.folds.push_back(fr);
    }

    accumulate_mean_stddev(result.folds, result.mean, result.stddev);
    return result;
}

}  // namespace aismaca
