// Sliding-window scanning of long sequences, merging of positive windows
// into genomic regions, exon boundary rows, and the per-position
// probability track.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aismaca/classifier.hpp"

namespace aismaca {

struct WindowPrediction {
    std::size_t offset = 0;  // 0-based window start
    std::size_t length = 0;
    Prediction prediction;
};

enum class Strand { Plus, Minus };
char strand_symbol(Strand s);

enum class FeatureKind { CDSf, CDSi, Promoter };
std::string_view feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(std::string_view name);

// Merged genomic region, 1-based inclusive coordinates.
struct RegionRecord {
    int gene = 1;
    Strand strand = Strand::Plus;
    FeatureKind feature = FeatureKind::CDSf;
    std::uint64_t start = 1;
    std::uint64_t end = 1;
    double score = 0.0;
};

struct MergeConfig {
    double min_prob = 0.5;
    std::uint64_t max_gap = 0;
    bool promoter = false;  // label regions Promoter instead of CDSf/CDSi
    int gene = 1;
    Strand strand = Strand::Plus;
};

// Windows at offsets 0, stride, 2*stride, ... while they fit; one
// classification each. Throws ScanError when the sequence is shorter than
// the classifier's window.
std::vector<WindowPrediction> scan_windows(const TrainedClassifier& clf,
                                           const std::string& sequence,
                                           std::size_t stride);

// Merges qualifying windows (predicted positive_class with probability >=
// min_prob) that overlap or sit within max_gap bases. Scores sum the
// members' log2 odds with probabilities clamped to [0.01, 0.99].
std::vector<RegionRecord> merge_regions(
    const std::vector<WindowPrediction>& preds, int positive_class,
    const MergeConfig& cfg);

struct ExonRow {
    int gene = 1;
    int element = 1;
    std::string kind = "Internal";
    Strand strand = Strand::Plus;
    std::uint64_t left = 1;
    std::uint64_t right = 1;
    std::uint64_t length = 1;
    int phase = 1;  // rendered +1/+2/+3
    int frame = 1;
};

// Element numbers run 1..k per gene; phase tracks the cumulative coding
// length of the gene's prior elements, frame anchors on the left end.
std::vector<ExonRow> exon_table(const std::vector<RegionRecord>& regions);

// Mean positive-class probability over the windows covering each position;
// uncovered positions are 0.
std::vector<double> probability_track(const std::vector<WindowPrediction>& preds,
                                      int positive_class,
                                      std::size_t sequence_length);

std::string reverse_complement(const std::string& sequence);

}  // namespace aismaca
