#include "aismaca/scan.hpp"

#include <algorithm>
#include <cmath>

namespace aismaca {

char strand_symbol(Strand s) { return s == Strand::Plus ? '+' : '-'; }

std::string_view feature_kind_name(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::CDSf: return "CDSf";
        case FeatureKind::CDSi: return "CDSi";
        case FeatureKind::Promoter: return "promoter";
    }
    return "unknown";
}

FeatureKind feature_kind_from_name(std::string_view name) {
    for (FeatureKind kind :
         {FeatureKind::CDSf, FeatureKind::CDSi, FeatureKind::Promoter}) {
        if (feature_kind_name(kind) == name) {
            return kind;
        }
    }
    throw FormatError("unknown feature kind '" + std::string(name) + "'");
}

std::vector<WindowPrediction> scan_windows(const TrainedClassifier& clf,
                                           const std::string& sequence,
                                           std::size_t stride) {
    if (stride < 1) {
        throw ArgumentError("stride must be >= 1");
    }
    const std::size_t window = clf.window_length;
    if (sequence.size() < window) {
        throw ScanError("sequence length " + std::to_string(sequence.size()) +
                        " shorter than window " + std::to_string(window));
    }
    std::vector<WindowPrediction> preds;
    preds.reserve((sequence.size() - window) / stride + 1);
    for (std::size_t offset = 0; offset + window <= sequence.size();
         offset += stride) {
        WindowPrediction wp;
        wp.offset = offset;
        wp.length = window;
        wp.prediction = classify(clf, SequenceWindow(sequence.substr(offset, window)));
        preds.push_back(wp);
    }
    return preds;
}

namespace {

double clamped_log_odds(double p) {
    const double clamped = std::clamp(p, 0.01, 0.99);
    return std::log2(clamped / (1.0 - clamped));
}

}  // namespace

std::vector<RegionRecord> merge_regions(
    const std::vector<WindowPrediction>& preds, int positive_class,
    const MergeConfig& cfg) {
    for (std::size_t i = 1; i < preds.size(); ++i) {
        if (preds[i].offset < preds[i - 1].offset) {
            throw ArgumentError("window predictions must be sorted by offset");
        }
    }

    std::vector<RegionRecord> regions;
    bool open = false;
    std::size_t first_offset = 0;
    std::size_t last_covered = 0;  // 0-based inclusive end of the region
    double score = 0.0;

    const auto close = [&] {
        RegionRecord region;
        region.gene = cfg.gene;
        region.strand = cfg.strand;
        region.feature = cfg.promoter ? FeatureKind::Promoter
                         : regions.empty() ? FeatureKind::CDSf
                                           : FeatureKind::CDSi;
        region.start = first_offset + 1;
        region.end = last_covered + 1;
        region.score = score;
        regions.push_back(region);
    };

    for (const WindowPrediction& wp : preds) {
        const Prediction& p = wp.prediction;
        if (p.class_index != positive_class || p.probability < cfg.min_prob) {
            continue;
        }
        const std::size_t window_end = wp.offset + wp.length - 1;
        if (open && wp.offset <= last_covered + 1 + cfg.max_gap) {
            last_covered = std::max(last_covered, window_end);
            score += clamped_log_odds(p.probability);
        } else {
            if (open) {
                close();
            }
            open = true;
            first_offset = wp.offset;
            last_covered = window_end;
            score = clamped_log_odds(p.probability);
        }
    }
    if (open) {
        close();
    }
    return regions;
}

std::vector<ExonRow> exon_table(const std::vector<RegionRecord>& regions) {
    std::vector<ExonRow> rows;
    rows.reserve(regions.size());
    int current_gene = 0;
    int element = 0;
    std::uint64_t prior_length = 0;
    std::uint64_t prior_end = 0;
    for (const RegionRecord& region : regions) {
        if (region.start > region.end) {
            throw ArgumentError("region start exceeds end");
        }
        if (region.gene != current_gene) {
            current_gene = region.gene;
            element = 0;
            prior_length = 0;
            prior_end = 0;
        } else if (region.start <= prior_end) {
            throw ArgumentError("regions within a gene must be sorted and disjoint");
        }
        ++element;
        ExonRow row;
        row.gene = region.gene;
        row.element = element;
        row.strand = region.strand;
        row.left = region.start;
        row.right = region.end;
        row.length = region.end - region.start + 1;
        row.phase = static_cast<int>(prior_length % 3) + 1;
        row.frame = static_cast<int>((region.start - 1) % 3) + 1;
        rows.push_back(row);
        prior_length += row.length;
        prior_end = region.end;
    }
    return rows;
}

std::vector<double> probability_track(const std::vector<WindowPrediction>& preds,
                                      int positive_class,
                                      std::size_t sequence_length) {
    std::vector<double> sum(sequence_length, 0.0);
    std::vector<std::uint32_t> cover(sequence_length, 0);
    for (const WindowPrediction& wp : preds) {
        // Windows predicted as another class contribute their residual mass;
        // exact for two-class models.
        const double p = wp.prediction.class_index == positive_class
                             ? wp.prediction.probability
                             : 1.0 - wp.prediction.probability;
        const std::size_t end = std::min(wp.offset + wp.length, sequence_length);
        for (std::size_t pos = wp.offset; pos < end; ++pos) {
            sum[pos] += p;
            ++cover[pos];
        }
    }
    for (std::size_t pos = 0; pos < sequence_length; ++pos) {
        if (cover[pos] > 0) {
            sum[pos] /= static_cast<double>(cover[pos]);
        }
    }
    return sum;
}

std::string reverse_complement(const std::string& sequence) {
    std::string out;
    out.reserve(sequence.size());
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
        char c = *it;
        if (c >= 'a' && c <= 'z') {
            c = static_cast<char>(c - 'a' + 'A');
        }
        switch (c) {
            case 'A': out += 'T'; break;
            case 'T': out += 'A'; break;
            case 'C': out += 'G'; break;
            case 'G': out += 'C'; break;
            case 'N': out += 'N'; break;
            default:
                throw EncodingError("illegal symbol '" + std::string(1, *it) +
                                    "' in sequence");
        }
    }
    return out;
}

}  // namespace aismaca
