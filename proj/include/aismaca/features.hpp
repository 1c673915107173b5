// DNA windows and their conversion to CA state vectors: direct nucleotide
// encoding, or coding-style measures (per-base codon-position asymmetry,
// base composition, 3-base periodicity) min-max scaled into [0, 1].
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aismaca/errors.hpp"
#include "aismaca/state.hpp"

namespace aismaca {

inline constexpr std::array<std::size_t, 5> kDefaultWindowLengths{54, 108, 162,
                                                                  252, 354};

// Fixed-length DNA window over {A,C,G,T,N}; input is case-folded and
// validated at construction.
class SequenceWindow {
public:
    explicit SequenceWindow(std::string_view symbols);

    const std::string& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    friend bool operator==(const SequenceWindow&,
                           const SequenceWindow&) = default;

private:
    std::string symbols_;
};

enum class FeatureMode { Nucleotide, Features };

// Declared order fixes the feature layout: asymmetry (4 values),
// composition (4), periodicity (1).
enum class Measure { PositionAsymmetry, BaseComposition, Periodicity3 };

std::size_t measure_width(Measure m);
std::string_view measure_name(Measure m);
Measure measure_from_name(std::string_view name);

struct ScalerEntry {
    double min = 0.0;
    double max = 0.0;
    bool constant = false;  // min == max over the training set

    friend bool operator==(const ScalerEntry&, const ScalerEntry&) = default;
};

struct FeatureConfig {
    FeatureMode mode = FeatureMode::Nucleotide;
    std::vector<Measure> measures;      // features mode: non-empty, no dups,
                                        // in declared order
    std::vector<ScalerEntry> scaler;    // empty until fitted

    bool fitted() const;
    std::size_t feature_count() const;  // total scalar features
    std::size_t state_length(std::size_t window_length) const;
    void validate() const;

    friend bool operator==(const FeatureConfig&,
                           const FeatureConfig&) = default;
};

// A -> 0, C -> 1/3, G -> 2/3, T -> 1, N -> 1/2.
StateVector encode_nucleotides(const SequenceWindow& w);

// Inverse of encode_nucleotides on {A,C,G,T} levels (N maps back from 1/2).
SequenceWindow decode_nucleotides(const StateVector& state);

// For each base, max over codon positions of its count divided by
// (min count + 1); frame anchored at the window start.
std::array<double, 4> position_asymmetry(const SequenceWindow& w);

// Base frequencies among non-N symbols; all zero for an all-N window.
std::array<double, 4> base_composition(const SequenceWindow& w);

// Spectral energy at period 3: sum over bases of |X_b|^2 / N^2 where
// X_b = sum_j u_b(j) e^{-2*pi*i*j/3}.
double periodicity3(const SequenceWindow& w);

// Enabled measures concatenated in declared order, unscaled.
std::vector<double> raw_features(const SequenceWindow& w,
                                 const FeatureConfig& cfg);

// Nucleotide mode delegates to encode_nucleotides; features mode applies the
// fitted min-max scaler, clamps to [0, 1], and maps constant features to 0.5.
StateVector extract_features(const SequenceWindow& w, const FeatureConfig& cfg);

// Learns per-feature min/max over the training windows.
FeatureConfig fit_scaler(const std::vector<SequenceWindow>& training,
                         FeatureConfig cfg);

}  // namespace aismaca
