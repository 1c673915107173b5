#include "aismaca/features.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace aismaca {

namespace {

constexpr std::string_view kBases = "ACGT";

int base_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;  // N
    }
}

char fold_symbol(char c) {
    if (c >= 'a' && c <= 'z') {
        c = static_cast<char>(c - 'a' + 'A');
    }
    return c;
}

}  // namespace

SequenceWindow::SequenceWindow(std::string_view symbols) {
    if (symbols.empty()) {
        throw EncodingError("empty sequence window");
    }
    symbols_.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const char c = fold_symbol(symbols[i]);
        if (c != 'N' && base_index(c) < 0) {
            throw EncodingError("illegal symbol '" + std::string(1, symbols[i]) +
                                "' at position " + std::to_string(i + 1));
        }
        symbols_.push_back(c);
    }
}

std::size_t measure_width(Measure m) {
    switch (m) {
        case Measure::PositionAsymmetry: return 4;
        case Measure::BaseComposition: return 4;
        case Measure::Periodicity3: return 1;
    }
    throw ConfigError("unknown measure");
}

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::PositionAsymmetry: return "position_asymmetry";
        case Measure::BaseComposition: return "base_composition";
        case Measure::Periodicity3: return "periodicity3";
    }
    throw ConfigError("unknown measure");
}

Measure measure_from_name(std::string_view name) {
    for (Measure m : {Measure::PositionAsymmetry, Measure::BaseComposition,
                      Measure::Periodicity3}) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown measure '" + std::string(name) + "'");
}

bool FeatureConfig::fitted() const {
    return mode == FeatureMode::Nucleotide || scaler.size() == feature_count();
}

std::size_t FeatureConfig::feature_count() const {
    std::size_t n = 0;
    for (Measure m : measures) {
        n += measure_width(m);
    }
    return n;
}

std::size_t FeatureConfig::state_length(std::size_t window_length) const {
    return mode == FeatureMode::Nucleotide ? window_length : feature_count();
}

void FeatureConfig::validate() const {
    if (mode == FeatureMode::Nucleotide) {
        return;
    }
    if (measures.empty()) {
        throw ConfigError("features mode requires at least one measure");
    }
    for (std::size_t i = 1; i < measures.size(); ++i) {
        if (static_cast<int>(measures[i]) <= static_cast<int>(measures[i - 1])) {
            throw ConfigError("measures must be unique and in declared order");
        }
    }
    if (!scaler.empty() && scaler.size() != feature_count()) {
        throw ConfigError("scaler length does not match feature count");
    }
    for (const ScalerEntry& e : scaler) {
        if (!e.constant && !(e.min < e.max)) {
            throw ConfigError("non-constant scaler entry requires min < max");
        }
    }
}

StateVector encode_nucleotides(const SequenceWindow& w) {
    StateVector state;
    state.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
            case 'A': state.push_back(0.0); break;
            case 'C': state.push_back(1.0 / 3.0); break;
            case 'G': state.push_back(2.0 / 3.0); break;
            case 'T': state.push_back(1.0); break;
            default: state.push_back(0.5); break;
        }
    }
    return state;
}

SequenceWindow decode_nucleotides(const StateVector& state) {
    std::string symbols;
    symbols.reserve(state.size());
    for (double x : state) {
        if (x == 0.0) {
            symbols += 'A';
        } else if (x == 1.0 / 3.0) {
            symbols += 'C';
        } else if (x == 2.0 / 3.0) {
            symbols += 'G';
        } else if (x == 1.0) {
            symbols += 'T';
        } else if (x == 0.5) {
            symbols += 'N';
        } else {
            throw EncodingError("state level " + std::to_string(x) +
                                " is not a nucleotide encoding");
        }
    }
    return SequenceWindow(symbols);
}

std::array<double, 4> position_asymmetry(const SequenceWindow& w) {
    if (w.size() < 3) {
        throw ArgumentError("position asymmetry requires window length >= 3");
    }
    // counts[base][codon position]
    std::array<std::array<std::uint64_t, 3>, 4> counts{};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int b = base_index(w[i]);
        if (b >= 0) {
            ++counts[b][i % 3];
        }
    }
    std::array<double, 4> asym{};
    for (int b = 0; b < 4; ++b) {
        const auto [min_it, max_it] =
            std::minmax_element(counts[b].begin(), counts[b].end());
        asym[b] = static_cast<double>(*max_it) /
                  static_cast<double>(*min_it + 1);
    }
    return asym;
}

std::array<double, 4> base_composition(const SequenceWindow& w) {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int b = base_index(w[i]);
        if (b >= 0) {
            ++counts[b];
            ++total;
        }
    }
    std::array<double, 4> freq{};
    if (total > 0) {
        for (int b = 0; b < 4; ++b) {
            freq[b] = static_cast<double>(counts[b]) /
                      static_cast<double>(total);
        }
    }
    return freq;
}

double periodicity3(const SequenceWindow& w) {
    if (w.size() < 3) {
        throw ArgumentError("periodicity requires window length >= 3");
    }
    // e^{-2*pi*i*j/3} cycles through three values.
    const std::array<std::complex<double>, 3> phase{
        std::complex<double>(1.0, 0.0),
        std::polar(1.0, -2.0 * M_PI / 3.0),
        std::polar(1.0, -4.0 * M_PI / 3.0),
    };
    std::array<std::complex<double>, 4> x{};
    for (std::size_t j = 0; j < w.size(); ++j) {
        const int b = base_index(w[j]);
        if (b >= 0) {
            x[b] += phase[j % 3];
        }
    }
    double energy = 0.0;
    for (int b = 0; b < 4; ++b) {
        energy += std::norm(x[b]);
    }
    const double n = static_cast<double>(w.size());
    return energy / (n * n);
}

std::vector<double> raw_features(const SequenceWindow& w,
                                 const FeatureConfig& cfg) {
    std::vector<double> out;
    out.reserve(cfg.feature_count());
    for (Measure m : cfg.measures) {
        switch (m) {
            case Measure::PositionAsymmetry: {
                const auto v = position_asymmetry(w);
                out.insert(out.end(), v.begin(), v.end());
                break;
            }
            case Measure::BaseComposition: {
                const auto v = base_composition(w);
                out.insert(out.end(), v.begin(), v.end());
                break;
            }
            case Measure::Periodicity3:
                out.push_back(periodicity3(w));
                break;
        }
    }
    return out;
}

StateVector extract_features(const SequenceWindow& w,
                             const FeatureConfig& cfg) {
    cfg.validate();
    if (cfg.mode == FeatureMode::Nucleotide) {
        return encode_nucleotides(w);
    }
    if (!cfg.fitted()) {
        throw ConfigError("feature scaler has not been fitted");
    }
    const std::vector<double> raw = raw_features(w, cfg);
    StateVector state(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const ScalerEntry& e = cfg.scaler[i];
        if (e.constant) {
            state[i] = 0.5;
        } else {
            state[i] = std::clamp((raw[i] - e.min) / (e.max - e.min), 0.0, 1.0);
        }
    }
    return state;
}

FeatureConfig fit_scaler(const std::vector<SequenceWindow>& training,
                         FeatureConfig cfg) {
    cfg.validate();
    if (training.empty()) {
        throw ConfigError("cannot fit a scaler on an empty training set");
    }
    if (cfg.mode == FeatureMode::Nucleotide) {
        cfg.scaler.clear();
        return cfg;
    }
    std::vector<ScalerEntry> scaler(cfg.feature_count());
    bool first = true;
    for (const SequenceWindow& w : training) {
        const std::vector<double> raw = raw_features(w, cfg);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (first) {
                scaler[i].min = scaler[i].max = raw[i];
            } else {
                scaler[i].min = std::min(scaler[i].min, raw[i]);
                scaler[i].max = std::max(scaler[i].max, raw[i]);
            }
        }
        first = false;
    }
    for (ScalerEntry& e : scaler) {
        e.constant = !(e.min < e.max);
    }
    cfg.scaler = std::move(scaler);
    return cfg;
}

}  // namespace aismaca
