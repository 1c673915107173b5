// Error types for the aismaca library. The CLI maps every Error subclass
// to exit code 2; usage problems are handled by the argument parser.
#pragma once

#include <stdexcept>
#include <string>

namespace aismaca {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rule number outside [0, 255].
struct InvalidRuleError : Error {
    using Error::Error;
};

// Fuzzy input outside the unit interval.
struct DomainError : Error {
    using Error::Error;
};

// Length mismatch between a state vector, rule vector or signature.
struct ShapeError : Error {
    using Error::Error;
};

// Exact basin census requested above the cell-count cap.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Illegal symbol in a sequence window.
struct EncodingError : Error {
    using Error::Error;
};

// Invalid or incomplete configuration (unfitted scaler, empty rule set, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Invalid call argument (empty dataset, unsorted predictions, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// No training example converged; no classifier can be built.
struct TrainingError : Error {
    using Error::Error;
};

// A class has too few examples for the requested fold count.
struct StratificationError : Error {
    using Error::Error;
};

// Malformed input text (FASTA, dataset TSV, report files).
struct FormatError : Error {
    using Error::Error;
};

// Structurally broken or truncated model file.
struct ModelFormatError : Error {
    using Error::Error;
};

// Model file with an unsupported format version.
struct ModelVersionError : Error {
    using Error::Error;
};

// Sequence shorter than the scanning window.
struct ScanError : Error {
    using Error::Error;
};

// Report rows violating an emitter invariant.
struct EmitError : Error {
    using Error::Error;
};

}  // namespace aismaca
