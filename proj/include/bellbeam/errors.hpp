#pragma once

#include <stdexcept>
#include <string>

namespace bellbeam {

// Invalid-input family: the caller handed us something that can never be
// valid (bad matrix, bad beam, bad config). Maps to CLI exit code 1.
struct ZeroIntensityError : std::invalid_argument {
    explicit ZeroIntensityError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPsdError : std::invalid_argument {
    explicit NotPsdError(const std::string& what) : std::invalid_argument(what) {}
};

struct SeparableBeamError : std::invalid_argument {
    explicit SeparableBeamError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyEnsembleError : std::invalid_argument {
    explicit EmptyEnsembleError(const std::string& what) : std::invalid_argument(what) {}
};

struct EnsembleRequiredError : std::invalid_argument {
    explicit EnsembleRequiredError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical-failure family: inputs looked fine but the computation produced
// something inconsistent. Maps to CLI exit code 2.
struct StrategyOutOfRangeError : std::runtime_error {
    explicit StrategyOutOfRangeError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroReferenceIntensityError : std::runtime_error {
    explicit ZeroReferenceIntensityError(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentReadingsError : std::runtime_error {
    explicit InconsistentReadingsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellbeam
