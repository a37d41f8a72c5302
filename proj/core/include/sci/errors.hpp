#pragma once

#include <stdexcept>
#include <string>

namespace sci {

/// Malformed configuration data: bad specs, scenarios, thresholds,
/// dimension mismatches between arrangements and specs.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A frame could not be identified (missing channel, channel mismatch,
/// model role mismatch).
class IdentifyError : public std::runtime_error {
public:
    explicit IdentifyError(const std::string& what) : std::runtime_error(what) {}
};

/// Training did not reach the convergence criterion.
class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, double final_loss)
        : std::runtime_error(what), final_loss(final_loss) {}
    double final_loss;
};

/// File read/write and parse failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sci
