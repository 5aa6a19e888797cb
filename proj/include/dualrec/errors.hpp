#pragma once

#include <stdexcept>
#include <string>

namespace dualrec {

// Unknown or mismatched entity id.
struct IdentityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/matrix dimension mismatch.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training preconditions not met (e.g. no positive samples).
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Assignment attempted for a user outside the available set.
struct AvailabilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required score is missing or non-finite at scoring time.
struct ScoringError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed persisted data; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg
                                       : msg),
          line_number(line) {}
    long line_number;
};

}  // namespace dualrec
