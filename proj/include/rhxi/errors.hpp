#pragma once

#include <stdexcept>
#include <string>

namespace rhxi {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument / violated precondition (CLI maps these to exit 2).
struct DomainError : Error {
    using Error::Error;
};

// Evaluation landed on (or indistinguishably close to) a pole.
struct PoleError : Error {
    using Error::Error;
};

// Requested tolerance is not achievable at the working precision.
struct PrecisionError : Error {
    using Error::Error;
};

// |xi(s)| is below the near-zero guard relative to |xi(2s)|; the point is
// numerically indistinguishable from a nontrivial zeta zero.
struct NearZeroDivisor : Error {
    using Error::Error;
};

// Adaptive subdivision hit the panel budget without converging.
struct MaxPanelsExceeded : Error {
    using Error::Error;
};

// The integrand produced a non-finite value inside a panel.
struct NonFiniteIntegrand : Error {
    using Error::Error;
};

// A contour abscissa passes through (or too close to) a pole of the ratio.
struct NearPoleOnContour : Error {
    using Error::Error;
};

// Sampled |f| exceeded the calibrated tail decay model.
struct CalibrationError : Error {
    using Error::Error;
};

// Residue circle does not enclose exactly one zero.
struct CircleContainsMultipleZeros : Error {
    using Error::Error;
};

// Root refinement was handed a bracket without a sign change.
struct NoSignChange : Error {
    using Error::Error;
};

// Bad flags, bad config file, malformed input file (CLI exit 2).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace rhxi
