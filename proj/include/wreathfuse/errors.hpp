#pragma once

#include <stdexcept>
#include <string>

namespace wrf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
struct DivideByZeroError : Error {
    using Error::Error;
};

/// Evaluation of a rational function at a genuine (non-removable) pole.
/// `at` holds the serialized evaluation point; `step` is the 1-based
/// evaluation step for chained evaluations, or -1 when not applicable.
struct PoleError : Error {
    std::string at;
    int step = -1;
    PoleError(const std::string& msg, std::string at_, int step_ = -1)
        : Error(msg), at(std::move(at_)), step(step_) {}
};

struct ParseError : Error {
    using Error::Error;
};

/// Structural validation failed (bad multiplication table, character
/// orthogonality violation, non-standard tableau, ...).
struct ValidationError : Error {
    using Error::Error;
};

struct UnsupportedGroupError : Error {
    using Error::Error;
};

/// A verification job exceeds the desk-scale size cap.
struct CapExceededError : Error {
    unsigned long long estimate;
    CapExceededError(const std::string& msg, unsigned long long estimate_)
        : Error(msg), estimate(estimate_) {}
};

} // namespace wrf
