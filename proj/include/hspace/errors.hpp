#pragma once

#include <stdexcept>
#include <string>

namespace hspace {

/// Caller broke a documented precondition (mismatched ambient spaces,
/// malformed input, stale index, ...). Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or allocation guard tripped (e.g. 2^n subset blowup).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A group-action generator produced an unusable point (NaN, out of
/// space, or nothing within snap tolerance on a matrix-backed space).
struct ActionError : std::runtime_error {
    explicit ActionError(const std::string& what) : std::runtime_error(what) {}
};

/// Every sample was discarded while approximating a quotient.
struct DegenerateQuotientError : std::runtime_error {
    explicit DegenerateQuotientError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hspace
