#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace intpart {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph / partition / spec files.
struct FormatError : Error {
    using Error::Error;
};

// n*d odd in a regular-graph request.
struct ParityError : Error {
    using Error::Error;
};

// Rejection sampling gave up before producing a simple graph.
struct AttemptsExhaustedError : Error {
    using Error::Error;
};

// An operation required d(x) = a(x)+b(x) (or demand bounds) and the input
// does not satisfy it.
struct DemandMismatchError : Error {
    using Error::Error;
};

struct NotFourSparseError : Error {
    NotFourSparseError(const std::string& msg, std::array<int, 4> w)
        : Error(msg), witness(w) {}
    std::array<int, 4> witness;
};

struct NoInternalSubsetError : Error {
    using Error::Error;
};

// The constructive solver's loop found neither an absorbable vertex nor a
// shed pair, or a state invariant broke. Carries a dump of the search state
// so the failing configuration can be inspected.
struct DichotomyFailureError : Error {
    DichotomyFailureError(const std::string& msg, std::string dump)
        : Error(msg), state_dump(std::move(dump)) {}
    std::string state_dump;
};

// Input exceeds a brute-force size limit; never silently truncated.
struct SizeLimitError : Error {
    using Error::Error;
};

}  // namespace intpart
