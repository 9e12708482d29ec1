#pragma once

#include <stdexcept>
#include <string>

namespace causal {

/// Base class for all domain errors raised by this library. The CLI maps
/// these to exit code 1; anything else is a usage or internal error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : Error {
    using Error::Error;
};
struct SelfLoopError : Error {
    using Error::Error;
};
struct DuplicateEdgeError : Error {
    using Error::Error;
};
struct UnknownNodeError : Error {
    using Error::Error;
};
struct OverlapError : Error {
    using Error::Error;
};
struct NotObservableError : Error {
    using Error::Error;
};
struct NodeSetMismatchError : Error {
    using Error::Error;
};
struct ObservableSetMismatchError : Error {
    using Error::Error;
};
struct InconsistentPatternError : Error {
    using Error::Error;
};
struct SizeBoundError : Error {
    using Error::Error;
};
struct TooManyVariablesError : Error {
    using Error::Error;
};
struct CapacityError : Error {
    using Error::Error;
};
struct UnknownVariableError : Error {
    using Error::Error;
};
struct IncompleteCptError : Error {
    using Error::Error;
};
struct BidirectedDetectedError : Error {
    using Error::Error;
};
struct OracleFailureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

}  // namespace causal
