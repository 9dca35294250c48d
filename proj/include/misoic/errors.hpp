#pragma once

#include <stdexcept>
#include <string>

namespace misoic {

// Typed failures surfaced by the library. Callers that can recover catch the
// specific type; the CLI maps any of these to exit code 1.

struct DegenerateDirection : std::runtime_error {
    explicit DegenerateDirection(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two channel vectors are (numerically) parallel and a rank-2
// construction would collapse to rank one.
struct ParallelChannels : std::runtime_error {
    explicit ParallelChannels(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateBalance : std::runtime_error {
    explicit DegenerateBalance(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDimension : std::runtime_error {
    explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

} // namespace misoic
