// Error types shared across the library. Domain outcomes (LP infeasibility,
// validation violations) are returned as data; these exceptions cover misuse
// and configured resource limits.
#pragma once

#include <stdexcept>
#include <string>

namespace one21 {

// Input file or string could not be parsed into a valid network document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The requested analysis is not available for this duplex mode / topology.
class UnsupportedModeError : public std::runtime_error {
public:
    explicit UnsupportedModeError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable enumeration cap (paths, states, multigraph edges) was hit.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace one21
