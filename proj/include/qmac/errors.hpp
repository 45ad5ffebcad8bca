#pragma once

#include <stdexcept>
#include <string>

namespace qmac {

// A variable assignment annihilates a denominator factor.
struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

struct CellOutOfDiagram : std::out_of_range {
    explicit CellOutOfDiagram(const std::string& msg) : std::out_of_range(msg) {}
};

// An enumeration was requested past the configured degree guard.
struct SizeLimitExceeded : std::length_error {
    explicit SizeLimitExceeded(const std::string& msg) : std::length_error(msg) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace qmac
