#pragma once

#include <stdexcept>
#include <string>

namespace frobcheck {

// Dimension/shape violations (e.g. composing a 2x3 with a 4x4).
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Structure that an instance does not carry (braiding on Sigma G, a
// non-invertible component handed to from_strong, a rho table that is not
// a homomorphism).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A check or transport asked for a component the functor's tables do not
// cover. The message lists the missing objects.
struct CoverageError : std::runtime_error {
    explicit CoverageError(const std::string& what) : std::runtime_error(what) {}
};

// Spec-text syntax or binding errors, with 1-based position.
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + what),
          line(line_),
          col(col_) {}
};

}  // namespace frobcheck
