#pragma once

#include <stdexcept>
#include <string>

namespace doco {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// LIBSVM parse failure; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Inner solver failed to certify convergence; carries the final optimality gap estimate.
struct SolverError : std::runtime_error {
    double gap;
    int iterations;
    SolverError(double gap_, int iterations_, const std::string& what_)
        : std::runtime_error(what_), gap(gap_), iterations(iterations_) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace doco
