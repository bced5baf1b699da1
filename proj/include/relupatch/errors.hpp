#pragma once

#include <stdexcept>
#include <string>

namespace relupatch {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (network files, spec files, solver output).
struct ParseError : Error {
    using Error::Error;
};

// Structural problems: dimension chains, bad indices, inconsistent shapes.
struct ValidationError : Error {
    using Error::Error;
};

// Solver process failures: spawn errors, garbage output.
struct SolverError : Error {
    using Error::Error;
};

} // namespace relupatch
