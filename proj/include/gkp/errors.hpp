#pragma once

#include <stdexcept>
#include <string>

namespace gkp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range configuration input. Always carries the
// offending key in the message.
struct ConfigError : Error {
    using Error::Error;
};

// Iteration-level failures: bad seeds, divergence, line-search breakdown.
struct SolverError : Error {
    using Error::Error;
};

// File format violations (bad magic, truncation, dimension overflow).
struct IoError : Error {
    using Error::Error;
};

} // namespace gkp
