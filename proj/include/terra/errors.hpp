#pragma once

#include <stdexcept>
#include <string>

namespace terra {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
struct IoError : Error {
    using Error::Error;
};

/// Byte stream does not match the MGRD layout (bad magic, version, dtype,
/// truncated payload).
struct FormatError : Error {
    using Error::Error;
};

/// Argument or metadata violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Sample lost all content during trimming.
struct DegenerateSampleError : Error {
    using Error::Error;
};

/// DEM has no valid pixel to fill from.
struct UnrecoverableSampleError : Error {
    using Error::Error;
};

/// Grid statistics degenerate (zero variance, zero range).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Pipeline configuration failed to load or contains unknown keys.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace terra
