#pragma once

#include <stdexcept>

namespace ksrl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration, bad arguments. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem trouble. CLI exit code 3.
struct IoError : Error {
    using Error::Error;
};

// Malformed on-disk artifact (bad magic, truncation). CLI exit code 3.
struct FormatError : IoError {
    using IoError::IoError;
};

// Runtime contract violations. CLI exit code 4.
struct InvalidInputError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct DegenerateInputError : Error {
    using Error::Error;
};
struct InvalidActionError : Error {
    using Error::Error;
};
struct EpisodeFinishedError : Error {
    using Error::Error;
};
struct NoActionError : Error {
    using Error::Error;
};
struct PairingError : Error {
    using Error::Error;
};

} // namespace ksrl
