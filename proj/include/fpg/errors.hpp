#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid numeric input to a physics/geometry function (non-positive distance, u outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Degenerate or malformed trajectory specification.
class TrajectoryError : public Error {
public:
    using Error::Error;
};

// Wrong arity or layout of a state/action vector.
class EncodingError : public Error {
public:
    using Error::Error;
};

// Spectrum observation too sparse to classify.
class ObservationError : public Error {
public:
    using Error::Error;
};

// Unusable LLM reply (missing marker, no parseable waypoints).
class ParseError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace fpg
