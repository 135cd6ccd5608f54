#pragma once

#include <stdexcept>
#include <string>

namespace dpchroma {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: edge lists, generator specs, serialized covers.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input or a violated precondition (loops, duplicate
/// edges, disconnected graph where a connected one is required, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a hard or configured resource limit. The message names the
/// limit and the offending quantity.
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace dpchroma
