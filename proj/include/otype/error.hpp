#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otype {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          detail_(message),
          position_(position) {}

    std::size_t position() const { return position_; }
    /// The message without the position suffix.
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t position_;
};

/// An operation was applied outside its domain (zero ordinal, bad partition, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A relation that is not a strict partial order (cycle after closure).
class InvalidOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured resource cap (enumeration size, nesting depth) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace otype
