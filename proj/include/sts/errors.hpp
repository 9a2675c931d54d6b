#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sts {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Sequence too short/long for the requested operation.
class LengthError : public Error {
public:
    using Error::Error;
};

/// Malformed bit-stream input; `offset` is the character position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Invalid generator, campaign or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace sts
