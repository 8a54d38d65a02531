#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpcover {

/// Base class for all toolkit errors. `code()` is the stable machine-readable
/// identifier that the CLI echoes in error reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Precondition violations: bad dimensions, empty center sets, invalid deltas.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& message)
        : Error("invalid-input", message) {}
};

/// Raised when a traversal is asked for more centers than the scanned set holds.
class InsufficientPointsError : public Error {
public:
    explicit InsufficientPointsError(const std::string& message)
        : Error("insufficient-points", message) {}
};

/// The exhaustive solver refuses instances beyond its enumeration cap rather
/// than silently approximating.
class InstanceTooLargeError : public Error {
public:
    explicit InstanceTooLargeError(const std::string& message)
        : Error("instance-too-large", message) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& message)
        : Error("not-found", message) {}
};

/// Text input could not be parsed; `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("parse-error", message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Binary input with a bad magic tag or unsupported version.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message)
        : Error("format-error", message) {}
};

/// Binary input whose payload does not match the declared element count.
class PayloadLengthError : public Error {
public:
    explicit PayloadLengthError(const std::string& message)
        : Error("payload-length-error", message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io-error", message) {}
};

}  // namespace fpcover
