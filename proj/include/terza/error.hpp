#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace terza {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A jet operation left the domain of the underlying real function
// (ln/sqrt of a non-positive value, division by zero, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : Error(what), position_(position) {}
    std::optional<std::size_t> position() const { return position_; }

private:
    std::optional<std::size_t> position_;
};

// The argument came too close to a singularity (pole of tan, log at 0).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset), message_(what) {}
    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

// Surface-definition file errors; line is 1-based, 0 when not tied to a line.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class OutOfDomainError : public Error {
public:
    using Error::Error;
};

class StencilError : public Error {
public:
    using Error::Error;
};

class DegenerateChartError : public Error {
public:
    using Error::Error;
};

class ParabolicPointError : public Error {
public:
    using Error::Error;
};

class MetricError : public Error {
public:
    using Error::Error;
};

class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public Error {
public:
    using Error::Error;
};

}  // namespace terza
