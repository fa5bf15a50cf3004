#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace layrec {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class DuplicateNodeError : public Error {
public:
    using Error::Error;
};

class UnknownNodeError : public Error {
public:
    using Error::Error;
};

class SelfDependencyError : public Error {
public:
    using Error::Error;
};

// Syntax-level failure; carries the 1-based line (or CSV row) when known.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line = 0)
        : Error(line > 0 ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structural failure of a tabular input (missing column, bad header).
class SchemaError : public Error {
public:
    using Error::Error;
};

class IncompleteAssignmentError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class TrainError : public Error {
public:
    using Error::Error;
};

class ModelFormatError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class DomainMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyMatrixError : public Error {
public:
    using Error::Error;
};

// Invalid synthetic-system specification.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace layrec
