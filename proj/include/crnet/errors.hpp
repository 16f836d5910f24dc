#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crnet {

/// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedChannel : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    using Error::Error;
};

class NoOverlap : public Error {
public:
    using Error::Error;
};

class UnknownParticipant : public Error {
public:
    using Error::Error;
};

class EmptyGrid : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class SaltMissing : public Error {
public:
    using Error::Error;
};

class NotAMonday : public Error {
public:
    using Error::Error;
};

/// Input parsing failure; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    explicit ParseError(const std::string& reason) : Error(reason), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownKind : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace crnet
