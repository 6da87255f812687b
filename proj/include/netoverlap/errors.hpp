#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netoverlap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class NonPositiveWeightError : public Error {
public:
    using Error::Error;
};

class NodeOutOfRangeError : public Error {
public:
    using Error::Error;
};

class SameNodeError : public Error {
public:
    using Error::Error;
};

class NotAnEdgeError : public Error {
public:
    using Error::Error;
};

// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InfeasibleParamsError : public Error {
public:
    using Error::Error;
};

class GenerationFailedError : public Error {
public:
    using Error::Error;
};

class TooFewPointsError : public Error {
public:
    using Error::Error;
};

} // namespace netoverlap
