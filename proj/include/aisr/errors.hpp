#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisr {

// Base class for everything this library throws on bad input or
// exceeded limits. Internal logic errors use assert/std::logic_error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed identity/word/literal text. Position is a 0-based byte
// offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EmptySum : public Error {
public:
    using Error::Error;
};

class EmptyWord : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotStair : public Error {
public:
    using Error::Error;
};

class NotValidChainMap : public Error {
public:
    using Error::Error;
};

class NotReflexive : public Error {
public:
    using Error::Error;
};

class UnboundLetter : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the element budget.
class TooLarge : public Error {
public:
    using Error::Error;
};

// Exhaustive check would exceed the word-evaluation budget.
class Infeasible : public Error {
public:
    using Error::Error;
};

}  // namespace aisr
