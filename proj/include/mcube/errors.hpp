#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcube {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class NotSymmetricError : public Error {
public:
    using Error::Error;
};

// Thrown by the inverse-sum route when the distance matrix is singular,
// i.e. the space is not of strict 1-negative type.
class NotStrictError : public Error {
public:
    using Error::Error;
};

// Signals an input outside the negative-type domain (e.g. a nonpositive
// inverse-entry sum); cannot occur for Hamming-cube subsets.
class DegenerateError : public Error {
public:
    using Error::Error;
};

class NotMaximalError : public Error {
public:
    using Error::Error;
};

class NotATreeError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace mcube
