#pragma once

#include <stdexcept>
#include <string>

namespace netid {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data violates a structural rule (self-loop, duplicate edge, index
// out of range, ...). The message names the offending element.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A randomized numeric routine could not produce a usable instance.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace netid
