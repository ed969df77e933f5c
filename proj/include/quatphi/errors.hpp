#pragma once

#include <stdexcept>
#include <string>

namespace quatphi {

// Base class for all library errors. The CLI maps the concrete type to an
// exit code: ValidationError -> 1, ConsistencyError -> 2, ParseError -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (bad graph, bad prime list,
// polynomial without the required root, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Exact arithmetic produced a result that contradicts an invariant the
// input data was supposed to guarantee (non-integral order, mismatched
// redundant inputs). Signals broken data rather than a malformed file.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// The input text could not be read at all.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace quatphi
