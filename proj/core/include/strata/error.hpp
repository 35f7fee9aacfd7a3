#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument value outside its documented domain (rule code, cell index, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A structurally well-formed value that breaks an invariant (dimension
// mismatch, empty plan, inconsistent header, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Malformed input text/bytes. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace strata
