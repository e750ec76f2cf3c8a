#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An assignment does not cover a variable the operation needs.
class ScopeError : public Error {
public:
    ScopeError(const std::string& msg, std::uint32_t var)
        : Error(msg), variable(var) {}
    std::uint32_t variable;
};

// Structural precondition on a circuit failed (cycle, bad child index,
// non-decomposable AND, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

// An OR node admits an assignment satisfying two children.
class DeterminismError : public Error {
public:
    using Error::Error;
};

// An exhaustive sweep would exceed the configured guard. Never downgraded
// to sampling; the caller must raise the guard or shrink the instance.
class GuardError : public Error {
public:
    GuardError(const std::string& msg, std::uint64_t required, std::uint64_t guard)
        : Error(msg), required(required), guard(guard) {}
    std::uint64_t required;
    std::uint64_t guard;
};

// Text import failed; line is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::uint64_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::uint64_t line;
};

// An assignment that should encode a linear order does not.
class DecodeError : public Error {
public:
    DecodeError(const std::string& msg, std::uint32_t i, std::uint32_t j, std::uint32_t k)
        : Error(msg), i(i), j(j), k(k) {}
    // A violated triple: i precedes j and j precedes k but i does not precede k.
    std::uint32_t i, j, k;
};

// A computed result failed its own mandatory post-validation.
class PostconditionError : public Error {
public:
    using Error::Error;
};

} // namespace linc
