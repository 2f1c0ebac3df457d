#pragma once

#include <stdexcept>
#include <string>

namespace qframe {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

struct MultiplicityViolation : Error {
    explicit MultiplicityViolation(const std::string& msg) : Error(msg) {}
};

struct NotAFrame : Error {
    explicit NotAFrame(const std::string& msg) : Error(msg) {}
};

struct NotABasis : Error {
    explicit NotABasis(const std::string& msg) : Error(msg) {}
};

struct EmptySpan : Error {
    explicit EmptySpan(const std::string& msg) : Error(msg) {}
};

struct NotARepresentation : Error {
    explicit NotARepresentation(const std::string& msg) : Error(msg) {}
};

struct InvalidP : Error {
    explicit InvalidP(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct InvalidNoiseSpec : Error {
    explicit InvalidNoiseSpec(const std::string& msg) : Error(msg) {}
};

} // namespace qframe
