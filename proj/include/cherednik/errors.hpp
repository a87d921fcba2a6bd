#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

// All library errors derive from Error so callers can catch one type.
// Exact arithmetic never degrades silently: anything that cannot be
// represented or solved exactly throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Mixing elements of different fields (wrong p, wrong modulus, ...).
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what = "elements belong to different fields") : Error(what) {}
};

// Wrong number of variables / components.
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "arity mismatch") : Error(what) {}
};

// A homogeneous-degree contract was violated.
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what = "degree mismatch") : Error(what) {}
};

// Polynomial division that must be exact left a remainder.
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& what = "inexact polynomial division") : Error(what) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// A linear or antidifferentiation problem has no solution.
struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error(what) {}
};

// A solution exists but is not unique where uniqueness was required.
struct NonUnique : Error {
    explicit NonUnique(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace cherednik
