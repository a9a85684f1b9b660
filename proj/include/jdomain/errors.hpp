#ifndef JDOMAIN_ERRORS_HPP
#define JDOMAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jdomain {

/// Malformed input text, JSON or schema; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a mathematical requirement; exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSolution : ValidationError {
    NoSolution() : ValidationError("inconsistent linear system") {}
};

struct NonRationalSpectrum : ValidationError {
    using ValidationError::ValidationError;
};

struct NonCommuting : ValidationError {
    using ValidationError::ValidationError;
};

struct GradingShapeError : ValidationError {
    using ValidationError::ValidationError;
};

struct PivotNotPositive : ValidationError {
    using ValidationError::ValidationError;
};

struct PivotZero : ValidationError {
    using ValidationError::ValidationError;
};

struct DomainViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct WrongGrade : ValidationError {
    using ValidationError::ValidationError;
};

struct NotInvertibleAtReference : ValidationError {
    using ValidationError::ValidationError;
};

struct NotUnitarizable : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace jdomain

#endif
