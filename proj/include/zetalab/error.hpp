#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Base of every error raised by the library. Subclasses map onto CLI exit codes:
// input/domain problems exit with 1, numerical failures with 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of the requested operation (e.g. re(s) <= 1 for the
// direct series, or a point outside the critical strip).
class DomainError : public InputError {
public:
    using InputError::InputError;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class NearPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class ToleranceUnreachable : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BoundaryTooClose : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepTooCoarse : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace zetalab
