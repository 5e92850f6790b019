#pragma once

#include <stdexcept>
#include <string>

namespace gssel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rejected input: malformed files, out-of-range fields, bad configs.
/// The CLI maps this family to exit code 2.
class ValidationError : public Error {
  public:
    using Error::Error;
};

class EmptyCatalog : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NonPositiveCost : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ProbabilityOutOfRange : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ThresholdOutOfRange : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class LengthMismatch : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class NonPositiveEpsilon : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class TooLargeForExhaustive : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class InvalidConfig : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Malformed instance/config file; the message carries the offending
/// field path, e.g. "sites[3].p: must be a number in (0, 1]".
class ParseError : public ValidationError {
  public:
    using ValidationError::ValidationError;
    ParseError(const std::string& path, const std::string& why)
        : ValidationError(path + ": " + why) {}
};

/// No selection can satisfy the outage constraint, i.e. even installing
/// every site leaves the network outage probability above the threshold.
/// The CLI maps this to exit code 1.
class Infeasible : public Error {
  public:
    using Error::Error;
};

/// Internal inconsistency: no table column reaches the required margin.
/// Unreachable when the instance passed the feasibility check.
class NoQualifyingColumn : public Error {
  public:
    using Error::Error;
};

class SolverTimeout : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

class EmptyRows : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

}  // namespace gssel
