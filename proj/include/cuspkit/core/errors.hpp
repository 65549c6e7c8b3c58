#pragma once

#include <stdexcept>
#include <string>

namespace cuspkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Nuclear geometry violations (duplicate positions, grid beyond r0, ...).
class GeometryError : public Error {
  public:
    using Error::Error;
};

/// Invalid domain values (non-positive charge, bad electron count, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Exponent magnitude beyond the overflow guard.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Evaluation requested at a point where the quantity is singular.
class SingularPointError : public Error {
  public:
    using Error::Error;
};

/// Integration scheme incompatible with the model (e.g. tensor quadrature, N > 2).
class SchemeError : public Error {
  public:
    using Error::Error;
};

/// User handle returned NaN/Inf during integration.
class EvaluationError : public Error {
  public:
    using Error::Error;
};

/// Least-squares fit failed; carries the condition number of the normal equations.
class FitError : public Error {
  public:
    FitError(const std::string& what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const { return condition_; }

  private:
    double condition_;
};

/// Unsupported configuration value (rule degree, lmax aliasing, ...).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A check was invoked on a model that does not satisfy its hypothesis.
class HypothesisError : public Error {
  public:
    using Error::Error;
};

}  // namespace cuspkit
