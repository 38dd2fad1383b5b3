#pragma once

#include <stdexcept>
#include <string>

namespace qumetrics {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The Hermitian eigensolver did not converge within its iteration cap.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A fractional power was requested of a matrix with a genuinely negative eigenvalue.
class NotPositiveSemidefinite : public Error {
 public:
  NotPositiveSemidefinite(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

enum class Violation { kNotHermitian, kNonUnitTrace, kNotPositiveSemidefinite, kMalformed };

const char* to_string(Violation v) noexcept;

/// Structured rejection of a candidate density matrix or observable. `measured` holds the
/// residual that broke the invariant (trace error, most negative eigenvalue, ...).
class ValidationError : public Error {
 public:
  ValidationError(Violation violation, double measured, const std::string& detail);
  Violation violation() const noexcept { return violation_; }
  double measured() const noexcept { return measured_; }

 private:
  Violation violation_;
  double measured_;
};

}  // namespace qumetrics
