#pragma once

#include <stdexcept>
#include <string>

namespace csswg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration violates a module guard (grid sizes, resolution, time step).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Two operands live on incompatible grids.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a precondition (e.g. a negative density).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The wavefunction has reached the edge of the periodic box.
class DomainOverflowError : public Error {
 public:
  DomainOverflowError(double ratio, double threshold);
  double ratio() const noexcept { return ratio_; }

 private:
  double ratio_;
};

/// Non-finite values appeared during time stepping.
class InstabilityError : public Error {
 public:
  explicit InstabilityError(double t);
  double time() const noexcept { return t_; }

 private:
  double t_;
};

/// An iterative method exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::string trace);
  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

}  // namespace csswg
