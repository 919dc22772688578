#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace frob {

/// Residuals in messages, e.g. "1.41e+00".
inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/**
 * Base class for recoverable errors raised by the library.
 **/
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/**
 * A precondition on indices or shapes was violated by the caller.
 **/
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& message)
      : std::logic_error(message) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error(message) {}
};

/**
 * An axiom required by an operation does not hold within tolerance.
 * Carries the name of the failed axiom and its residual.
 **/
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, double residual, double threshold,
             const std::string& message)
      : Error(message),
        axiom_(std::move(axiom)),
        residual_(residual),
        threshold_(threshold) {}

  const std::string& axiom() const { return axiom_; }
  double residual() const { return residual_; }
  double threshold() const { return threshold_; }

 private:
  std::string axiom_;
  double residual_;
  double threshold_;
};

/** Malformed or inconsistent input document. */
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error(message) {}
};

}  // namespace frob
