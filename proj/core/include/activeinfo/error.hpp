#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace activeinfo {

// Base class for every domain error raised by the library. Callers that only
// care about "bad input vs. bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Target kind does not fit the distribution's support (e.g. an atom set
// against a continuous family, or an atom label that is not in the support).
class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidTarget : public Error {
 public:
  using Error::Error;
};

// Baseline assigns zero probability to the target, so the log ratio is undefined.
class UndefinedBaseline : public Error {
 public:
  using Error::Error;
};

// A real ordering was required but the finite support only carries opaque labels.
class UnorderableSupport : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations, std::vector<double> residuals,
                std::vector<double> multipliers)
      : Error(what),
        iterations_(iterations),
        residuals_(std::move(residuals)),
        multipliers_(std::move(multipliers)) {}

  int iterations() const noexcept { return iterations_; }
  const std::vector<double>& residuals() const noexcept { return residuals_; }
  const std::vector<double>& multipliers() const noexcept { return multipliers_; }

 private:
  int iterations_;
  std::vector<double> residuals_;
  std::vector<double> multipliers_;
};

}  // namespace activeinfo
