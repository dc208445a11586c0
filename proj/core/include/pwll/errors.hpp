#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pwll {

// Base class for every error raised by the library. Subclasses name the
// failure; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  explicit DisconnectedGraph(std::size_t components);
  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

class DegenerateFeatures : public Error {
 public:
  using Error::Error;
};

class NonPositiveGamma : public Error {
 public:
  using Error::Error;
};

class EmptyLabeledSet : public Error {
 public:
  EmptyLabeledSet();
};

class EmptyUnlabeledSet : public Error {
 public:
  EmptyUnlabeledSet();
};

// Raised when conjugate gradient misses its tolerance. Carries the final
// relative residual of every right-hand-side column.
class SolverDiverged : public Error {
 public:
  SolverDiverged(std::vector<double> residuals, double tolerance,
                 std::size_t iterations);
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class KTooLarge : public Error {
 public:
  KTooLarge(int k, int classes);
};

class OracleOutOfRange : public Error {
 public:
  OracleOutOfRange(std::size_t index, int label, int classes);
};

class BetaOutOfRange : public Error {
 public:
  explicit BetaOutOfRange(double beta);
};

class NonPositiveDensity : public Error {
 public:
  using Error::Error;
};

class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Config / sweep parse failure tagged with the 1-based source line.
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pwll
