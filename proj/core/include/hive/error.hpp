#pragma once

#include <stdexcept>
#include <string>

namespace hive {

/// Invalid user-facing configuration (bad level, unknown scheme, ...).
/// The driver maps it to exit code 1.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical stage failed (solver did not converge, rank-deficient fit,
/// broken mesh invariant). The driver maps it to exit code 2.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MeshError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SolverError : public NumericalError {
public:
  SolverError(const std::string& what, int iterations, double residual)
      : NumericalError(what), iterations_(iterations), residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

private:
  int iterations_;
  double residual_;
};

class FitError : public NumericalError {
public:
  FitError(const std::string& what, std::size_t patch)
      : NumericalError(what), patch_(patch) {}

  std::size_t patch() const noexcept { return patch_; }

private:
  std::size_t patch_;
};

} // namespace hive
