#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hive/sparse.hpp"

namespace hive {

enum class SolverMethod { ConjugateGradient, DirectCholesky };
enum class Preconditioner { None, Jacobi, IncompleteCholesky };

SolverMethod parse_solver_method(const std::string& name); // "cg" | "chol"
Preconditioner parse_preconditioner(const std::string& name); // "none" | "jacobi" | "ic"
const char* to_string(SolverMethod m);
const char* to_string(Preconditioner p);

struct SolverConfig {
  SolverMethod method = SolverMethod::ConjugateGradient;
  Preconditioner preconditioner = Preconditioner::Jacobi;
  /// Relative residual target ||Ax - b|| <= tol ||b||; must lie in (0, 1e-6].
  double tolerance = 1e-14;
  /// 0 selects max(10 * dimension, 1000).
  int max_iterations = 0;

  void validate() const;
};

struct SolveStats {
  int iterations = 0;
  double relative_residual = 0.0;
  /// Set when CG hit the rounding floor above tol ||b|| and was accepted on
  /// max|Ax - b| <= tol (||A||inf ||x||inf + ||b||inf) instead.
  bool backward_stable = false;
};

struct SolveResult {
  std::vector<double> x;
  SolveStats stats;
};

/// Called with (iteration, current iterate) after every CG step.
using IterationObserver = std::function<void(int, std::span<const double>)>;

/// Solves A x = b. Throws SolverError when CG misses the tolerance within the
/// iteration budget (and is not backward stable at its rounding floor) or the
/// factorization fails.
SolveResult solve(const SparseSpd& a, std::span<const double> b, const SolverConfig& cfg,
                  const IterationObserver& observer = {});

} // namespace hive
