#pragma once

#include <optional>
#include <vector>

#include "hive/lift.hpp"
#include "hive/problem.hpp"
#include "hive/system.hpp"

namespace hive {

struct SupercloseNorms {
  double l2 = 0.0;
  double h1 = 0.0;
  /// Maximum over honeycomb vertices (nodal, not a dense sample).
  double linf = 0.0;
};

/// Norms of e_h = ih_u - uh. Both fields are piecewise linear, so the given
/// quadrature degree (>= 2) integrates them exactly. Throws ConfigError on a
/// mesh mismatch.
SupercloseNorms norms_superclose(const FieldP1& uh, const FieldP1& ih_u, int quad_degree = 2);

/// ||u - uh||_L2 over all subtriangles.
double norm_l2_true(const FieldP1& uh, const ManufacturedProblem& problem, int quad_degree = 6);

struct LiftErrors {
  double l2 = 0.0;
  /// Broken H1 seminorm, summed patch by patch.
  double h1h = 0.0;
};

/// Errors of the patchwise cubic against u; each patch's 16 subtriangles are
/// integrated against that patch's own cubic.
LiftErrors lift_errors(const LiftedSolution& lift, const ManufacturedProblem& problem,
                       int quad_degree = 6);

/// One row of a convergence table. Orders are log2 of consecutive ratios;
/// lift entries stay empty below level 3 or when lifting is disabled.
struct StudyRow {
  int level = 0;
  double h = 0.0;
  int dofs = 0;
  double e_ih_l2 = 0.0;
  double r_ih_l2 = 0.0;
  double e_ih_h1 = 0.0;
  double r_ih_h1 = 0.0;
  double e_ih_linf = 0.0;
  double r_ih_linf = 0.0;
  /// ||u - ubar_h||_L2 with ubar_h the auxiliary P1 solution
  /// (see auxiliary_solution); the discrete-harmonic representation's error
  /// is kept in e_l2_vh.
  double e_l2 = 0.0;
  double r_l2 = 0.0;
  double e_l2_vh = 0.0;
  std::optional<double> e_lift_l2;
  std::optional<double> r_lift_l2;
  std::optional<double> e_lift_h1h;
  std::optional<double> r_lift_h1h;
};

/// log2(previous / current), or 0 when either error is at round-off level
/// (below 100 machine epsilons).
double observed_order(double previous, double current);

/// Fills the order columns in place; the first row (and the first lifted
/// row) gets 0.
void orders(std::vector<StudyRow>& rows);

} // namespace hive
