#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hive/analysis.hpp"
#include "hive/lattice_mesh.hpp"
#include "hive/lift.hpp"
#include "hive/solver.hpp"
#include "hive/system.hpp"

namespace hive {

struct StudyConfig {
  int min_level = 1;
  int max_level = 7;
  std::string problem = "hex-sine";
  bool lift = false;
  LiftScheme lift_scheme = LiftScheme::Lattice15Corrected;
  int quad_load = 6;
  int quad_error = 6;
  SolverConfig solver;

  /// Throws ConfigError on a bad level range, quadrature degree or solver
  /// setting, or a lift request with no level >= 3.
  void validate() const;
};

/// Discrete solution on one level together with its mesh and interpolant.
struct LevelSolution {
  std::unique_ptr<HoneycombMesh> mesh;
  FieldP1 uh;
  /// uh with statically condensed center values (auxiliary P1 solution).
  FieldP1 uh_aux;
  FieldP1 ih_u;
  int dofs = 0;
  SolveStats stats;
};

LevelSolution solve_level(int level, const ManufacturedProblem& problem, int quad_load,
                          const SolverConfig& solver);

/// Errors of one level (orders left at zero).
StudyRow evaluate_level(const LevelSolution& sol, const ManufacturedProblem& problem,
                        int quad_error, std::optional<LiftScheme> lift);

/// One row per level with orders filled.
std::vector<StudyRow> run_study(const StudyConfig& cfg);

/// Header:
/// level,h,dofs,e_ih_l2,r_ih_l2,e_ih_h1,r_ih_h1,e_ih_linf,r_ih_linf,e_l2,r_l2,
/// e_lift_l2,r_lift_l2,e_lift_h1h,r_lift_h1h
/// Reals use %.3e; absent lift entries are empty fields.
std::string to_csv(const std::vector<StudyRow>& rows);

/// Human-readable tables in the 0.1234E-05 style.
std::string render_table(const std::vector<StudyRow>& rows, bool with_lift);

} // namespace hive
