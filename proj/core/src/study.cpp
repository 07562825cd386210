#include "hive/study.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hive/error.hpp"
#include "hive/quadrature.hpp"

namespace hive {

void StudyConfig::validate() const {
  if (min_level < 1) throw ConfigError("min level must be >= 1");
  if (max_level > HoneycombMesh::kMaxLevel) {
    throw ConfigError("max level must be <= " + std::to_string(HoneycombMesh::kMaxLevel));
  }
  if (min_level > max_level) throw ConfigError("min level exceeds max level");
  if (lift && max_level < 3) throw ConfigError("lifting needs a level >= 3");
  rule(quad_load);
  if (quad_error < 6) throw ConfigError("error quadrature degree must be >= 6");
  rule(quad_error);
  solver.validate();
  make_problem(problem);
}

LevelSolution solve_level(int level, const ManufacturedProblem& problem, int quad_load,
                          const SolverConfig& solver) {
  LevelSolution sol;
  sol.mesh = std::make_unique<HoneycombMesh>(level);
  const AssembledSystem sys = assemble(*sol.mesh, problem, quad_load);
  sol.dofs = sys.dofs.size();
  const SolveResult res = solve(sys.matrix, sys.rhs, solver);
  sol.stats = res.stats;
  sol.uh = expand(res.x, sys.dofs, *sol.mesh);
  sol.uh_aux = auxiliary_solution(sol.uh, problem, quad_load);
  sol.ih_u = interpolate(problem, *sol.mesh);
  return sol;
}

StudyRow evaluate_level(const LevelSolution& sol, const ManufacturedProblem& problem,
                        int quad_error, std::optional<LiftScheme> lift) {
  StudyRow row;
  row.level = sol.mesh->level();
  row.h = sol.mesh->edge();
  row.dofs = sol.dofs;
  const SupercloseNorms sc = norms_superclose(sol.uh, sol.ih_u);
  row.e_ih_l2 = sc.l2;
  row.e_ih_h1 = sc.h1;
  row.e_ih_linf = sc.linf;
  row.e_l2 = norm_l2_true(sol.uh_aux, problem, quad_error);
  row.e_l2_vh = norm_l2_true(sol.uh, problem, quad_error);
  if (lift && row.level >= 3) {
    const PatchGrid grid = build_patch_grid(*sol.mesh);
    const LiftedSolution lifted = lift_solution(sol.uh, problem, grid, *lift);
    const LiftErrors le = lift_errors(lifted, problem, quad_error);
    row.e_lift_l2 = le.l2;
    row.e_lift_h1h = le.h1h;
  }
  return row;
}

std::vector<StudyRow> run_study(const StudyConfig& cfg) {
  cfg.validate();
  const ManufacturedProblem problem = make_problem(cfg.problem);
  std::vector<StudyRow> rows;
  for (int level = cfg.min_level; level <= cfg.max_level; ++level) {
    const LevelSolution sol = solve_level(level, problem, cfg.quad_load, cfg.solver);
    rows.push_back(evaluate_level(sol, problem, cfg.quad_error,
                                  cfg.lift ? std::optional<LiftScheme>(cfg.lift_scheme) : std::nullopt));
  }
  orders(rows);
  return rows;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string sci(const std::optional<double>& v) { return v ? sci(*v) : std::string(); }

// 0.1234E-05: mantissa in [0.1, 1).
std::string fortran(double v) {
  if (v == 0.0) return "0.0000E+00";
  int exponent = static_cast<int>(std::floor(std::log10(std::abs(v)))) + 1;
  double mant = v / std::pow(10.0, exponent);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", mant);
  if (std::string(buf) == "1.0000" || std::string(buf) == "-1.0000") {
    mant /= 10.0;
    ++exponent;
  }
  std::snprintf(buf, sizeof buf, "%.4fE%+03d", mant, exponent);
  return buf;
}

} // namespace

std::string to_csv(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "level,h,dofs,e_ih_l2,r_ih_l2,e_ih_h1,r_ih_h1,e_ih_linf,r_ih_linf,e_l2,r_l2,"
         "e_lift_l2,r_lift_l2,e_lift_h1h,r_lift_h1h\n";
  for (const StudyRow& r : rows) {
    out << r.level << ',' << sci(r.h) << ',' << r.dofs << ',' << sci(r.e_ih_l2) << ','
        << sci(r.r_ih_l2) << ',' << sci(r.e_ih_h1) << ',' << sci(r.r_ih_h1) << ','
        << sci(r.e_ih_linf) << ',' << sci(r.r_ih_linf) << ',' << sci(r.e_l2) << ','
        << sci(r.r_l2) << ',' << sci(r.e_lift_l2) << ',' << sci(r.r_lift_l2) << ','
        << sci(r.e_lift_h1h) << ',' << sci(r.r_lift_h1h) << '\n';
  }
  return out.str();
}

std::string render_table(const std::vector<StudyRow>& rows, bool with_lift) {
  std::ostringstream out;
  char buf[256];
  out << "Grid | ||Ih u-uh||_L2  O(h^r) | |Ih u-uh|_H1  O(h^r) | ||Ih u-uh||_inf O(h^r)\n";
  for (const StudyRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%4d | %s %5.2f | %s %5.2f | %s %5.2f\n", r.level,
                  fortran(r.e_ih_l2).c_str(), r.r_ih_l2, fortran(r.e_ih_h1).c_str(), r.r_ih_h1,
                  fortran(r.e_ih_linf).c_str(), r.r_ih_linf);
    out << buf;
  }
  out << '\n';
  out << "Grid | ||u-uh||_L2  O(h^r) | V_h repr.  ";
  if (with_lift) out << " | ||u-lift||_L2  O(h^r) | |u-lift|_H1,h  O(h^r)";
  out << '\n';
  for (const StudyRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%4d | %s %5.2f | %s", r.level, fortran(r.e_l2).c_str(), r.r_l2,
                  fortran(r.e_l2_vh).c_str());
    out << buf;
    if (with_lift) {
      if (r.e_lift_l2) {
        std::snprintf(buf, sizeof buf, " | %s %5.2f | %s %5.2f", fortran(*r.e_lift_l2).c_str(),
                      r.r_lift_l2.value_or(0.0), fortran(*r.e_lift_h1h).c_str(),
                      r.r_lift_h1h.value_or(0.0));
        out << buf;
      } else {
        out << " |            -       |            -      ";
      }
    }
    out << '\n';
  }
  return out.str();
}

} // namespace hive
