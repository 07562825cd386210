// Command-line driver: convergence studies and VTK export.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "hive/error.hpp"
#include "hive/study.hpp"
#include "hive/vtk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::map<std::string, hive::LiftScheme> scheme_map() {
  std::map<std::string, hive::LiftScheme> m;
  for (hive::LiftScheme s : hive::all_lift_schemes()) m.emplace(hive::to_string(s), s);
  return m;
}

struct SolverFlags {
  std::string method = "cg";
  std::string preconditioner = "jacobi";
  double tol = 1e-14;
  int maxit = 0;

  void add(CLI::App& app) {
    app.add_option("--solver", method, "Linear solver: cg | chol")
        ->check(CLI::IsMember({"cg", "chol"}))
        ->capture_default_str();
    app.add_option("--precond", preconditioner, "CG preconditioner: none | jacobi | ic")
        ->check(CLI::IsMember({"none", "jacobi", "ic"}))
        ->capture_default_str();
    app.add_option("--tol", tol, "Relative residual tolerance, in (0, 1e-6]")->capture_default_str();
    app.add_option("--maxit", maxit, "CG iteration cap (0: automatic)")->capture_default_str();
  }

  hive::SolverConfig config() const {
    hive::SolverConfig cfg;
    cfg.method = hive::parse_solver_method(method);
    cfg.preconditioner = hive::parse_preconditioner(preconditioner);
    cfg.tolerance = tol;
    cfg.max_iterations = maxit;
    return cfg;
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-free P1 virtual elements on honeycomb meshes with a patchwise P3 lift"};
  app.require_subcommand(1);

  // study
  auto* study = app.add_subcommand("study", "Convergence study over a range of mesh levels");
  hive::StudyConfig cfg;
  SolverFlags study_solver;
  std::string csv_path;
  std::string scheme_name = "lattice15-corrected";
  bool quiet = false;
  study->add_option("--min-level", cfg.min_level, "First mesh level (>= 1)")->capture_default_str();
  study->add_option("--max-level", cfg.max_level, "Last mesh level (<= 12)")->capture_default_str();
  study->add_option("--problem", cfg.problem, "Manufactured problem: hex-sine | zero")
      ->check(CLI::IsMember(hive::problem_names()))
      ->capture_default_str();
  study->add_flag("--lift", cfg.lift, "Compute the patchwise P3 lift from level 3 on");
  study->add_option("--lift-scheme", scheme_name, "Lift site/data scheme")
      ->transform(CLI::IsMember(scheme_map()))
      ->capture_default_str();
  study->add_option("--quad-load", cfg.quad_load, "Load quadrature degree: 2 | 4 | 6 | 8")
      ->capture_default_str();
  study->add_option("--quad-error", cfg.quad_error, "Error quadrature degree: 6 | 8")
      ->capture_default_str();
  study_solver.add(*study);
  study->add_option("--csv", csv_path, "Write the CSV table to PATH ('-' for stdout)");
  study->add_flag("--quiet", quiet, "Do not print the rendered table");

  // export
  auto* exporter = app.add_subcommand("export", "Write a mesh, solution or lift as legacy VTK");
  int level = 3;
  std::string what = "mesh";
  std::string out_path;
  std::string export_problem = "hex-sine";
  std::string export_scheme = "lattice15-corrected";
  int export_quad_load = 6;
  SolverFlags export_solver;
  exporter->add_option("--level", level, "Mesh level")->capture_default_str();
  exporter->add_option("--what", what, "mesh | solution | lift")
      ->check(CLI::IsMember({"mesh", "solution", "lift"}))
      ->capture_default_str();
  exporter->add_option("--out", out_path, "Output .vtk path")->required();
  exporter->add_option("--problem", export_problem, "Manufactured problem: hex-sine | zero")
      ->check(CLI::IsMember(hive::problem_names()))
      ->capture_default_str();
  exporter->add_option("--lift-scheme", export_scheme, "Lift site/data scheme")
      ->transform(CLI::IsMember(scheme_map()))
      ->capture_default_str();
  exporter->add_option("--quad-load", export_quad_load, "Load quadrature degree")->capture_default_str();
  export_solver.add(*exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitConfig;
  }

  try {
    if (*study) {
      cfg.lift_scheme = hive::parse_lift_scheme(scheme_name);
      cfg.solver = study_solver.config();
      const std::vector<hive::StudyRow> rows = hive::run_study(cfg);
      const std::string csv = hive::to_csv(rows);
      if (csv_path == "-") {
        std::cout << csv;
      } else {
        if (!csv_path.empty()) hive::write_file(csv_path, [&](std::ostream& os) { os << csv; });
        if (!quiet) std::cout << hive::render_table(rows, cfg.lift);
      }
    } else if (*exporter) {
      const hive::ManufacturedProblem problem = hive::make_problem(export_problem);
      if (what == "mesh") {
        const hive::HoneycombMesh mesh(level);
        hive::write_file(out_path, [&](std::ostream& os) { hive::write_mesh_vtk(os, mesh); });
      } else {
        const hive::LevelSolution sol =
            hive::solve_level(level, problem, export_quad_load, export_solver.config());
        if (what == "solution") {
          hive::write_file(out_path, [&](std::ostream& os) { hive::write_solution_vtk(os, sol.uh, problem); });
        } else {
          const hive::PatchGrid grid = hive::build_patch_grid(*sol.mesh);
          const hive::LiftedSolution lift =
              hive::lift_solution(sol.uh, problem, grid, hive::parse_lift_scheme(export_scheme));
          hive::write_file(out_path, [&](std::ostream& os) { hive::write_lift_vtk(os, lift, problem); });
        }
      }
    }
  } catch (const hive::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hive::FitError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const hive::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
