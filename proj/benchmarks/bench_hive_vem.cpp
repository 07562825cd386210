#include <benchmark/benchmark.h>

#include "hive/analysis.hpp"
#include "hive/lift.hpp"
#include "hive/solver.hpp"
#include "hive/study.hpp"

namespace {

using namespace hive;

void BM_BuildMesh(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(HoneycombMesh(level));
  state.counters["triangles"] = static_cast<double>(HoneycombMesh(level).triangle_count());
}
BENCHMARK(BM_BuildMesh)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const HoneycombMesh m(static_cast<int>(state.range(0)));
  const ManufacturedProblem p = hex_sine();
  for (auto _ : state) benchmark::DoNotOptimize(assemble(m, p));
}
BENCHMARK(BM_Assemble)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void solve_bench(benchmark::State& state, SolverMethod method, Preconditioner pre) {
  const HoneycombMesh m(static_cast<int>(state.range(0)));
  const AssembledSystem sys = assemble(m, hex_sine());
  SolverConfig cfg;
  cfg.method = method;
  cfg.preconditioner = pre;
  int iterations = 0;
  for (auto _ : state) {
    const SolveResult r = solve(sys.matrix, sys.rhs, cfg);
    iterations = r.stats.iterations;
    benchmark::DoNotOptimize(r.x.data());
  }
  state.counters["dofs"] = sys.matrix.dimension;
  state.counters["iterations"] = iterations;
}

void BM_SolveCgJacobi(benchmark::State& state) {
  solve_bench(state, SolverMethod::ConjugateGradient, Preconditioner::Jacobi);
}
BENCHMARK(BM_SolveCgJacobi)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_SolveCgIc(benchmark::State& state) {
  solve_bench(state, SolverMethod::ConjugateGradient, Preconditioner::IncompleteCholesky);
}
BENCHMARK(BM_SolveCgIc)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_SolveCholesky(benchmark::State& state) {
  solve_bench(state, SolverMethod::DirectCholesky, Preconditioner::None);
}
BENCHMARK(BM_SolveCholesky)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Lift(benchmark::State& state) {
  const ManufacturedProblem p = hex_sine();
  const LevelSolution sol = solve_level(static_cast<int>(state.range(0)), p, 6, SolverConfig{});
  const PatchGrid grid = build_patch_grid(*sol.mesh);
  for (auto _ : state) {
    const LiftedSolution lift = lift_solution(sol.uh, p, grid, LiftScheme::Lattice15Corrected);
    benchmark::DoNotOptimize(lift.fits.data());
  }
  state.counters["patches"] = static_cast<double>(grid.patches.size());
}
BENCHMARK(BM_Lift)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_LiftErrors(benchmark::State& state) {
  const ManufacturedProblem p = hex_sine();
  const LevelSolution sol = solve_level(static_cast<int>(state.range(0)), p, 6, SolverConfig{});
  const PatchGrid grid = build_patch_grid(*sol.mesh);
  const LiftedSolution lift = lift_solution(sol.uh, p, grid, LiftScheme::Lattice15Corrected);
  for (auto _ : state) benchmark::DoNotOptimize(lift_errors(lift, p));
}
BENCHMARK(BM_LiftErrors)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Study(benchmark::State& state) {
  StudyConfig cfg;
  cfg.min_level = 2;
  cfg.max_level = static_cast<int>(state.range(0));
  cfg.lift = true;
  for (auto _ : state) benchmark::DoNotOptimize(run_study(cfg));
}
BENCHMARK(BM_Study)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
