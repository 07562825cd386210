#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hive/error.hpp"
#include "hive/solver.hpp"
#include "hive/system.hpp"

namespace hive {
namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double norm_inf(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

SparseSpd diagonal_matrix(const std::vector<double>& d) {
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < d.size(); ++k) t.push_back({int(k), int(k), d[k]});
  return from_triplets(static_cast<int>(d.size()), t);
}

TEST(Sparse, FromTripletsSumsDuplicates) {
  const SparseSpd a = from_triplets(2, {{0, 0, 1.0}, {1, 0, 2.0}, {0, 1, 2.0}, {0, 0, 3.0}, {1, 1, 5.0}});
  EXPECT_EQ(a.at(0, 0), 4.0);
  EXPECT_EQ(a.at(0, 1), 2.0);
  EXPECT_EQ(a.nonzeros(), 4u);
  EXPECT_EQ(a.norm_inf(), 7.0);
  EXPECT_EQ(a.asymmetry(), 0.0);
  std::vector<double> y(2);
  a.multiply(std::vector<double>{1.0, -1.0}, y);
  EXPECT_EQ(y[0], 2.0);
  EXPECT_EQ(y[1], -3.0);
}

TEST(Solver, ZeroRhsGivesZero) {
  const HoneycombMesh m(3);
  const AssembledSystem sys = assemble(m, hex_sine());
  const std::vector<double> b(sys.rhs.size(), 0.0);
  for (auto method : {SolverMethod::ConjugateGradient, SolverMethod::DirectCholesky}) {
    SolverConfig cfg;
    cfg.method = method;
    const SolveResult r = solve(sys.matrix, b, cfg);
    EXPECT_EQ(norm_inf(r.x), 0.0);
  }
}

TEST(Solver, DiagonalSystem) {
  const SparseSpd a = diagonal_matrix({2.0, 4.0, 8.0});
  const std::vector<double> b{2.0, 2.0, 2.0};
  for (auto pre : {Preconditioner::None, Preconditioner::Jacobi, Preconditioner::IncompleteCholesky}) {
    SolverConfig cfg;
    cfg.preconditioner = pre;
    const SolveResult r = solve(a, b, cfg);
    EXPECT_NEAR(r.x[0], 1.0, 1e-15);
    EXPECT_NEAR(r.x[1], 0.5, 1e-15);
    EXPECT_NEAR(r.x[2], 0.25, 1e-15);
  }
  SolverConfig jac;
  EXPECT_EQ(solve(a, b, jac).stats.iterations, 1);
}

TEST(Solver, ZeroDimension) {
  const SparseSpd a = from_triplets(0, {});
  const SolveResult r = solve(a, std::vector<double>{}, SolverConfig{});
  EXPECT_TRUE(r.x.empty());
}

TEST(Solver, CgMatchesCholesky) {
  for (int level = 2; level <= 5; ++level) {
    const HoneycombMesh m(level);
    const AssembledSystem sys = assemble(m, hex_sine());
    SolverConfig chol;
    chol.method = SolverMethod::DirectCholesky;
    const SolveResult direct = solve(sys.matrix, sys.rhs, chol);
    for (auto pre : {Preconditioner::None, Preconditioner::Jacobi, Preconditioner::IncompleteCholesky}) {
      SolverConfig cg;
      cg.preconditioner = pre;
      const SolveResult it = solve(sys.matrix, sys.rhs, cg);
      EXPECT_LE(max_abs_diff(it.x, direct.x), 1e-10) << level << " " << to_string(pre);
    }
  }
}

TEST(Solver, GalerkinResidual) {
  for (int level = 2; level <= 7; ++level) {
    const HoneycombMesh m(level);
    const AssembledSystem sys = assemble(m, hex_sine());
    for (auto method : {SolverMethod::ConjugateGradient, SolverMethod::DirectCholesky}) {
      SolverConfig cfg;
      cfg.method = method;
      const SolveResult r = solve(sys.matrix, sys.rhs, cfg);
      std::vector<double> ax(r.x.size());
      sys.matrix.multiply(r.x, ax);
      double res = 0.0;
      for (std::size_t k = 0; k < ax.size(); ++k) res = std::max(res, std::abs(ax[k] - sys.rhs[k]));
      EXPECT_LE(res, cfg.tolerance * (sys.matrix.norm_inf() * norm_inf(r.x) + norm_inf(sys.rhs)))
          << level << " " << to_string(method);
    }
  }
}

TEST(Solver, RelativeResidualContractWhenAttainable) {
  const HoneycombMesh m(5);
  const AssembledSystem sys = assemble(m, hex_sine());
  SolverConfig cfg;
  cfg.tolerance = 1e-12;
  const SolveResult r = solve(sys.matrix, sys.rhs, cfg);
  EXPECT_LE(r.stats.relative_residual, 1e-12);
  EXPECT_FALSE(r.stats.backward_stable);
  EXPECT_GT(r.stats.iterations, 0);
}

TEST(Solver, EnergyNormMonotone) {
  const HoneycombMesh m(4);
  const AssembledSystem sys = assemble(m, hex_sine());
  SolverConfig chol;
  chol.method = SolverMethod::DirectCholesky;
  const std::vector<double> exact = solve(sys.matrix, sys.rhs, chol).x;
  std::vector<double> energies;
  const auto energy = [&](std::span<const double> x) {
    std::vector<double> e(x.size()), ae(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) e[k] = x[k] - exact[k];
    sys.matrix.multiply(e, ae);
    double s = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) s += e[k] * ae[k];
    return std::sqrt(std::max(s, 0.0));
  };
  for (auto pre : {Preconditioner::None, Preconditioner::Jacobi}) {
    energies.clear();
    SolverConfig cg;
    cg.preconditioner = pre;
    solve(sys.matrix, sys.rhs, cg, [&](int, std::span<const double> x) { energies.push_back(energy(x)); });
    ASSERT_GT(energies.size(), 5u);
    for (std::size_t k = 1; k < energies.size(); ++k) {
      EXPECT_LE(energies[k], energies[k - 1] + 1e-12) << k;
    }
  }
}

TEST(Solver, NonConvergenceReportsResidual) {
  // cond ~1e12 tridiagonal, unpreconditioned, budget of n iterations
  const std::size_t n = 400;
  std::vector<double> d(n), b(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) d[k] = std::pow(10.0, 12.0 * static_cast<double>(k) / (n - 1));
  std::vector<Triplet> t;
  for (std::size_t k = 0; k < n; ++k) {
    t.push_back({int(k), int(k), d[k]});
    if (k + 1 < n) {
      t.push_back({int(k), int(k + 1), 0.4 * std::sqrt(d[k] * d[k + 1])});
      t.push_back({int(k + 1), int(k), 0.4 * std::sqrt(d[k] * d[k + 1])});
    }
  }
  const SparseSpd a = from_triplets(static_cast<int>(n), t);
  SolverConfig bad;
  bad.preconditioner = Preconditioner::None;
  bad.max_iterations = static_cast<int>(n);
  try {
    solve(a, b, bad);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_LE(e.iterations(), static_cast<int>(n));
    EXPECT_GT(e.iterations(), 0);
    EXPECT_GT(e.residual(), bad.tolerance);
    EXPECT_NE(std::string(e.what()).find("e-"), std::string::npos);
  }
}

TEST(Solver, ConfigValidation) {
  const SparseSpd a = diagonal_matrix({1.0, 1.0, 1.0});
  const std::vector<double> b{1.0, 1.0, 1.0};
  SolverConfig cfg;
  cfg.tolerance = 1e-3;
  EXPECT_THROW(solve(a, b, cfg), ConfigError);
  cfg.tolerance = 0.0;
  EXPECT_THROW(solve(a, b, cfg), ConfigError);
  cfg = {};
  cfg.max_iterations = 2;
  EXPECT_THROW(solve(a, b, cfg), ConfigError);
  EXPECT_THROW(parse_solver_method("lu"), ConfigError);
  EXPECT_THROW(parse_preconditioner("ilu"), ConfigError);
  EXPECT_EQ(parse_solver_method("chol"), SolverMethod::DirectCholesky);
  EXPECT_EQ(parse_preconditioner("ic"), Preconditioner::IncompleteCholesky);
}

TEST(Solver, NotPositiveDefinite) {
  const SparseSpd a = diagonal_matrix({1.0, -1.0});
  SolverConfig cfg;
  cfg.method = SolverMethod::DirectCholesky;
  EXPECT_THROW(solve(a, std::vector<double>{1.0, 1.0}, cfg), SolverError);
}

} // namespace
} // namespace hive
