#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "hive/quadrature.hpp"
#include "hive/solver.hpp"
#include "hive/system.hpp"

namespace hive {
namespace {

std::vector<double> solve_chol(const AssembledSystem& sys) {
  SolverConfig cfg;
  cfg.method = SolverMethod::DirectCholesky;
  return solve(sys.matrix, sys.rhs, cfg).x;
}

TEST(ElementStiffness, Values) {
  const auto k = element_stiffness(0.25);
  for (int a = 0; a < 3; ++a) {
    double row = 0.0;
    for (int b = 0; b < 3; ++b) {
      const double expected = a == b ? 1.0 / kSqrt3 : -0.5 / kSqrt3;
      EXPECT_NEAR(k[a][b], expected, 1e-15);
      EXPECT_DOUBLE_EQ(k[a][b], k[b][a]);
      row += k[a][b];
    }
    EXPECT_NEAR(row, 0.0, 1e-15);
  }
  // rank 2: only constants in the kernel, so v = (1,-1,0) has positive energy
  const double e = k[0][0] - 2.0 * k[0][1] + k[1][1];
  EXPECT_GT(e, 0.1);
  const auto big = element_stiffness(1.0);
  const auto small = element_stiffness(1e-3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) EXPECT_NEAR(big[a][b], small[a][b], 1e-15);
  }
}

TEST(Assembly, Level2Dimension) {
  const HoneycombMesh m(2);
  const AssembledSystem sys = assemble(m, hex_sine());
  EXPECT_EQ(sys.matrix.dimension, 6);
  EXPECT_FALSE(sys.empty);
}

TEST(Assembly, Level1IsEmpty) {
  const HoneycombMesh m(1);
  const AssembledSystem sys = assemble(m, hex_sine());
  EXPECT_TRUE(sys.empty);
  EXPECT_EQ(sys.matrix.dimension, 0);
}

TEST(Assembly, SymmetricPositiveDefinite) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> d;
  for (int level = 2; level <= 5; ++level) {
    const HoneycombMesh m(level);
    const AssembledSystem sys = assemble(m, hex_sine());
    EXPECT_LE(sys.matrix.asymmetry(), 1e-14);
    std::vector<double> x(static_cast<std::size_t>(sys.matrix.dimension));
    std::vector<double> ax(x.size());
    for (int trial = 0; trial < 20; ++trial) {
      for (double& v : x) v = d(gen);
      sys.matrix.multiply(x, ax);
      double e = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) e += x[k] * ax[k];
      EXPECT_GT(e, 0.0);
    }
    for (int r = 0; r < sys.matrix.dimension; ++r) {
      for (int k = sys.matrix.row_offsets[r] + 1; k < sys.matrix.row_offsets[r + 1]; ++k) {
        EXPECT_LT(sys.matrix.columns[k - 1], sys.matrix.columns[k]);
      }
    }
  }
}

TEST(Assembly, MatchesCondensedFullStiffness) {
  // x^T A x = C(x)^T K C(x)
  const HoneycombMesh m(3);
  const AssembledSystem sys = assemble(m, hex_sine());
  const SparseSpd k = full_stiffness(m);
  std::mt19937_64 gen(5);
  std::normal_distribution<double> d;
  std::vector<double> x(static_cast<std::size_t>(sys.matrix.dimension));
  for (double& v : x) v = d(gen);
  const FieldP1 full = expand(x, sys.dofs, m);
  std::vector<double> kx(full.values.size()), ax(x.size());
  k.multiply(full.values, kx);
  sys.matrix.multiply(x, ax);
  double e_full = 0.0, e_red = 0.0;
  for (std::size_t i = 0; i < kx.size(); ++i) e_full += full.values[i] * kx[i];
  for (std::size_t i = 0; i < ax.size(); ++i) e_red += x[i] * ax[i];
  EXPECT_NEAR(e_full, e_red, 1e-12 * e_full);
}

TEST(Assembly, UniquenessZeroLoad) {
  for (int level = 2; level <= 5; ++level) {
    const HoneycombMesh m(level);
    const AssembledSystem sys = assemble(m, zero_problem());
    for (double b : sys.rhs) EXPECT_EQ(b, 0.0);
    const std::vector<double> x = solve_chol(sys);
    for (double v : x) EXPECT_LE(std::abs(v), 1e-12);
    SolverConfig cg;
    for (double v : solve(sys.matrix, sys.rhs, cg).x) EXPECT_LE(std::abs(v), 1e-12);
  }
}

TEST(Expand, UnitDofGivesSixthAtCenters) {
  const HoneycombMesh m(3);
  const DofMap dofs = make_dof_map(m);
  for (int d = 0; d < dofs.size(); d += 7) {
    std::vector<double> x(static_cast<std::size_t>(dofs.size()), 0.0);
    x[static_cast<std::size_t>(d)] = 1.0;
    const FieldP1 f = expand(x, dofs, m);
    const int node = dofs.node_of_dof[static_cast<std::size_t>(d)];
    EXPECT_EQ(f[node], 1.0);
    for (std::size_t c = 0; c < m.centers().size(); ++c) {
      const auto& ring = m.center_rings()[c];
      const bool adjacent = std::find(ring.begin(), ring.end(), node) != ring.end();
      EXPECT_DOUBLE_EQ(f[m.centers()[c]], adjacent ? 1.0 / 6.0 : 0.0);
    }
    EXPECT_LE(f.center_defect(), 1e-16);
  }
}

TEST(Expand, DofMapBijective) {
  const HoneycombMesh m(4);
  const DofMap dofs = make_dof_map(m);
  for (int d = 0; d < dofs.size(); ++d) {
    const int node = dofs.node_of_dof[static_cast<std::size_t>(d)];
    EXPECT_EQ(dofs.dof_of_node[static_cast<std::size_t>(node)], d);
    const auto& n = m.nodes()[static_cast<std::size_t>(node)];
    EXPECT_FALSE(n.on_boundary);
    EXPECT_FALSE(n.is_hexagon_center);
  }
  EXPECT_EQ(static_cast<std::size_t>(dofs.size()),
            m.nh_nodes().size() - boundary_nodes(m).size());
}

TEST(Expand, LinearReproduction) {
  // ring mean of a linear function equals its center value
  const HoneycombMesh m(4);
  const auto lin = [](Point2 p) { return 0.3 + 1.7 * p.x - 0.9 * p.y; };
  const FieldP1 ih = interpolate(lin, m);
  const FieldP1 bar = interpolate_bar(lin, m);
  for (std::size_t k = 0; k < ih.values.size(); ++k) EXPECT_NEAR(ih.values[k], bar.values[k], 1e-14);
}

TEST(Expand, RestrictRoundTrip) {
  const HoneycombMesh m(3);
  const DofMap dofs = make_dof_map(m);
  std::vector<double> x(static_cast<std::size_t>(dofs.size()));
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = 0.1 * static_cast<double>(k) - 1.0;
  EXPECT_EQ(restrict_to_dofs(expand(x, dofs, m), dofs), x);
}

TEST(Prolongation, Rows) {
  const HoneycombMesh m(3);
  const DofMap dofs = make_dof_map(m);
  const Prolongation c = make_prolongation(m, dofs);
  for (int b : boundary_nodes(m)) EXPECT_TRUE(c.row(b).empty());
  for (int center : m.centers()) {
    double w = 0.0;
    for (const auto& e : c.row(center)) {
      EXPECT_DOUBLE_EQ(e.weight, 1.0 / 6.0);
      w += e.weight;
    }
    EXPECT_LE(w, 1.0 + 1e-15);
  }
}

TEST(DiscreteHarmonic, CenterDefectOfInterpolant) {
  // d_h(x0) = ring mean - value; zero for V_h members, O(h^2) for I_bar u
  const HoneycombMesh m(4);
  const ManufacturedProblem p = hex_sine();
  EXPECT_LE(interpolate(p, m).center_defect(), 1e-15);
  const double d4 = interpolate_bar(p, m).center_defect();
  const double d5 = interpolate_bar(p, HoneycombMesh(5)).center_defect();
  EXPECT_GT(d4, 0.0);
  EXPECT_NEAR(std::log2(d4 / d5), 2.0, 0.3);
}

TEST(DiscreteHarmonic, SevenNodeHexagon) {
  // level 1: one hexagon, no dofs; the discrete solution is zero everywhere
  const HoneycombMesh m(1);
  const AssembledSystem sys = assemble(m, hex_sine());
  const FieldP1 uh = expand({}, sys.dofs, m);
  for (double v : uh.values) EXPECT_EQ(v, 0.0);
  // the ring mean of a harmonic quadratic equals its center value
  const auto harmonic = [](Point2 p) { return p.x * p.x - p.y * p.y + 0.5 * p.x * p.y; };
  const FieldP1 ih = interpolate(harmonic, m);
  EXPECT_NEAR(ih[m.centers()[0]], harmonic({0, 0}), 1e-15);
}

TEST(AuxiliarySolution, AgreesAtHoneycombVertices) {
  const HoneycombMesh m(4);
  const ManufacturedProblem p = hex_sine();
  const AssembledSystem sys = assemble(m, p);
  const FieldP1 uh = expand(solve_chol(sys), sys.dofs, m);
  const FieldP1 aux = auxiliary_solution(uh, p);
  for (int k : m.nh_nodes()) EXPECT_EQ(aux[k], uh[k]);
  double moved = 0.0;
  for (int c : m.centers()) moved = std::max(moved, std::abs(aux[c] - uh[c]));
  EXPECT_GT(moved, 0.0);
}

TEST(AuxiliarySolution, SolvesFullP1System) {
  // K ubar = l at all interior nodes, with l the P1 load
  const HoneycombMesh m(3);
  const ManufacturedProblem p = hex_sine();
  const AssembledSystem sys = assemble(m, p);
  SolverConfig cfg;
  cfg.method = SolverMethod::DirectCholesky;
  const FieldP1 aux = auxiliary_solution(expand(solve(sys.matrix, sys.rhs, cfg).x, sys.dofs, m), p);
  const SparseSpd k = full_stiffness(m);
  std::vector<double> ku(aux.values.size());
  k.multiply(aux.values, ku);
  // reference load vector: hat functions integrated with degree-8 quadrature
  std::vector<double> load(aux.values.size(), 0.0);
  const QuadratureRule& q = rule(8);
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const Triangle tri = m.triangle(static_cast<int>(t));
    for (std::size_t g = 0; g < q.points.size(); ++g) {
      const double fw = p.f(from_barycentric(tri, q.points[g])) * q.weights[g] * area(tri);
      for (int v = 0; v < 3; ++v) load[static_cast<std::size_t>(m.subtriangles()[t][static_cast<std::size_t>(v)])] += fw * q.points[g][static_cast<std::size_t>(v)];
    }
  }
  for (std::size_t n = 0; n < m.node_count(); ++n) {
    if (m.nodes()[n].on_boundary) continue;
    EXPECT_NEAR(ku[n], load[n], 1e-8) << n;
  }
}

} // namespace
} // namespace hive
