#include "hive/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hive/error.hpp"
#include "hive/parallel.hpp"
#include "hive/quadrature.hpp"

namespace hive {

namespace {

// Gradient of the linear interpolant of (v0, v1, v2) on a triangle.
Point2 linear_gradient(const Triangle& t, double v0, double v1, double v2) {
  const double a2 = 2.0 * signed_area(t);
  const double gx = (v0 * (t[1].y - t[2].y) + v1 * (t[2].y - t[0].y) + v2 * (t[0].y - t[1].y)) / a2;
  const double gy = (v0 * (t[2].x - t[1].x) + v1 * (t[0].x - t[2].x) + v2 * (t[1].x - t[0].x)) / a2;
  return {gx, gy};
}

} // namespace

SupercloseNorms norms_superclose(const FieldP1& uh, const FieldP1& ih_u, int quad_degree) {
  if (uh.mesh == nullptr || uh.mesh != ih_u.mesh) {
    throw ConfigError("superclose norms need two fields on the same mesh");
  }
  const HoneycombMesh& mesh = *uh.mesh;
  const QuadratureRule& q = rule(quad_degree);
  const FieldP1 e = ih_u - uh;
  double l2 = 0.0;
  double h1 = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.subtriangles()[t];
    const Triangle g = mesh.triangle(static_cast<int>(t));
    const double e0 = e[tri[0]], e1 = e[tri[1]], e2 = e[tri[2]];
    double sq = 0.0;
    for (std::size_t k = 0; k < q.points.size(); ++k) {
      const auto& l = q.points[k];
      const double v = l[0] * e0 + l[1] * e1 + l[2] * e2;
      sq += q.weights[k] * v * v;
    }
    l2 += sq * area(g);
    const Point2 grad = linear_gradient(g, e0, e1, e2);
    h1 += (grad.x * grad.x + grad.y * grad.y) * area(g);
  }
  double linf = 0.0;
  for (int k : mesh.nh_nodes()) linf = std::max(linf, std::abs(e[k]));
  return {std::sqrt(l2), std::sqrt(h1), linf};
}

double norm_l2_true(const FieldP1& uh, const ManufacturedProblem& problem, int quad_degree) {
  const HoneycombMesh& mesh = *uh.mesh;
  const QuadratureRule& q = rule(quad_degree);
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.subtriangles()[t];
    const Triangle g = mesh.triangle(static_cast<int>(t));
    double sq = 0.0;
    for (std::size_t k = 0; k < q.points.size(); ++k) {
      const auto& l = q.points[k];
      const double approx = l[0] * uh[tri[0]] + l[1] * uh[tri[1]] + l[2] * uh[tri[2]];
      const double d = problem.u(from_barycentric(g, l)) - approx;
      sq += q.weights[k] * d * d;
    }
    sum += sq * area(g);
  }
  return std::sqrt(sum);
}

LiftErrors lift_errors(const LiftedSolution& lift, const ManufacturedProblem& problem,
                       int quad_degree) {
  const PatchGrid& grid = *lift.grid;
  const HoneycombMesh& mesh = *grid.mesh;
  const QuadratureRule& q = rule(quad_degree);
  std::vector<double> l2(grid.patches.size()), h1(grid.patches.size());
  parallel_for(grid.patches.size(), [&](std::size_t p) {
    const CubicFit& fit = lift.fits[p];
    double a = 0.0, b = 0.0;
    for (int t : grid.patches[p].subtriangles) {
      const Triangle g = mesh.triangle(t);
      double sa = 0.0, sb = 0.0;
      for (std::size_t k = 0; k < q.points.size(); ++k) {
        const Point2 x = from_barycentric(g, q.points[k]);
        const Taylor2 u = problem.jet(x);
        const double d = u.v - fit.value(x);
        const Point2 gf = fit.gradient(x);
        const double dx = u.dx - gf.x;
        const double dy = u.dy - gf.y;
        sa += q.weights[k] * d * d;
        sb += q.weights[k] * (dx * dx + dy * dy);
      }
      a += sa * area(g);
      b += sb * area(g);
    }
    l2[p] = a;
    h1[p] = b;
  });
  double sa = 0.0, sb = 0.0;
  for (std::size_t p = 0; p < l2.size(); ++p) {
    sa += l2[p];
    sb += h1[p];
  }
  return {std::sqrt(sa), std::sqrt(sb)};
}

double observed_order(double previous, double current) {
  constexpr double floor = 100.0 * std::numeric_limits<double>::epsilon();
  if (!(previous > floor) || !(current > floor)) return 0.0;
  return std::log2(previous / current);
}

void orders(std::vector<StudyRow>& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    StudyRow& row = rows[k];
    if (k == 0) {
      row.r_ih_l2 = row.r_ih_h1 = row.r_ih_linf = row.r_l2 = 0.0;
      if (row.e_lift_l2) row.r_lift_l2 = 0.0;
      if (row.e_lift_h1h) row.r_lift_h1h = 0.0;
      continue;
    }
    const StudyRow& prev = rows[k - 1];
    row.r_ih_l2 = observed_order(prev.e_ih_l2, row.e_ih_l2);
    row.r_ih_h1 = observed_order(prev.e_ih_h1, row.e_ih_h1);
    row.r_ih_linf = observed_order(prev.e_ih_linf, row.e_ih_linf);
    row.r_l2 = observed_order(prev.e_l2, row.e_l2);
    if (row.e_lift_l2) {
      row.r_lift_l2 = prev.e_lift_l2 ? observed_order(*prev.e_lift_l2, *row.e_lift_l2) : 0.0;
    }
    if (row.e_lift_h1h) {
      row.r_lift_h1h = prev.e_lift_h1h ? observed_order(*prev.e_lift_h1h, *row.e_lift_h1h) : 0.0;
    }
  }
}

} // namespace hive
