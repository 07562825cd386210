#include "hive/system.hpp"

#include <algorithm>
#include <cmath>

#include "hive/quadrature.hpp"

namespace hive {

namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

Matrix3 triangle_stiffness(const Triangle& t) {
  const double a2 = 2.0 * signed_area(t);
  // Gradients of the barycentric coordinates times 2A.
  std::array<Point2, 3> g;
  for (int k = 0; k < 3; ++k) {
    const Point2& p = t[static_cast<std::size_t>((k + 1) % 3)];
    const Point2& q = t[static_cast<std::size_t>((k + 2) % 3)];
    g[static_cast<std::size_t>(k)] = {p.y - q.y, q.x - p.x};
  }
  Matrix3 m{};
  const double scale = 1.0 / (2.0 * std::abs(a2));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = (g[r].x * g[c].x + g[r].y * g[c].y) * scale;
  }
  return m;
}

} // namespace

double FieldP1::center_defect() const {
  double worst = 0.0;
  const auto& centers = mesh->centers();
  const auto& rings = mesh->center_rings();
  for (std::size_t k = 0; k < centers.size(); ++k) {
    double mean = 0.0;
    for (int r : rings[k]) mean += (*this)[r];
    mean /= 6.0;
    worst = std::max(worst, std::abs((*this)[centers[k]] - mean));
  }
  return worst;
}

FieldP1 operator-(const FieldP1& a, const FieldP1& b) {
  FieldP1 out(*a.mesh);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = a.values[k] - b.values[k];
  return out;
}

DofMap make_dof_map(const HoneycombMesh& mesh) {
  DofMap map;
  map.dof_of_node.assign(mesh.node_count(), -1);
  for (int node : mesh.nh_nodes()) {
    if (mesh.nodes()[static_cast<std::size_t>(node)].on_boundary) continue;
    map.dof_of_node[static_cast<std::size_t>(node)] = map.size();
    map.node_of_dof.push_back(node);
  }
  return map;
}

Prolongation make_prolongation(const HoneycombMesh& mesh, const DofMap& dofs) {
  Prolongation p;
  p.offsets.reserve(mesh.node_count() + 1);
  p.offsets.push_back(0);
  for (std::size_t k = 0; k < mesh.node_count(); ++k) {
    const int slot = mesh.center_slot(static_cast<int>(k));
    if (slot >= 0) {
      for (int r : mesh.center_rings()[static_cast<std::size_t>(slot)]) {
        const int d = dofs.dof_of_node[static_cast<std::size_t>(r)];
        if (d >= 0) p.entries.push_back({d, 1.0 / 6.0});
      }
    } else if (const int d = dofs.dof_of_node[k]; d >= 0) {
      p.entries.push_back({d, 1.0});
    }
    p.offsets.push_back(static_cast<int>(p.entries.size()));
  }
  return p;
}

std::array<std::array<double, 3>, 3> element_stiffness(double edge) {
  return triangle_stiffness({Point2{0.0, 0.0}, Point2{edge, 0.0}, Point2{0.5 * edge, 0.5 * kSqrt3 * edge}});
}

AssembledSystem assemble(const HoneycombMesh& mesh, const ManufacturedProblem& problem,
                         int load_quad_degree) {
  const QuadratureRule& q = rule(load_quad_degree);
  AssembledSystem sys;
  sys.dofs = make_dof_map(mesh);
  const int n = sys.dofs.size();
  sys.empty = (n == 0);
  sys.rhs.assign(static_cast<std::size_t>(n), 0.0);
  const Prolongation c = make_prolongation(mesh, sys.dofs);

  // Values of f at the quadrature points times the weights, reused for the
  // three basis functions of each triangle.
  std::vector<Triplet> triplets;
  triplets.reserve(mesh.triangle_count() * 9 * 4);
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.subtriangles()[t];
    const Triangle geom = mesh.triangle(static_cast<int>(t));
    const Matrix3 k = triangle_stiffness(geom);
    std::array<double, 3> load{};
    const double a = area(geom);
    for (std::size_t p = 0; p < q.points.size(); ++p) {
      const double fw = q.weights[p] * problem.f(from_barycentric(geom, q.points[p])) * a;
      for (std::size_t r = 0; r < 3; ++r) load[r] += fw * q.points[p][r];
    }
    for (std::size_t r = 0; r < 3; ++r) {
      const auto row_r = c.row(tri[r]);
      for (const auto& er : row_r) sys.rhs[static_cast<std::size_t>(er.dof)] += er.weight * load[r];
      for (std::size_t col = 0; col < 3; ++col) {
        for (const auto& er : row_r) {
          for (const auto& ec : c.row(tri[col])) {
            triplets.push_back({er.dof, ec.dof, er.weight * ec.weight * k[r][col]});
          }
        }
      }
    }
  }
  sys.matrix = from_triplets(n, std::move(triplets));
  return sys;
}

SparseSpd full_stiffness(const HoneycombMesh& mesh) {
  std::vector<Triplet> triplets;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.subtriangles()[t];
    const Matrix3 k = triangle_stiffness(mesh.triangle(static_cast<int>(t)));
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t col = 0; col < 3; ++col) triplets.push_back({tri[r], tri[col], k[r][col]});
    }
  }
  return from_triplets(static_cast<int>(mesh.node_count()), std::move(triplets));
}

FieldP1 expand(std::span<const double> dof_values, const DofMap& dofs, const HoneycombMesh& mesh) {
  FieldP1 out(mesh);
  for (int d = 0; d < dofs.size(); ++d) {
    out.values[static_cast<std::size_t>(dofs.node_of_dof[static_cast<std::size_t>(d)])] =
        dof_values[static_cast<std::size_t>(d)];
  }
  apply_center_constraint(out);
  return out;
}

std::vector<double> restrict_to_dofs(const FieldP1& field, const DofMap& dofs) {
  std::vector<double> out(static_cast<std::size_t>(dofs.size()));
  for (int d = 0; d < dofs.size(); ++d) out[static_cast<std::size_t>(d)] = field[dofs.node_of_dof[static_cast<std::size_t>(d)]];
  return out;
}

void apply_center_constraint(FieldP1& field) {
  const auto& centers = field.mesh->centers();
  const auto& rings = field.mesh->center_rings();
  for (std::size_t k = 0; k < centers.size(); ++k) {
    double sum = 0.0;
    for (int r : rings[k]) sum += field[r];
    field.values[static_cast<std::size_t>(centers[k])] = sum / 6.0;
  }
}

FieldP1 auxiliary_solution(const FieldP1& uh, const ManufacturedProblem& problem,
                           int load_quad_degree) {
  const HoneycombMesh& mesh = *uh.mesh;
  const QuadratureRule& q = rule(load_quad_degree);
  FieldP1 out = uh;
  apply_center_constraint(out);
  for (const Cell& cell : mesh.cells()) {
    if (cell.kind != CellKind::Hexagon) continue;
    double load = 0.0;
    double diag = 0.0;
    for (int t : cell.members) {
      const auto& tri = mesh.subtriangles()[static_cast<std::size_t>(t)];
      const Triangle geom = mesh.triangle(t);
      const std::size_t local = static_cast<std::size_t>(
          std::find(tri.begin(), tri.end(), cell.anchor_node) - tri.begin());
      diag += triangle_stiffness(geom)[local][local];
      double sum = 0.0;
      for (std::size_t p = 0; p < q.points.size(); ++p) {
        sum += q.weights[p] * problem.f(from_barycentric(geom, q.points[p])) * q.points[p][local];
      }
      load += sum * area(geom);
    }
    out.values[static_cast<std::size_t>(cell.anchor_node)] += load / diag;
  }
  return out;
}

FieldP1 interpolate(const ManufacturedProblem& problem, const HoneycombMesh& mesh) {
  return interpolate([&](Point2 p) { return problem.u(p); }, mesh);
}

FieldP1 interpolate_bar(const ManufacturedProblem& problem, const HoneycombMesh& mesh) {
  return interpolate_bar([&](Point2 p) { return problem.u(p); }, mesh);
}

} // namespace hive
