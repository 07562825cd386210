#pragma once

#include <array>
#include <span>
#include <vector>

#include "hive/lattice_mesh.hpp"
#include "hive/problem.hpp"
#include "hive/sparse.hpp"

namespace hive {

/// Continuous piecewise-linear function on the equilateral submesh, stored as
/// one value per lattice node. Members of the discrete space additionally
/// satisfy value(center) = mean of the six ring values at every interior
/// hexagon center.
struct FieldP1 {
  const HoneycombMesh* mesh = nullptr;
  std::vector<double> values;

  FieldP1() = default;
  FieldP1(const HoneycombMesh& m, std::vector<double> v) : mesh(&m), values(std::move(v)) {}
  explicit FieldP1(const HoneycombMesh& m) : mesh(&m), values(m.node_count(), 0.0) {}

  double operator[](int node) const { return values[static_cast<std::size_t>(node)]; }
  /// Largest |value(center) - ring mean| over interior hexagon centers.
  double center_defect() const;
};

FieldP1 operator-(const FieldP1& a, const FieldP1& b);

/// Degrees of freedom are the interior honeycomb vertices, in ascending node
/// order. Boundary nodes and hexagon centers carry none.
struct DofMap {
  std::vector<int> node_of_dof;
  std::vector<int> dof_of_node;

  int size() const noexcept { return static_cast<int>(node_of_dof.size()); }
};

DofMap make_dof_map(const HoneycombMesh& mesh);

/// Prolongation C from dofs to all nodes: identity on interior vertices, an
/// empty row on the boundary, and weight 1/6 per interior ring dof at a
/// hexagon center.
struct Prolongation {
  struct Entry {
    int dof;
    double weight;
  };
  std::vector<int> offsets;
  std::vector<Entry> entries;

  std::span<const Entry> row(int node) const {
    const auto b = static_cast<std::size_t>(offsets[static_cast<std::size_t>(node)]);
    const auto e = static_cast<std::size_t>(offsets[static_cast<std::size_t>(node) + 1]);
    return std::span<const Entry>(entries).subspan(b, e - b);
  }
};

Prolongation make_prolongation(const HoneycombMesh& mesh, const DofMap& dofs);

/// P1 stiffness of an equilateral triangle; independent of the edge length.
std::array<std::array<double, 3>, 3> element_stiffness(double edge);

struct AssembledSystem {
  SparseSpd matrix;
  std::vector<double> rhs;
  DofMap dofs;
  /// True when there are no interior dofs (level 1).
  bool empty = false;
};

/// A = C^T K C and b = C^T l, with K the full P1 stiffness and l the P1 load
/// of f integrated with the given quadrature degree.
AssembledSystem assemble(const HoneycombMesh& mesh, const ManufacturedProblem& problem,
                         int load_quad_degree = 6);

/// Full (unreduced) P1 stiffness on all lattice nodes.
SparseSpd full_stiffness(const HoneycombMesh& mesh);

FieldP1 expand(std::span<const double> dof_values, const DofMap& dofs, const HoneycombMesh& mesh);

/// Dof values of a field (its interior honeycomb vertex values).
std::vector<double> restrict_to_dofs(const FieldP1& field, const DofMap& dofs);

/// Nodal interpolation at honeycomb vertices, extended to centers by the ring
/// mean. For a scalar field g (callable on Point2).
template <class G>
FieldP1 interpolate(const G& g, const HoneycombMesh& mesh);

/// Samples g at every lattice node, centers included.
template <class G>
FieldP1 interpolate_bar(const G& g, const HoneycombMesh& mesh);

FieldP1 interpolate(const ManufacturedProblem& problem, const HoneycombMesh& mesh);
FieldP1 interpolate_bar(const ManufacturedProblem& problem, const HoneycombMesh& mesh);

/// Replaces every hexagon-center value with its ring mean.
void apply_center_constraint(FieldP1& field);

/// Conforming P1 Galerkin solution on the full equilateral submesh, recovered
/// from the discrete-harmonic solution by static condensation: at each hexagon
/// center the ring mean plus (f, phi0) / a(phi0, phi0), phi0 the center hat.
/// Because the V_h functions are a-orthogonal to every center hat, both
/// solutions agree at all honeycomb vertices; only center values change.
FieldP1 auxiliary_solution(const FieldP1& uh, const ManufacturedProblem& problem,
                           int load_quad_degree = 6);

template <class G>
FieldP1 interpolate_bar(const G& g, const HoneycombMesh& mesh) {
  FieldP1 out(mesh);
  for (std::size_t k = 0; k < mesh.node_count(); ++k) {
    out.values[k] = g(mesh.node_position(static_cast<int>(k)));
  }
  return out;
}

template <class G>
FieldP1 interpolate(const G& g, const HoneycombMesh& mesh) {
  FieldP1 out(mesh);
  for (int k : mesh.nh_nodes()) out.values[static_cast<std::size_t>(k)] = g(mesh.node_position(k));
  apply_center_constraint(out);
  return out;
}

} // namespace hive
