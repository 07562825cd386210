#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hive/lattice_mesh.hpp"
#include "hive/lift.hpp"
#include "hive/problem.hpp"
#include "hive/system.hpp"

namespace hive {

using PointScalars = std::vector<std::pair<std::string, std::vector<double>>>;

/// Legacy ASCII VTK 3.0, UNSTRUCTURED_GRID of triangles (cell type 5), points
/// in 3D with z = 0 and optional per-point scalars.
void write_vtk(std::ostream& out, const std::vector<Point2>& points,
               const std::vector<std::array<int, 3>>& triangles, const PointScalars& scalars = {},
               const std::string& title = "honeycomb mesh");

void write_mesh_vtk(std::ostream& out, const HoneycombMesh& mesh);

/// Scalars "u_h" and "error" (= u - u_h at the nodes).
void write_solution_vtk(std::ostream& out, const FieldP1& uh, const ManufacturedProblem& problem);

/// Patchwise cubic on each patch's 16 subtriangles (points duplicated per
/// patch, since the lift is discontinuous); scalars "u_lift" and "error".
void write_lift_vtk(std::ostream& out, const LiftedSolution& lift, const ManufacturedProblem& problem);

/// Opens `path` and calls writer; throws std::runtime_error carrying the
/// system error text on I/O failure.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

} // namespace hive
