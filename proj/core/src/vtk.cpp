#include "hive/vtk.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace hive {

void write_vtk(std::ostream& out, const std::vector<Point2>& points,
               const std::vector<std::array<int, 3>>& triangles, const PointScalars& scalars,
               const std::string& title) {
  out.precision(17);
  out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << points.size() << " double\n";
  for (const Point2& p : points) out << p.x << ' ' << p.y << " 0\n";
  out << "CELLS " << triangles.size() << ' ' << 4 * triangles.size() << '\n';
  for (const auto& t : triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  out << "CELL_TYPES " << triangles.size() << '\n';
  for (std::size_t k = 0; k < triangles.size(); ++k) out << "5\n";
  if (scalars.empty()) return;
  out << "POINT_DATA " << points.size() << '\n';
  for (const auto& [name, values] : scalars) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (double v : values) out << v << '\n';
  }
}

namespace {

std::vector<Point2> node_positions(const HoneycombMesh& mesh) {
  std::vector<Point2> pts;
  pts.reserve(mesh.node_count());
  for (std::size_t k = 0; k < mesh.node_count(); ++k) pts.push_back(mesh.node_position(static_cast<int>(k)));
  return pts;
}

} // namespace

void write_mesh_vtk(std::ostream& out, const HoneycombMesh& mesh) {
  write_vtk(out, node_positions(mesh), mesh.subtriangles(), {},
            "honeycomb mesh level " + std::to_string(mesh.level()));
}

void write_solution_vtk(std::ostream& out, const FieldP1& uh, const ManufacturedProblem& problem) {
  const HoneycombMesh& mesh = *uh.mesh;
  const std::vector<Point2> pts = node_positions(mesh);
  std::vector<double> err(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) err[k] = problem.u(pts[k]) - uh.values[k];
  write_vtk(out, pts, mesh.subtriangles(), {{"u_h", uh.values}, {"error", err}},
            "P1 solution level " + std::to_string(mesh.level()));
}

void write_lift_vtk(std::ostream& out, const LiftedSolution& lift, const ManufacturedProblem& problem) {
  const PatchGrid& grid = *lift.grid;
  const HoneycombMesh& mesh = *grid.mesh;
  std::vector<Point2> pts;
  std::vector<std::array<int, 3>> tris;
  std::vector<double> value, err;
  for (std::size_t p = 0; p < grid.patches.size(); ++p) {
    for (int t : grid.patches[p].subtriangles) {
      const auto& tri = mesh.subtriangles()[static_cast<std::size_t>(t)];
      std::array<int, 3> local{};
      for (std::size_t k = 0; k < 3; ++k) {
        const Point2 x = mesh.node_position(tri[k]);
        local[k] = static_cast<int>(pts.size());
        pts.push_back(x);
        value.push_back(lift.fits[p].value(x));
        err.push_back(problem.u(x) - value.back());
      }
      tris.push_back(local);
    }
  }
  write_vtk(out, pts, tris, {{"u_lift", value}, {"error", err}},
            "P3 lift level " + std::to_string(mesh.level()));
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error("write to " + path + " failed: " + std::strerror(errno));
}

} // namespace hive
