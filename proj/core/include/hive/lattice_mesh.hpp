#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hive/geometry.hpp"

namespace hive {

enum class CellKind { Hexagon, Pentagon, CornerTriangle };

const char* to_string(CellKind kind);

struct MeshNode {
  LatticePoint lattice;
  bool on_boundary = false;
  /// Strictly interior node of the center class: the auxiliary point that
  /// splits a hexagon into six triangles. Not a vertex of the honeycomb.
  bool is_hexagon_center = false;
};

struct Cell {
  CellKind kind = CellKind::Hexagon;
  /// Center-class lattice point shared by all member subtriangles.
  LatticePoint anchor;
  /// Node index of the anchor, or -1 when it lies outside the domain.
  int anchor_node = -1;
  std::vector<int> members;
};

/// Honeycomb mesh of the regular hexagon with vertices (+-1, 0),
/// (+-1/2, +-sqrt(3)/2), together with its equilateral submesh.
///
/// The lattice radius n = 2^(level-1) and edge length s = 1/n. A lattice point
/// (i, j) is in the closed domain iff max(|i|, |j|, |i+j|) <= n, and on the
/// boundary iff equality holds. All membership tests are integer predicates.
class HoneycombMesh {
public:
  static constexpr int kMaxLevel = 12;

  explicit HoneycombMesh(int level);

  int level() const noexcept { return level_; }
  int radius() const noexcept { return radius_; }
  double edge() const noexcept { return edge_; }

  const std::vector<MeshNode>& nodes() const noexcept { return nodes_; }
  const std::vector<std::array<int, 3>>& subtriangles() const noexcept { return triangles_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  /// Honeycomb vertices: every node except interior center-class nodes.
  const std::vector<int>& nh_nodes() const noexcept { return nh_nodes_; }
  /// Interior hexagon centers (ascending node index).
  const std::vector<int>& centers() const noexcept { return centers_; }
  /// Six ring nodes of centers()[k], counterclockwise starting at +u.
  const std::vector<std::array<int, 6>>& center_rings() const noexcept { return rings_; }
  /// Position of node in centers(), or -1.
  int center_slot(int node) const { return center_slot_[static_cast<std::size_t>(node)]; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  bool contains(LatticePoint p) const noexcept { return hex_radius(p) <= radius_; }
  std::optional<int> node_index(LatticePoint p) const;
  /// Up triangle (p, p+u, p+v) or down triangle (p+u, p+u+v, p+v).
  std::optional<int> triangle_index(LatticePoint p, bool up) const;

  Point2 node_position(int node) const {
    return position(nodes_[static_cast<std::size_t>(node)].lattice, edge_);
  }
  Triangle triangle(int t) const;

private:
  std::size_t grid_slot(LatticePoint p) const;

  int level_;
  int radius_;
  double edge_;
  std::vector<MeshNode> nodes_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Cell> cells_;
  std::vector<int> nh_nodes_;
  std::vector<int> centers_;
  std::vector<std::array<int, 6>> rings_;
  std::vector<int> center_slot_;
  std::vector<int> node_grid_;
  std::vector<int> up_grid_;
  std::vector<int> down_grid_;
};

HoneycombMesh build_mesh(int level);

/// Nodes on the six domain edges, ascending.
std::vector<int> boundary_nodes(const HoneycombMesh& mesh);

struct CellCensus {
  std::size_t hexagons = 0;
  std::size_t pentagons = 0;
  std::size_t corner_triangles = 0;
};

CellCensus census(const HoneycombMesh& mesh);

/// Sum of signed subtriangle areas, compensated (Neumaier).
double total_area(const HoneycombMesh& mesh);

} // namespace hive
