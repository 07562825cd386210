#include "hive/lattice_mesh.hpp"

#include <cmath>
#include <map>
#include <string>

#include "hive/error.hpp"

namespace hive {

const char* to_string(CellKind kind) {
  switch (kind) {
  case CellKind::Hexagon: return "hexagon";
  case CellKind::Pentagon: return "pentagon";
  case CellKind::CornerTriangle: return "corner-triangle";
  }
  return "?";
}

namespace {

constexpr std::array<LatticePoint, 6> kRing{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

LatticePoint shift(LatticePoint p, int di, int dj) { return {p.i + di, p.j + dj}; }

} // namespace

HoneycombMesh::HoneycombMesh(int level) : level_(level) {
  if (level < 1 || level > kMaxLevel) {
    throw ConfigError("mesh level " + std::to_string(level) + " outside [1, " +
                      std::to_string(kMaxLevel) + "]");
  }
  radius_ = 1 << (level - 1);
  edge_ = 1.0 / radius_;
  const int n = radius_;
  const std::size_t side = static_cast<std::size_t>(2 * n + 1);
  node_grid_.assign(side * side, -1);
  up_grid_.assign(side * side, -1);
  down_grid_.assign(side * side, -1);

  for (int j = -n; j <= n; ++j) {
    for (int i = -n; i <= n; ++i) {
      const LatticePoint p{i, j};
      const int r = hex_radius(p);
      if (r > n) continue;
      MeshNode node;
      node.lattice = p;
      node.on_boundary = (r == n);
      node.is_hexagon_center = !node.on_boundary && lattice_class(p) == kCenterClass;
      node_grid_[grid_slot(p)] = static_cast<int>(nodes_.size());
      nodes_.push_back(node);
    }
  }

  center_slot_.assign(nodes_.size(), -1);
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const MeshNode& node = nodes_[k];
    if (!node.is_hexagon_center) {
      nh_nodes_.push_back(static_cast<int>(k));
      continue;
    }
    center_slot_[k] = static_cast<int>(centers_.size());
    centers_.push_back(static_cast<int>(k));
    std::array<int, 6> ring{};
    for (std::size_t r = 0; r < kRing.size(); ++r) {
      const auto idx = node_index(shift(node.lattice, kRing[r].i, kRing[r].j));
      if (!idx) throw MeshError("hexagon center with a ring node outside the domain");
      ring[r] = *idx;
    }
    rings_.push_back(ring);
  }

  auto add_triangle = [&](LatticePoint a, LatticePoint b, LatticePoint c) -> int {
    const auto ia = node_index(a);
    const auto ib = node_index(b);
    const auto ic = node_index(c);
    if (!ia || !ib || !ic) return -1;
    triangles_.push_back({*ia, *ib, *ic});
    return static_cast<int>(triangles_.size() - 1);
  };
  for (int j = -n; j < n; ++j) {
    for (int i = -n; i < n; ++i) {
      const LatticePoint p{i, j};
      up_grid_[grid_slot(p)] = add_triangle(p, shift(p, 1, 0), shift(p, 0, 1));
      down_grid_[grid_slot(p)] = add_triangle(shift(p, 1, 0), shift(p, 1, 1), shift(p, 0, 1));
    }
  }

  // Every lattice triangle has exactly one center-class vertex; grouping on it
  // yields the honeycomb cells.
  std::map<LatticePoint, std::vector<int>> groups;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    int anchor_count = 0;
    for (int v : triangles_[t]) {
      const LatticePoint p = nodes_[static_cast<std::size_t>(v)].lattice;
      if (lattice_class(p) == kCenterClass) {
        groups[p].push_back(static_cast<int>(t));
        ++anchor_count;
      }
    }
    if (anchor_count != 1) {
      throw MeshError("subtriangle " + std::to_string(t) + " has " + std::to_string(anchor_count) +
                      " center-class vertices");
    }
  }
  for (auto& [anchor, members] : groups) {
    const auto node = node_index(anchor);
    const int r = hex_radius(anchor);
    if (r < n) {
      if (members.size() != 6) {
        throw MeshError("interior anchor with " + std::to_string(members.size()) + " triangles");
      }
      cells_.push_back({CellKind::Hexagon, anchor, *node, members});
    } else if (r == n) {
      if (members.size() == 3) {
        cells_.push_back({CellKind::Pentagon, anchor, *node, members});
      } else if (members.size() == 1 || members.size() == 2) {
        // Center-class domain corner: each triangle stands alone. Never
        // reached on the hexagon domain, whose corners are not center-class.
        for (int m : members) cells_.push_back({CellKind::CornerTriangle, anchor, *node, {m}});
      } else {
        throw MeshError("boundary anchor with " + std::to_string(members.size()) + " triangles");
      }
    }
  }
}

std::size_t HoneycombMesh::grid_slot(LatticePoint p) const {
  const std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
  return static_cast<std::size_t>(p.j + radius_) * side + static_cast<std::size_t>(p.i + radius_);
}

std::optional<int> HoneycombMesh::node_index(LatticePoint p) const {
  if (!contains(p)) return std::nullopt;
  return node_grid_[grid_slot(p)];
}

std::optional<int> HoneycombMesh::triangle_index(LatticePoint p, bool up) const {
  if (p.i < -radius_ || p.i >= radius_ || p.j < -radius_ || p.j >= radius_) return std::nullopt;
  const int t = (up ? up_grid_ : down_grid_)[grid_slot(p)];
  if (t < 0) return std::nullopt;
  return t;
}

Triangle HoneycombMesh::triangle(int t) const {
  const auto& tri = triangles_[static_cast<std::size_t>(t)];
  return {node_position(tri[0]), node_position(tri[1]), node_position(tri[2])};
}

HoneycombMesh build_mesh(int level) { return HoneycombMesh(level); }

std::vector<int> boundary_nodes(const HoneycombMesh& mesh) {
  std::vector<int> out;
  for (std::size_t k = 0; k < mesh.nodes().size(); ++k) {
    if (mesh.nodes()[k].on_boundary) out.push_back(static_cast<int>(k));
  }
  return out;
}

CellCensus census(const HoneycombMesh& mesh) {
  CellCensus c;
  for (const Cell& cell : mesh.cells()) {
    switch (cell.kind) {
    case CellKind::Hexagon: ++c.hexagons; break;
    case CellKind::Pentagon: ++c.pentagons; break;
    case CellKind::CornerTriangle: ++c.corner_triangles; break;
    }
  }
  return c;
}

double total_area(const HoneycombMesh& mesh) {
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const double a = signed_area(mesh.triangle(static_cast<int>(t)));
    const double next = sum + a;
    carry += std::abs(sum) >= std::abs(a) ? (sum - next) + a : (a - next) + sum;
    sum = next;
  }
  return sum + carry;
}

} // namespace hive
