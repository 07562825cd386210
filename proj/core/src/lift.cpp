#include "hive/lift.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "hive/error.hpp"
#include "hive/parallel.hpp"

namespace hive {

namespace {

constexpr int kSteps = PatchGrid::kPatchSteps;
constexpr double kRankTolerance = 1e-10;

std::array<double, 10> monomials(double xi, double eta) {
  return {1.0, xi, eta, xi * xi, xi * eta, eta * eta, xi * xi * xi, xi * xi * eta, xi * eta * eta,
          eta * eta * eta};
}

Patch make_patch(const HoneycombMesh& mesh, int a, int b, bool up) {
  Patch patch;
  patch.up = up;
  const double s = mesh.edge();
  if (up) {
    const LatticePoint base{kSteps * a, kSteps * b};
    patch.corners = {base, LatticePoint{base.i + kSteps, base.j}, LatticePoint{base.i, base.j + kSteps}};
  } else {
    const LatticePoint top{kSteps * (a + 1), kSteps * (b + 1)};
    patch.corners = {top, LatticePoint{top.i - kSteps, top.j}, LatticePoint{top.i, top.j - kSteps}};
  }
  // Sites: corner0 + sign * (p, q), p + q <= 4.
  const int sign = up ? 1 : -1;
  const LatticePoint origin = patch.corners[0];
  std::size_t k = 0;
  for (int p = 0; p <= kSteps; ++p) {
    for (int q = 0; p + q <= kSteps; ++q) {
      const LatticePoint lp{origin.i + sign * p, origin.j + sign * q};
      const auto node = mesh.node_index(lp);
      if (!node) throw MeshError("recovery patch site outside the domain");
      PatchSite& site = patch.sites[k];
      site.lattice = lp;
      site.node = *node;
      site.kind = mesh.nodes()[static_cast<std::size_t>(*node)].is_hexagon_center
                      ? SiteKind::InteriorCenter
                      : SiteKind::MeshVertex;
      if (lattice_class(lp) == kCenterClass &&
          std::ranges::find(patch.corners, lp) != patch.corners.end()) {
        patch.center_class_corner = static_cast<int>(k);
      }
      ++k;
    }
  }
  // Small triangles: in the up patch, up triangles based at origin + (p, q)
  // with p + q <= 3 and down ones with p + q <= 2. The down patch is the
  // point reflection, with bases origin - (1, 1) - (p, q) and roles swapped.
  std::size_t t = 0;
  auto add = [&](LatticePoint base, bool small_up) {
    const auto idx = mesh.triangle_index(base, small_up);
    if (!idx) throw MeshError("recovery patch subtriangle outside the domain");
    patch.subtriangles[t++] = *idx;
  };
  for (int p = 0; p < kSteps; ++p) {
    for (int q = 0; p + q < kSteps; ++q) {
      if (up) {
        add({origin.i + p, origin.j + q}, true);
        if (p + q < kSteps - 1) add({origin.i + p, origin.j + q}, false);
      } else {
        const LatticePoint base{origin.i - 1 - p, origin.j - 1 - q};
        add(base, false);
        if (p + q < kSteps - 1) add(base, true);
      }
    }
  }
  const Point2 c0 = position(patch.corners[0], s);
  const Point2 c1 = position(patch.corners[1], s);
  const Point2 c2 = position(patch.corners[2], s);
  patch.centroid = {(c0.x + c1.x + c2.x) / 3.0, (c0.y + c1.y + c2.y) / 3.0};
  return patch;
}

} // namespace

int PatchGrid::lookup(int a, int b, bool up) const {
  if (a < -patch_radius || a >= patch_radius || b < -patch_radius || b >= patch_radius) return -1;
  const std::size_t side = static_cast<std::size_t>(2 * patch_radius);
  const std::size_t slot =
      static_cast<std::size_t>(b + patch_radius) * side + static_cast<std::size_t>(a + patch_radius);
  return (up ? up_lookup : down_lookup)[slot];
}

PatchGrid build_patch_grid(const HoneycombMesh& mesh) {
  if (mesh.level() < 3) {
    throw ConfigError("recovery patches need level >= 3 (got " + std::to_string(mesh.level()) + ")");
  }
  PatchGrid grid;
  grid.mesh = &mesh;
  grid.patch_edge = kSteps * mesh.edge();
  const int m = mesh.radius() / kSteps;
  grid.patch_radius = m;
  const std::size_t side = static_cast<std::size_t>(2 * m);
  grid.up_lookup.assign(side * side, -1);
  grid.down_lookup.assign(side * side, -1);
  auto inside = [&](int a, int b) { return hex_radius({kSteps * a, kSteps * b}) <= mesh.radius(); };
  for (int b = -m; b < m; ++b) {
    for (int a = -m; a < m; ++a) {
      const std::size_t slot = static_cast<std::size_t>(b + m) * side + static_cast<std::size_t>(a + m);
      if (inside(a, b) && inside(a + 1, b) && inside(a, b + 1)) {
        grid.up_lookup[slot] = static_cast<int>(grid.patches.size());
        grid.patches.push_back(make_patch(mesh, a, b, true));
      }
      if (inside(a + 1, b) && inside(a + 1, b + 1) && inside(a, b + 1)) {
        grid.down_lookup[slot] = static_cast<int>(grid.patches.size());
        grid.patches.push_back(make_patch(mesh, a, b, false));
      }
    }
  }
  for (std::size_t k = 0; k < grid.patches.size(); ++k) {
    if (grid.patches[k].center_class_corner < 0) {
      throw MeshError("recovery patch " + std::to_string(k) + " has no center-class corner");
    }
  }
  return grid;
}

LiftScheme parse_lift_scheme(const std::string& name) {
  for (LiftScheme s : all_lift_schemes()) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("unknown lift scheme '" + name + "'");
}

const char* to_string(LiftScheme scheme) {
  switch (scheme) {
  case LiftScheme::Lattice15Corrected: return "lattice15-corrected";
  case LiftScheme::Paper11Plain: return "paper11-plain";
  case LiftScheme::Paper11Corrected: return "paper11-corrected";
  case LiftScheme::VerticesOnlyMinNorm: return "vertices-only-minnorm";
  case LiftScheme::OracleCenter: return "oracle-center";
  }
  return "?";
}

std::vector<LiftScheme> all_lift_schemes() {
  return {LiftScheme::Lattice15Corrected, LiftScheme::Paper11Plain, LiftScheme::Paper11Corrected,
          LiftScheme::VerticesOnlyMinNorm, LiftScheme::OracleCenter};
}

std::vector<int> scheme_sites(const Patch& patch, LiftScheme scheme) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(patch.sites.size()); ++k) {
    const bool vertex = patch.sites[static_cast<std::size_t>(k)].kind == SiteKind::MeshVertex;
    switch (scheme) {
    case LiftScheme::Lattice15Corrected:
    case LiftScheme::OracleCenter:
      out.push_back(k);
      break;
    case LiftScheme::Paper11Plain:
    case LiftScheme::Paper11Corrected:
      if (vertex || k == patch.center_class_corner) out.push_back(k);
      break;
    case LiftScheme::VerticesOnlyMinNorm:
      if (vertex) out.push_back(k);
      break;
    }
  }
  return out;
}

double CubicFit::value(Point2 p) const {
  const auto m = monomials((p.x - origin.x) / scale, (p.y - origin.y) / scale);
  double v = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) v += coeffs[k] * m[k];
  return v;
}

Point2 CubicFit::gradient(Point2 p) const {
  const double x = (p.x - origin.x) / scale;
  const double y = (p.y - origin.y) / scale;
  const auto& c = coeffs;
  const double gx = c[1] + 2.0 * c[3] * x + c[4] * y + 3.0 * c[6] * x * x + 2.0 * c[7] * x * y + c[8] * y * y;
  const double gy = c[2] + c[4] * x + 2.0 * c[5] * y + c[7] * x * x + 2.0 * c[8] * x * y + 3.0 * c[9] * y * y;
  return {gx / scale, gy / scale};
}

CubicFit fit_cubic(std::span<const Point2> points, std::span<const double> data, Point2 origin,
                   double scale, bool min_norm, std::size_t patch_id) {
  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(m, 10);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Point2 p = points[static_cast<std::size_t>(r)];
    const auto row = monomials((p.x - origin.x) / scale, (p.y - origin.y) / scale);
    for (Eigen::Index c = 0; c < 10; ++c) design(r, c) = row[static_cast<std::size_t>(c)];
  }
  const Eigen::Map<const Eigen::VectorXd> rhs(data.data(), m);

  CubicFit fit;
  fit.origin = origin;
  fit.scale = scale;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(design).singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  fit.rank = static_cast<int>((sv.array() > kRankTolerance * smax).count());
  fit.sigma_min = sv.size() >= 10 ? sv(9) : 0.0;

  Eigen::VectorXd coeffs;
  if (min_norm) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(kRankTolerance);
    cod.compute(design);
    coeffs = cod.solve(rhs);
  } else {
    if (fit.rank < 10) {
      throw FitError("recovery patch " + std::to_string(patch_id) + " has a rank " +
                         std::to_string(fit.rank) + " design matrix",
                     patch_id);
    }
    coeffs = design.colPivHouseholderQr().solve(rhs);
  }
  for (Eigen::Index c = 0; c < 10; ++c) fit.coeffs[static_cast<std::size_t>(c)] = coeffs(c);
  fit.residual = (design * coeffs - rhs).norm();
  return fit;
}

CubicFit fit_patch(const PatchGrid& grid, std::size_t patch, std::span<const double> data,
                   LiftScheme scheme) {
  const Patch& p = grid.patches[patch];
  const std::vector<int> sites = scheme_sites(p, scheme);
  if (sites.size() != data.size()) {
    throw ConfigError("patch data length does not match the scheme's site count");
  }
  std::vector<Point2> points;
  points.reserve(sites.size());
  for (int k : sites) points.push_back(grid.mesh->node_position(p.sites[static_cast<std::size_t>(k)].node));
  return fit_cubic(points, data, p.centroid, grid.patch_edge,
                   scheme == LiftScheme::VerticesOnlyMinNorm, patch);
}

std::vector<double> patch_data(const FieldP1& uh, const ManufacturedProblem& problem,
                               const PatchGrid& grid, std::size_t patch, LiftScheme scheme) {
  const Patch& p = grid.patches[patch];
  const double s = grid.mesh->edge();
  std::vector<double> data;
  for (int k : scheme_sites(p, scheme)) {
    const PatchSite& site = p.sites[static_cast<std::size_t>(k)];
    double v = uh[site.node];
    if (site.kind == SiteKind::InteriorCenter) {
      const Point2 x0 = grid.mesh->node_position(site.node);
      switch (scheme) {
      case LiftScheme::Lattice15Corrected:
      case LiftScheme::Paper11Corrected:
        v += 0.25 * s * s * problem.f(x0);
        break;
      case LiftScheme::OracleCenter:
        v = problem.u(x0);
        break;
      case LiftScheme::Paper11Plain:
      case LiftScheme::VerticesOnlyMinNorm:
        break;
      }
    }
    data.push_back(v);
  }
  return data;
}

LiftedSolution lift_solution(const FieldP1& uh, const ManufacturedProblem& problem,
                             const PatchGrid& grid, LiftScheme scheme) {
  if (uh.mesh != grid.mesh) throw ConfigError("solution and patch grid use different meshes");
  LiftedSolution lift;
  lift.grid = &grid;
  lift.scheme = scheme;
  lift.fits.resize(grid.patches.size());
  parallel_for(grid.patches.size(), [&](std::size_t k) {
    const std::vector<double> data = patch_data(uh, problem, grid, k, scheme);
    lift.fits[k] = fit_patch(grid, k, data, scheme);
  });
  for (std::size_t k = 0; k < lift.fits.size(); ++k) {
    if (lift.fits[k].rank < 10) lift.rank_deficient.push_back(k);
  }
  return lift;
}

std::optional<std::size_t> locate_patch(const PatchGrid& grid, Point2 p) {
  const double s = grid.mesh->edge();
  const double j = p.y / (0.5 * kSqrt3 * s);
  const double i = p.x / s - 0.5 * j;
  const double a = i / kSteps;
  const double b = j / kSteps;
  const int fa = static_cast<int>(std::floor(a));
  const int fb = static_cast<int>(std::floor(b));
  constexpr double tol = 1e-12;
  std::optional<std::size_t> best;
  for (int db = -1; db <= 1; ++db) {
    for (int da = -1; da <= 1; ++da) {
      const int ca = fa + da;
      const int cb = fb + db;
      const double u = a - ca;
      const double v = b - cb;
      // Up triangle (0,0),(1,0),(0,1): barycentrics (1-u-v, u, v).
      if (const int idx = grid.lookup(ca, cb, true);
          idx >= 0 && u >= -tol && v >= -tol && 1.0 - u - v >= -tol) {
        if (!best || static_cast<std::size_t>(idx) < *best) best = static_cast<std::size_t>(idx);
      }
      // Down triangle (1,0),(1,1),(0,1): barycentrics (1-v, u+v-1, 1-u).
      if (const int idx = grid.lookup(ca, cb, false);
          idx >= 0 && 1.0 - v >= -tol && u + v - 1.0 >= -tol && 1.0 - u >= -tol) {
        if (!best || static_cast<std::size_t>(idx) < *best) best = static_cast<std::size_t>(idx);
      }
    }
  }
  return best;
}

LiftValue evaluate_lift(const LiftedSolution& lift, Point2 p) {
  const auto patch = locate_patch(*lift.grid, p);
  if (!patch) throw ConfigError("point outside the domain");
  const CubicFit& fit = lift.fits[*patch];
  return {fit.value(p), fit.gradient(p), *patch};
}

} // namespace hive
