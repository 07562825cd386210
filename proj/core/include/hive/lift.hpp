#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hive/lattice_mesh.hpp"
#include "hive/problem.hpp"
#include "hive/system.hpp"

namespace hive {

enum class SiteKind { MeshVertex, InteriorCenter };

struct PatchSite {
  LatticePoint lattice;
  int node = -1;
  SiteKind kind = SiteKind::MeshVertex;
};

/// Equilateral recovery patch of edge 4s. Its 15 sites form the degree-4
/// principal lattice of the triangle; its 16 subtriangles tile it.
struct Patch {
  std::array<LatticePoint, 3> corners;
  bool up = true;
  std::array<int, 16> subtriangles{};
  std::array<PatchSite, 15> sites;
  /// Index into sites of the single center-class corner.
  int center_class_corner = -1;
  Point2 centroid;
};

/// Tiling of the domain by recovery patches. Patch k lives on the lattice
/// scaled by four; patch count is 6 * 4^(level-3).
struct PatchGrid {
  static constexpr int kPatchSteps = 4;

  const HoneycombMesh* mesh = nullptr;
  double patch_edge = 0.0;
  std::vector<Patch> patches;

  /// Patch index by (scaled lattice cell, orientation); -1 outside.
  int patch_radius = 0;
  std::vector<int> up_lookup;
  std::vector<int> down_lookup;
  int lookup(int a, int b, bool up) const;
};

/// Throws ConfigError for level < 3, where a patch no longer fits.
PatchGrid build_patch_grid(const HoneycombMesh& mesh);

enum class LiftScheme {
  Lattice15Corrected,
  Paper11Plain,
  Paper11Corrected,
  VerticesOnlyMinNorm,
  OracleCenter,
};

LiftScheme parse_lift_scheme(const std::string& name);
const char* to_string(LiftScheme scheme);
std::vector<LiftScheme> all_lift_schemes();

/// Indices into Patch::sites used as data points by a scheme.
///  - lattice15-*, oracle-center: all 15 sites;
///  - paper11-*: the mesh vertices plus the center-class corner;
///  - vertices-only-minnorm: mesh vertices only.
std::vector<int> scheme_sites(const Patch& patch, LiftScheme scheme);

/// Bivariate cubic in a patch-local frame: xi = (x - origin) / scale.
/// Coefficient order: 1, xi, eta, xi^2, xi eta, eta^2, xi^3, xi^2 eta,
/// xi eta^2, eta^3.
struct CubicFit {
  std::array<double, 10> coeffs{};
  Point2 origin;
  double scale = 1.0;
  double sigma_min = 0.0;
  double residual = 0.0;
  int rank = 0;

  double value(Point2 p) const;
  Point2 gradient(Point2 p) const;
};

/// Least-squares cubic through (points, data) via column-pivoted QR, or the
/// minimum-norm solution via complete orthogonal decomposition when
/// min_norm is set. Throws FitError (tagged with `patch_id`) when a full-rank
/// fit meets a design matrix of rank < 10.
CubicFit fit_cubic(std::span<const Point2> points, std::span<const double> data, Point2 origin,
                   double scale, bool min_norm, std::size_t patch_id = 0);

/// Fits one patch from data aligned with scheme_sites(patch, scheme).
CubicFit fit_patch(const PatchGrid& grid, std::size_t patch, std::span<const double> data,
                   LiftScheme scheme);

struct LiftedSolution {
  const PatchGrid* grid = nullptr;
  LiftScheme scheme = LiftScheme::Lattice15Corrected;
  std::vector<CubicFit> fits;
  /// Patches whose design matrix was rank deficient under the min-norm scheme.
  std::vector<std::size_t> rank_deficient;
};

/// Data per site: honeycomb vertices take u_h; centers take u_h (the ring
/// mean), plus (s^2/4) f(x0) for the corrected schemes, or the exact u(x0)
/// for oracle-center. Patches are fitted in parallel.
LiftedSolution lift_solution(const FieldP1& uh, const ManufacturedProblem& problem,
                             const PatchGrid& grid, LiftScheme scheme);

/// Data vector for one patch under a scheme.
std::vector<double> patch_data(const FieldP1& uh, const ManufacturedProblem& problem,
                               const PatchGrid& grid, std::size_t patch, LiftScheme scheme);

struct LiftValue {
  double value = 0.0;
  Point2 gradient;
  std::size_t patch = 0;
};

/// Owning patch of a point (lowest index on shared boundaries), or nullopt
/// outside the domain.
std::optional<std::size_t> locate_patch(const PatchGrid& grid, Point2 p);

/// Throws ConfigError for a point outside the domain.
LiftValue evaluate_lift(const LiftedSolution& lift, Point2 p);

} // namespace hive
