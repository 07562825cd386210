#pragma once

#include <array>
#include <cmath>
#include <compare>

namespace hive {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double t, Point2 a) { return {t * a.x, t * a.y}; }

using Triangle = std::array<Point2, 3>;

inline double signed_area(const Triangle& t) {
  return 0.5 * ((t[1].x - t[0].x) * (t[2].y - t[0].y) -
                (t[2].x - t[0].x) * (t[1].y - t[0].y));
}

inline double area(const Triangle& t) { return std::abs(signed_area(t)); }

inline Point2 from_barycentric(const Triangle& t, const std::array<double, 3>& l) {
  return {l[0] * t[0].x + l[1] * t[1].x + l[2] * t[2].x,
          l[0] * t[0].y + l[1] * t[1].y + l[2] * t[2].y};
}

/// Integer axial coordinates on the equilateral lattice spanned by
/// u = (s, 0) and v = (s/2, s*sqrt(3)/2).
struct LatticePoint {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline constexpr double kSqrt3 = 1.7320508075688772935274463415058723669428;

inline Point2 position(LatticePoint p, double s) {
  return {(p.i + 0.5 * p.j) * s, p.j * s * (0.5 * kSqrt3)};
}

/// (i - j) mod 3, always in {0, 1, 2}.
inline constexpr int lattice_class(LatticePoint p) {
  return ((p.i - p.j) % 3 + 3) % 3;
}

/// Class of the origin; nodes of this class anchor the honeycomb cells.
inline constexpr int kCenterClass = lattice_class(LatticePoint{0, 0});

/// Hexagonal "radius" of a lattice point: the smallest n with the point in
/// the closed axial hexagon of radius n.
inline constexpr int hex_radius(LatticePoint p) {
  const int a = p.i < 0 ? -p.i : p.i;
  const int b = p.j < 0 ? -p.j : p.j;
  const int c = p.i + p.j < 0 ? -(p.i + p.j) : p.i + p.j;
  return a > b ? (a > c ? a : c) : (b > c ? b : c);
}

} // namespace hive
