#pragma once

#include <cmath>

namespace hive {

/// Second-order forward-mode number in two variables: value, gradient and
/// Hessian propagated together (truncated Taylor arithmetic).
struct Taylor2 {
  double v = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dxx = 0.0;
  double dxy = 0.0;
  double dyy = 0.0;

  constexpr Taylor2() = default;
  constexpr Taylor2(double value) : v(value) {} // NOLINT: implicit constants
  constexpr Taylor2(double value, double gx, double gy, double hxx, double hxy, double hyy)
      : v(value), dx(gx), dy(gy), dxx(hxx), dxy(hxy), dyy(hyy) {}

  static constexpr Taylor2 variable_x(double x) { return {x, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr Taylor2 variable_y(double y) { return {y, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  constexpr double laplacian() const { return dxx + dyy; }
};

/// Chain rule for a scalar function with derivatives f0 = g(a), f1 = g'(a),
/// f2 = g''(a).
constexpr Taylor2 apply_chain(const Taylor2& a, double f0, double f1, double f2) {
  return {f0,
          f1 * a.dx,
          f1 * a.dy,
          f1 * a.dxx + f2 * a.dx * a.dx,
          f1 * a.dxy + f2 * a.dx * a.dy,
          f1 * a.dyy + f2 * a.dy * a.dy};
}

constexpr Taylor2 operator-(const Taylor2& a) {
  return {-a.v, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy};
}

constexpr Taylor2 operator+(const Taylor2& a, const Taylor2& b) {
  return {a.v + b.v, a.dx + b.dx, a.dy + b.dy, a.dxx + b.dxx, a.dxy + b.dxy, a.dyy + b.dyy};
}

constexpr Taylor2 operator-(const Taylor2& a, const Taylor2& b) { return a + (-b); }

constexpr Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
  return {a.v * b.v,
          a.dx * b.v + a.v * b.dx,
          a.dy * b.v + a.v * b.dy,
          a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
          a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
          a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy};
}

constexpr Taylor2 operator/(const Taylor2& a, const Taylor2& b) {
  const double inv = 1.0 / b.v;
  return a * apply_chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Taylor2& operator+=(Taylor2& a, const Taylor2& b) { return a = a + b; }
inline Taylor2& operator-=(Taylor2& a, const Taylor2& b) { return a = a - b; }
inline Taylor2& operator*=(Taylor2& a, const Taylor2& b) { return a = a * b; }

inline Taylor2 sin(const Taylor2& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return apply_chain(a, s, c, -s);
}

inline Taylor2 cos(const Taylor2& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return apply_chain(a, c, -s, -c);
}

inline Taylor2 exp(const Taylor2& a) {
  const double e = std::exp(a.v);
  return apply_chain(a, e, e, e);
}

inline Taylor2 sqrt(const Taylor2& a) {
  const double r = std::sqrt(a.v);
  return apply_chain(a, r, 0.5 / r, -0.25 / (r * a.v));
}

inline Taylor2 pow(const Taylor2& a, int k) {
  if (k < 0) return Taylor2(1.0) / pow(a, -k);
  if (k == 0) return Taylor2(1.0);
  if (k == 1) return a;
  const double p2 = std::pow(a.v, k - 2);
  return apply_chain(a, p2 * a.v * a.v, k * p2 * a.v, k * (k - 1) * p2);
}

} // namespace hive
