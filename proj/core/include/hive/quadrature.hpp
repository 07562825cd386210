#pragma once

#include <array>
#include <vector>

#include "hive/geometry.hpp"

namespace hive {

/// Symmetric rule on a triangle in barycentric form. Weights are relative to
/// the triangle area and sum to one.
struct QuadratureRule {
  int degree = 0;
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
};

/// Tabulated symmetric Gauss rules of exactness degree 2, 4, 6 or 8 (3, 6, 12
/// and 16 points). Each table is checked against the exact barycentric
/// moments the first time it is requested; a failure throws NumericalError.
const QuadratureRule& rule(int degree);

/// Exact integral of l1^a l2^b l3^c over a triangle of the given area.
double barycentric_moment(int a, int b, int c, double area);

template <class F>
double integrate(const Triangle& tri, F&& g, const QuadratureRule& q) {
  double sum = 0.0;
  for (std::size_t k = 0; k < q.points.size(); ++k) {
    sum += q.weights[k] * g(from_barycentric(tri, q.points[k]));
  }
  return sum * area(tri);
}

} // namespace hive
