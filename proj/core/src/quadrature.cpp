#include "hive/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "hive/error.hpp"

namespace hive {

namespace {

// Orbit generators. Parameters were refined to 40 digits by Gauss-Newton on
// the symmetric moment equations.
struct Builder {
  QuadratureRule r;

  void centroid(double w) {
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(w);
  }
  // (a, a, 1-2a) and rotations.
  void orbit3(double a, double w) {
    const double b = 1.0 - 2.0 * a;
    r.points.push_back({b, a, a});
    r.points.push_back({a, b, a});
    r.points.push_back({a, a, b});
    for (int k = 0; k < 3; ++k) r.weights.push_back(w);
  }
  // All permutations of (a, b, 1-a-b).
  void orbit6(double a, double b, double w) {
    const double c = 1.0 - a - b;
    r.points.push_back({a, b, c});
    r.points.push_back({a, c, b});
    r.points.push_back({b, a, c});
    r.points.push_back({b, c, a});
    r.points.push_back({c, a, b});
    r.points.push_back({c, b, a});
    for (int k = 0; k < 6; ++k) r.weights.push_back(w);
  }
};

QuadratureRule make_rule(int degree) {
  Builder b;
  b.r.degree = degree;
  switch (degree) {
  case 2:
    b.orbit3(1.0 / 6.0, 1.0 / 3.0);
    break;
  case 4:
    b.orbit3(0.44594849091596488632, 0.22338158967801146570);
    b.orbit3(0.09157621350977074346, 0.10995174365532186764);
    break;
  case 6:
    b.orbit3(0.24928674517091042129, 0.11678627572637936603);
    b.orbit3(0.06308901449150222834, 0.050844906370206816921);
    b.orbit6(0.053145049844816947353, 0.31035245103378440542, 0.082851075618373575194);
    break;
  case 8:
    b.centroid(0.14431560767778716825);
    b.orbit3(0.45929258829272315603, 0.095091634267284624794);
    b.orbit3(0.17056930775176020662, 0.10321737053471825028);
    b.orbit3(0.050547228317030975458, 0.032458497623198080311);
    b.orbit6(0.0083947774099576053372, 0.26311282963463811342, 0.027230314174434994265);
    break;
  default:
    throw ConfigError("unsupported quadrature degree " + std::to_string(degree) +
                      " (expected 2, 4, 6 or 8)");
  }
  return b.r;
}

void validate(const QuadratureRule& q) {
  for (int total = 0; total <= q.degree; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (int b = 0; a + b <= total; ++b) {
        const int c = total - a - b;
        double sum = 0.0;
        for (std::size_t k = 0; k < q.points.size(); ++k) {
          const auto& l = q.points[k];
          sum += q.weights[k] * std::pow(l[0], a) * std::pow(l[1], b) * std::pow(l[2], c);
        }
        const double exact = barycentric_moment(a, b, c, 1.0);
        if (std::abs(sum - exact) > 1e-15 + 1e-13 * exact) {
          throw NumericalError("quadrature table of degree " + std::to_string(q.degree) +
                               " fails exactness check");
        }
      }
    }
  }
  for (double w : q.weights) {
    if (!(w > 0.0)) throw NumericalError("quadrature table with non-positive weight");
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int m = 2; m <= k; ++m) f *= m;
  return f;
}

} // namespace

double barycentric_moment(int a, int b, int c, double area) {
  return factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 2) * 2.0 * area;
}

const QuadratureRule& rule(int degree) {
  static const std::array<int, 4> supported{2, 4, 6, 8};
  static std::array<QuadratureRule, 4> table;
  static std::once_flag once;
  std::size_t slot = supported.size();
  for (std::size_t k = 0; k < supported.size(); ++k) {
    if (supported[k] == degree) slot = k;
  }
  if (slot == supported.size()) {
    throw ConfigError("unsupported quadrature degree " + std::to_string(degree) +
                      " (expected 2, 4, 6 or 8)");
  }
  std::call_once(once, [] {
    for (std::size_t k = 0; k < supported.size(); ++k) {
      table[k] = make_rule(supported[k]);
      validate(table[k]);
    }
  });
  return table[slot];
}

} // namespace hive
