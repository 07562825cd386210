#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hive/geometry.hpp"
#include "hive/taylor2.hpp"

namespace hive {

/// u, grad u and f = -laplacian(u) for a closed-form exact solution. The
/// expression is evaluated in second-order forward mode, so f carries no
/// hand-derived formula.
class ManufacturedProblem {
public:
  using Expression = std::function<Taylor2(const Taylor2& x, const Taylor2& y)>;

  ManufacturedProblem(std::string name, Expression expression)
      : name_(std::move(name)), expression_(std::move(expression)) {}

  const std::string& name() const noexcept { return name_; }

  Taylor2 jet(Point2 p) const {
    return expression_(Taylor2::variable_x(p.x), Taylor2::variable_y(p.y));
  }
  double u(Point2 p) const { return expression_(Taylor2(p.x), Taylor2(p.y)).v; }
  Point2 grad_u(Point2 p) const {
    const Taylor2 t = jet(p);
    return {t.dx, t.dy};
  }
  double f(Point2 p) const { return -jet(p).laplacian(); }

private:
  std::string name_;
  Expression expression_;
};

/// Laplacian of any expression callable on Taylor2 arguments.
template <class F>
double laplacian(F&& expression, Point2 p) {
  return expression(Taylor2::variable_x(p.x), Taylor2::variable_y(p.y)).laplacian();
}

/// u = x^2 sin(pi/2 (y/sqrt3 + x + 1)) sin(pi/2 (y/sqrt3 - x + 1))
///       sin(pi/sqrt3 (y + sqrt3/2)),
/// which vanishes on all six edges of the unit hexagon.
ManufacturedProblem hex_sine();

/// u = 0, f = 0.
ManufacturedProblem zero_problem();

/// Lookup by CLI name ("hex-sine", "zero"); throws ConfigError otherwise.
ManufacturedProblem make_problem(const std::string& name);

std::vector<std::string> problem_names();

} // namespace hive
