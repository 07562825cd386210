#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hive/error.hpp"
#include "hive/problem.hpp"

namespace hive {
namespace {

double fd_laplacian(const ManufacturedProblem& p, Point2 x, double h) {
  const double c = p.u(x);
  return (p.u({x.x + h, x.y}) + p.u({x.x - h, x.y}) + p.u({x.x, x.y + h}) + p.u({x.x, x.y - h}) -
          4.0 * c) /
         (h * h);
}

TEST(Taylor2, PolynomialLaplacian) {
  const auto r2 = [](const Taylor2& x, const Taylor2& y) { return x * x + y * y; };
  EXPECT_DOUBLE_EQ(laplacian(r2, {0.3, -1.7}), 4.0);
  EXPECT_DOUBLE_EQ(laplacian(r2, {0.0, 0.0}), 4.0);
}

TEST(Taylor2, EigenfunctionLaplacian) {
  const auto g = [](const Taylor2& x, const Taylor2& y) { return sin(x) * sin(y); };
  for (Point2 p : {Point2{0.4, 1.3}, Point2{-2.0, 0.7}}) {
    EXPECT_NEAR(laplacian(g, p), -2.0 * std::sin(p.x) * std::sin(p.y), 1e-15);
  }
}

TEST(Taylor2, ChainRules) {
  const Taylor2 x = Taylor2::variable_x(0.7);
  const Taylor2 e = exp(x * x);  // (e^{x^2})'' = (2 + 4x^2) e^{x^2}
  EXPECT_NEAR(e.dxx, (2.0 + 4.0 * 0.49) * std::exp(0.49), 1e-14);
  const Taylor2 s = sqrt(x);
  EXPECT_NEAR(s.dxx, -0.25 * std::pow(0.7, -1.5), 1e-14);
  const Taylor2 q = Taylor2(1.0) / x;
  EXPECT_NEAR(q.dxx, 2.0 / (0.7 * 0.7 * 0.7), 1e-13);
  const Taylor2 c = cos(x);
  EXPECT_NEAR(c.dx, -std::sin(0.7), 1e-16);
  EXPECT_NEAR(c.dxx, -std::cos(0.7), 1e-16);
}

TEST(Taylor2, PowAtZero) {
  const Taylor2 x = Taylor2::variable_x(0.0);
  const Taylor2 p2 = pow(x, 2);
  EXPECT_EQ(p2.v, 0.0);
  EXPECT_EQ(p2.dx, 0.0);
  EXPECT_EQ(p2.dxx, 2.0);
  const Taylor2 p3 = pow(x, 3);
  EXPECT_EQ(p3.dxx, 0.0);
  EXPECT_TRUE(std::isfinite(p3.dxx));
}

TEST(HexSine, VanishesOnBoundary) {
  const ManufacturedProblem p = hex_sine();
  EXPECT_EQ(p.u({0.0, 0.0}), 0.0);
  EXPECT_NEAR(p.u({1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(p.u({0.5, 0.5 * std::numbers::sqrt3}), 0.0, 1e-15);
  // along the six edges of the hexagon
  const Point2 v[6] = {{1, 0}, {0.5, 0.5 * std::numbers::sqrt3}, {-0.5, 0.5 * std::numbers::sqrt3},
                       {-1, 0}, {-0.5, -0.5 * std::numbers::sqrt3}, {0.5, -0.5 * std::numbers::sqrt3}};
  for (int e = 0; e < 6; ++e) {
    for (double t : {0.1, 0.37, 0.5, 0.81}) {
      const Point2 x = (1.0 - t) * v[e] + t * v[(e + 1) % 6];
      EXPECT_NEAR(p.u(x), 0.0, 1e-15) << e << " " << t;
    }
  }
}

TEST(HexSine, NotIdenticallyZero) {
  const ManufacturedProblem p = hex_sine();
  EXPECT_GT(std::abs(p.u({0.4, 0.1})), 1e-3);
}

TEST(HexSine, LoadMatchesFiniteDifferences) {
  const ManufacturedProblem p = hex_sine();
  const Point2 x{0.3, 0.2};
  const double f = p.f(x);
  EXPECT_NEAR(f, -fd_laplacian(p, x, 1e-3), 1e-6 * std::abs(f));
}

TEST(HexSine, LaplacianRandomPoints) {
  const ManufacturedProblem p = hex_sine();
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> d(-0.8, 0.8);
  for (int k = 0; k < 10; ++k) {
    const Point2 x{d(gen), 0.8 * d(gen)};
    const double lap = -p.f(x);
    // Richardson on two step sizes removes the h^2 term
    const double a = fd_laplacian(p, x, 2e-3);
    const double b = fd_laplacian(p, x, 1e-3);
    const double fd = (4.0 * b - a) / 3.0;
    EXPECT_NEAR(lap, fd, 1e-6 * std::max(1.0, std::abs(lap))) << x.x << "," << x.y;
  }
}

TEST(HexSine, GradientMatchesFiniteDifferences) {
  const ManufacturedProblem p = hex_sine();
  const Point2 x{-0.2, 0.35};
  const double h = 1e-6;
  const Point2 g = p.grad_u(x);
  EXPECT_NEAR(g.x, (p.u({x.x + h, x.y}) - p.u({x.x - h, x.y})) / (2 * h), 1e-8);
  EXPECT_NEAR(g.y, (p.u({x.x, x.y + h}) - p.u({x.x, x.y - h})) / (2 * h), 1e-8);
}

TEST(Problems, Registry) {
  EXPECT_EQ(make_problem("hex-sine").name(), "hex-sine");
  EXPECT_EQ(make_problem("zero").f({0.1, 0.2}), 0.0);
  EXPECT_THROW(make_problem("nope"), ConfigError);
  EXPECT_EQ(problem_names().size(), 2u);
}

} // namespace
} // namespace hive
