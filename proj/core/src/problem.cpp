#include "hive/problem.hpp"

#include <numbers>

#include "hive/error.hpp"

namespace hive {

ManufacturedProblem hex_sine() {
  return ManufacturedProblem("hex-sine", [](const Taylor2& x, const Taylor2& y) {
    constexpr double pi = std::numbers::pi;
    const Taylor2 t = y * (1.0 / kSqrt3);
    return x * x * sin(0.5 * pi * (t + x + 1.0)) * sin(0.5 * pi * (t - x + 1.0)) *
           sin((pi / kSqrt3) * (y + 0.5 * kSqrt3));
  });
}

ManufacturedProblem zero_problem() {
  return ManufacturedProblem("zero", [](const Taylor2&, const Taylor2&) { return Taylor2(0.0); });
}

ManufacturedProblem make_problem(const std::string& name) {
  if (name == "hex-sine") return hex_sine();
  if (name == "zero") return zero_problem();
  throw ConfigError("unknown problem '" + name + "' (expected hex-sine or zero)");
}

std::vector<std::string> problem_names() { return {"hex-sine", "zero"}; }

} // namespace hive
