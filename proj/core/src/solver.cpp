#include "hive/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>

#include "hive/error.hpp"

namespace hive {

namespace {

using EigenSparse = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

EigenSparse to_eigen(const SparseSpd& a) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(a.nonzeros());
  for (int r = 0; r < a.dimension; ++r) {
    for (int k = a.row_offsets[r]; k < a.row_offsets[r + 1]; ++k) {
      t.emplace_back(r, a.columns[k], a.values[k]);
    }
  }
  EigenSparse m(a.dimension, a.dimension);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> residual(const SparseSpd& a, std::span<const double> x, std::span<const double> b) {
  std::vector<double> r(b.size());
  a.multiply(x, r);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = b[k] - r[k];
  return r;
}

class PreconditionerOp {
public:
  PreconditionerOp(const SparseSpd& a, Preconditioner kind) : kind_(kind) {
    if (kind == Preconditioner::Jacobi) {
      inv_diag_ = a.diagonal();
      for (double& d : inv_diag_) d = 1.0 / d;
    } else if (kind == Preconditioner::IncompleteCholesky) {
      ic_.emplace();
      ic_->compute(to_eigen(a));
      if (ic_->info() != Eigen::Success) {
        throw SolverError("incomplete Cholesky factorization failed", 0, 0.0);
      }
    }
  }

  void apply(std::span<const double> r, std::span<double> z) const {
    switch (kind_) {
    case Preconditioner::None:
      std::copy(r.begin(), r.end(), z.begin());
      break;
    case Preconditioner::Jacobi:
      for (std::size_t k = 0; k < r.size(); ++k) z[k] = inv_diag_[k] * r[k];
      break;
    case Preconditioner::IncompleteCholesky: {
      const Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<Eigen::Index>(r.size()));
      Eigen::Map<Eigen::VectorXd>(z.data(), static_cast<Eigen::Index>(z.size())) = ic_->solve(rv);
      break;
    }
    }
  }

private:
  Preconditioner kind_;
  std::vector<double> inv_diag_;
  std::optional<Eigen::IncompleteCholesky<double, Eigen::Lower, Eigen::AMDOrdering<int>>> ic_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

// max_j |(Ax - b)_j| <= tol (||A||inf ||x||inf + ||b||inf)
bool backward_stable(const SparseSpd& a, std::span<const double> x, std::span<const double> b,
                     std::span<const double> r, double tol) {
  return norm_inf(r) <= tol * (a.norm_inf() * norm_inf(x) + norm_inf(b));
}

SolveResult conjugate_gradient(const SparseSpd& a, std::span<const double> b, const SolverConfig& cfg,
                               const IterationObserver& observer) {
  const std::size_t n = b.size();
  const int max_it = cfg.max_iterations > 0 ? cfg.max_iterations : std::max(10 * a.dimension, 1000);
  const PreconditionerOp pre(a, cfg.preconditioner);
  const double bnorm = norm2(b);
  const double target = cfg.tolerance * bnorm;

  SolveResult out;
  out.x.assign(n, 0.0);
  std::vector<double> r(b.begin(), b.end());
  std::vector<double> z(n), p(n), q(n);
  int it = 0;
  double true_res = norm2(r);
  bool stagnated = false;
  // restart from the true residual whenever the recursive one has drifted
  while (true_res > target && it < max_it) {
    pre.apply(r, z);
    p = z;
    double rz = dot(r, z);
    while (it < max_it) {
      a.multiply(p, q);
      const double pq = dot(p, q);
      if (!(pq > 0.0)) break;
      const double alpha = rz / pq;
      for (std::size_t k = 0; k < n; ++k) {
        out.x[k] += alpha * p[k];
        r[k] -= alpha * q[k];
      }
      ++it;
      if (observer) observer(it, out.x);
      if (norm2(r) <= target) break;
      pre.apply(r, z);
      const double rz_next = dot(r, z);
      const double beta = rz_next / rz;
      rz = rz_next;
      for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    }
    r = residual(a, out.x, b);
    const double previous = true_res;
    true_res = norm2(r);
    // rounding floor: a restart that no longer halves the true residual
    if (true_res > target && true_res > 0.5 * previous) {
      stagnated = true;
      break;
    }
  }
  out.stats.iterations = it;
  out.stats.relative_residual = bnorm > 0.0 ? true_res / bnorm : 0.0;
  if (true_res <= target) return out;
  if (stagnated && backward_stable(a, out.x, b, r, cfg.tolerance)) {
    out.stats.backward_stable = true;
    return out;
  }
  throw SolverError("conjugate gradient did not reach relative residual " + sci(cfg.tolerance) + " in " +
                        std::to_string(it) + " iterations (residual " + sci(out.stats.relative_residual) +
                        (stagnated ? ", stagnated)" : ")"),
                    it, out.stats.relative_residual);
}

SolveResult direct_cholesky(const SparseSpd& a, std::span<const double> b, const SolverConfig& cfg) {
  Eigen::SimplicialLLT<EigenSparse, Eigen::Lower, Eigen::AMDOrdering<int>> llt(to_eigen(a));
  if (llt.info() != Eigen::Success) {
    throw SolverError("sparse Cholesky factorization failed (matrix not SPD?)", 0, 0.0);
  }
  const Eigen::Map<const Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = llt.solve(bv);
  SolveResult out;
  out.x.assign(x.data(), x.data() + x.size());
  const double bnorm = norm2(b);
  // A couple of refinement sweeps recover the last digits lost to fill-in.
  int sweeps = 0;
  std::vector<double> r = residual(a, out.x, b);
  while (norm2(r) > cfg.tolerance * bnorm && sweeps < 3) {
    const Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<Eigen::Index>(r.size()));
    const Eigen::VectorXd dx = llt.solve(rv);
    for (std::size_t k = 0; k < out.x.size(); ++k) out.x[k] += dx[static_cast<Eigen::Index>(k)];
    r = residual(a, out.x, b);
    ++sweeps;
  }
  out.stats.iterations = sweeps;
  out.stats.relative_residual = bnorm > 0.0 ? norm2(r) / bnorm : 0.0;
  return out;
}

} // namespace

SolverMethod parse_solver_method(const std::string& name) {
  if (name == "cg") return SolverMethod::ConjugateGradient;
  if (name == "chol") return SolverMethod::DirectCholesky;
  throw ConfigError("unknown solver '" + name + "' (expected cg or chol)");
}

Preconditioner parse_preconditioner(const std::string& name) {
  if (name == "none") return Preconditioner::None;
  if (name == "jacobi") return Preconditioner::Jacobi;
  if (name == "ic") return Preconditioner::IncompleteCholesky;
  throw ConfigError("unknown preconditioner '" + name + "' (expected none, jacobi or ic)");
}

const char* to_string(SolverMethod m) {
  return m == SolverMethod::ConjugateGradient ? "cg" : "chol";
}

const char* to_string(Preconditioner p) {
  switch (p) {
  case Preconditioner::None: return "none";
  case Preconditioner::Jacobi: return "jacobi";
  case Preconditioner::IncompleteCholesky: return "ic";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance <= 1e-6)) {
    throw ConfigError("solver tolerance must lie in (0, 1e-6]");
  }
  if (max_iterations < 0) throw ConfigError("max iterations must be non-negative");
}

SolveResult solve(const SparseSpd& a, std::span<const double> b, const SolverConfig& cfg,
                  const IterationObserver& observer) {
  cfg.validate();
  if (a.dimension == 0) return {};
  if (cfg.max_iterations > 0 && cfg.max_iterations < a.dimension) {
    throw ConfigError("max iterations " + std::to_string(cfg.max_iterations) +
                      " below the system dimension " + std::to_string(a.dimension));
  }
  if (cfg.method == SolverMethod::DirectCholesky) return direct_cholesky(a, b, cfg);
  return conjugate_gradient(a, b, cfg, observer);
}

} // namespace hive
