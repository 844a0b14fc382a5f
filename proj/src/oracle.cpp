#include "mlpr/oracle.hpp"

#include "mlpr/solvers.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mlpr {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Flat Dirichlet sample: normalized standard exponentials.
Vector dirichlet_start(std::mt19937_64& rng, Index n) {
  Vector x(n);
  double total = 0.0;
  do {
    for (Index i = 0; i < n; ++i) {
      x[i] = -std::log1p(-uniform01(rng));
    }
    total = x.sum();
  } while (total <= 0.0);
  return x / total;
}

}  // namespace

SolutionSet enumerate_solutions(const TransitionTensor& tensor, double alpha,
                                const ProbabilityVector& v,
                                const OracleOptions& options) {
  if (options.starts < 1) {
    throw std::invalid_argument("enumerate_solutions: starts must be >= 1");
  }
  const Index n = tensor.dim();
  std::mt19937_64 rng(options.seed);

  std::vector<Vector> start_points;
  start_points.reserve(static_cast<size_t>(options.starts) + n + 1);
  start_points.push_back(v.vec());
  for (Index i = 0; i < n; ++i) {
    start_points.push_back(ProbabilityVector::basis(n, i).vec());
  }
  for (int s = 0; s < options.starts; ++s) {
    start_points.push_back(dirichlet_start(rng, n));
  }

  SolutionSet set;
  set.starts_used = static_cast<int>(start_points.size());
  set.dedup_radius = options.dedup_radius;

  for (const Vector& start : start_points) {
    SolverOptions solver(alpha, v);
    solver.tol = options.solver_tol;
    solver.max_iter = options.solver_max_iter;
    solver.start = StartPolicy::Custom;
    solver.x0 = start;

    Vector candidate;
    try {
      const SolverOutcome outcome = solve_newton_projected(tensor, solver);
      if (!outcome.converged) continue;
      candidate = outcome.x;
    } catch (const std::runtime_error&) {
      continue;  // singular Jacobian or an all-negative step: skip the start
    }

    // Accept only after an independent residual check.
    const double res = residual(tensor, alpha, v, candidate);
    if (res > options.residual_accept) continue;
    ++set.converged_starts;

    bool duplicate = false;
    for (const Vector& kept : set.solutions) {
      if ((kept - candidate).lpNorm<Eigen::Infinity>() <= options.dedup_radius) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      set.solutions.push_back(std::move(candidate));
      set.residuals.push_back(res);
    }
  }
  return set;
}

SolutionSet enumerate_solutions(const TransitionTensor& tensor, double alpha,
                                const ProbabilityVector& v, int starts,
                                std::uint64_t seed) {
  OracleOptions options;
  options.starts = starts;
  options.seed = seed;
  return enumerate_solutions(tensor, alpha, v, options);
}

}  // namespace mlpr
