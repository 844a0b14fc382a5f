#include "mlpr/solvers.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace mlpr {

namespace {

void check_options(const TransitionTensor& tensor, const SolverOptions& options) {
  if (options.alpha < 0.0 || options.alpha >= 1.0) {
    throw std::invalid_argument("solver: alpha must lie in [0, 1)");
  }
  if (options.v.dim() != tensor.dim()) {
    throw std::invalid_argument("solver: teleportation dimension mismatch");
  }
  if (options.tol <= 0.0) {
    throw std::invalid_argument("solver: tol must be positive");
  }
  if (options.gamma < 0.0) {
    throw std::invalid_argument("solver: gamma must be nonnegative");
  }
  if (options.newton_step_scale <= 0.0 || options.newton_step_scale > 1.0) {
    throw std::invalid_argument("solver: newton_step_scale must lie in (0, 1]");
  }
}

Index budget(const SolverOptions& options, Index method_default) {
  return options.max_iter > 0 ? options.max_iter : method_default;
}

Vector start_vector(const TransitionTensor& tensor, const SolverOptions& options,
                    StartPolicy method_default) {
  StartPolicy policy = options.start;
  if (policy == StartPolicy::MethodDefault) policy = method_default;
  switch (policy) {
    case StartPolicy::TeleportVector:
      return options.v.vec();
    case StartPolicy::Zero:
      return Vector::Zero(tensor.dim());
    case StartPolicy::ScaledTeleport:
      return (1.0 - options.alpha) * options.v.vec();
    case StartPolicy::Custom:
      if (!options.x0 || options.x0->size() != tensor.dim()) {
        throw std::invalid_argument("solver: custom start vector missing or misshaped");
      }
      return *options.x0;
    default:
      throw std::logic_error("solver: unresolved start policy");
  }
}

Vector fixed_point_map(const TransitionTensor& tensor, double alpha,
                       const Vector& v, const Vector& x) {
  return alpha * tensor.apply_raw(x) + (1.0 - alpha) * v;
}

void record(SolverOutcome& outcome, const SolverOptions& options,
            const Vector& x, double res) {
  outcome.residual_history.push_back(res);
  if (options.record_iterates) outcome.iterate_history.push_back(x);
}

// In exact arithmetic the fixed-point map sends the simplex to itself, but
// under roundoff the iterate sum obeys s <- alpha s^(m-1) + 1 - alpha, whose
// fixed point s = 1 is unstable once alpha (m-1) > 1: drift of order eps
// grows geometrically and the iteration slides onto a sub-stochastic root of
// the polynomial system.  Renormalizing after every step pins the iterates
// to the simplex without changing the exact-arithmetic algorithm.
Vector renormalize(Vector x) {
  const double total = x.sum();
  if (total > 0.0 && total != 1.0) x /= total;
  return x;
}

// Shared driver for the two damped fixed-point variants.  The map value
// y = f(x) gives the residual of the current iterate for free.
SolverOutcome damped_iteration(const TransitionTensor& tensor,
                               const SolverOptions& options, double gamma) {
  check_options(tensor, options);
  const Index max_iter = budget(options, 10000);
  SolverOutcome outcome;
  Vector x = start_vector(tensor, options, StartPolicy::TeleportVector);

  for (Index k = 0;; ++k) {
    const Vector y = fixed_point_map(tensor, options.alpha, options.v.vec(), x);
    const double res = (y - x).lpNorm<1>();
    record(outcome, options, x, res);
    if (res <= options.tol) {
      outcome.converged = true;
      outcome.iterations = k;
      break;
    }
    if (k == max_iter) {
      outcome.iterations = k;
      break;
    }
    x = renormalize(gamma == 0.0 ? y : Vector((y + gamma * x) / (1.0 + gamma)));
  }
  outcome.x = std::move(x);
  return outcome;
}

struct NewtonStep {
  Vector x;
  Vector p;
};

NewtonStep newton_step(const TransitionTensor& tensor, double alpha,
                       const Vector& x, const Vector& f) {
  // Solve [I - alpha R(sum of placements)] p = f(x); the system matrix is
  // -J(x).
  const Matrix system = Matrix::Identity(tensor.dim(), tensor.dim()) -
                        alpha * placement_sum(tensor, x);
  Eigen::FullPivLU<Matrix> lu(system);
  if (!lu.isInvertible()) {
    throw std::runtime_error("newton: singular Jacobian");
  }
  NewtonStep step;
  step.p = lu.solve(f);
  step.x = x + step.p;
  return step;
}

}  // namespace

double residual(const TransitionTensor& tensor, double alpha,
                const ProbabilityVector& v, const Vector& x) {
  if (x.size() != tensor.dim() || v.dim() != tensor.dim()) {
    throw std::invalid_argument("residual: dimension mismatch");
  }
  return (alpha * tensor.apply_raw(x) + (1.0 - alpha) * v.vec() - x)
      .lpNorm<1>();
}

Matrix placement_sum(const TransitionTensor& tensor, const Vector& x) {
  const Index n = tensor.dim();
  if (x.size() != n) {
    throw std::invalid_argument("placement_sum: dimension mismatch");
  }
  const int factors = tensor.order() - 1;
  const Index cols = tensor.flattening().cols();
  Matrix sum = Matrix::Zero(n, n);

  std::vector<int> odometer(factors, 0);
  std::vector<double> prefix(factors + 1), suffix(factors + 1);
  for (Index c = 0; c < cols; ++c) {
    // prefix[t] = prod of factors before t, suffix[t] = prod after t.
    prefix[0] = 1.0;
    for (int t = 0; t < factors; ++t) prefix[t + 1] = prefix[t] * x[odometer[t]];
    suffix[factors] = 1.0;
    for (int t = factors - 1; t >= 0; --t) suffix[t] = suffix[t + 1] * x[odometer[t]];
    for (int t = 0; t < factors; ++t) {
      const double weight = prefix[t] * suffix[t + 1];
      if (weight != 0.0) sum.col(odometer[t]) += weight * tensor.flattening().col(c);
    }
    for (int t = 0; t < factors; ++t) {
      if (++odometer[t] < n) break;
      odometer[t] = 0;
    }
  }
  return sum;
}

Matrix markov_matrix(const TransitionTensor& tensor, const Vector& x) {
  return placement_sum(tensor, x) / static_cast<double>(tensor.order() - 1);
}

Matrix jacobian(const TransitionTensor& tensor, double alpha, const Vector& x) {
  return alpha * placement_sum(tensor, x) -
         Matrix::Identity(tensor.dim(), tensor.dim());
}

Vector simplex_project(const Vector& x) {
  Vector clipped = x.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0.0) {
    throw std::runtime_error("simplex_project: projection of nonpositive vector");
  }
  return clipped / total;
}

double newton_recurrence_predict(double defect_sum, double alpha) {
  if (defect_sum == 0.0) return 0.0;
  const double off = 1.0 - 2.0 * alpha;
  return alpha * defect_sum * defect_sum /
         (off * off + 4.0 * alpha * defect_sum);
}

SolverOutcome solve_fixed_point(const TransitionTensor& tensor,
                                const SolverOptions& options) {
  return damped_iteration(tensor, options, 0.0);
}

SolverOutcome solve_shifted(const TransitionTensor& tensor,
                            const SolverOptions& options) {
  return damped_iteration(tensor, options, options.gamma);
}

SolverOutcome solve_inner_outer(const TransitionTensor& tensor,
                                const SolverOptions& options) {
  check_options(tensor, options);
  const Index max_outer = budget(options, 1000);
  const double inner_tol =
      options.inner_tol > 0.0 ? options.inner_tol : options.tol / 100.0;
  const int m = tensor.order();
  const double alpha_inner = options.alpha / static_cast<double>(m - 1);

  // Rbar = alpha R + (1-alpha) v e^T is itself a stochastic flattening.
  const Matrix rbar_flat =
      options.alpha * tensor.flattening() +
      (1.0 - options.alpha) * options.v.vec() *
          Eigen::RowVectorXd::Ones(tensor.flattening().cols());
  const TransitionTensor rbar(m, rbar_flat, 1e-9);

  SolverOutcome outcome;
  Vector x = start_vector(tensor, options, StartPolicy::TeleportVector);

  for (Index k = 0;; ++k) {
    const double res = residual(tensor, options.alpha, options.v, x);
    record(outcome, options, x, res);
    if (res <= options.tol) {
      outcome.converged = true;
      outcome.iterations = k;
      break;
    }
    if (k == max_outer) {
      outcome.iterations = k;
      break;
    }
    // Inner subproblem: z = alpha_inner Rbar(z...) + (1 - alpha_inner) x,
    // a multilinear PageRank problem inside the guaranteed-unique regime.
    Vector z = x;
    bool inner_done = false;
    for (Index j = 0; j <= options.inner_max_iter; ++j) {
      const Vector y = fixed_point_map(rbar, alpha_inner, x, z);
      if ((y - z).lpNorm<1>() <= inner_tol) {
        inner_done = true;
        break;
      }
      z = renormalize(y);
    }
    if (!inner_done) {
      throw std::runtime_error(
          "inner-outer: inner fixed-point solve missed its tolerance");
    }
    x = renormalize(z);
  }
  outcome.x = std::move(x);
  return outcome;
}

SolverOutcome solve_inverse(const TransitionTensor& tensor,
                            const SolverOptions& options) {
  check_options(tensor, options);
  const Index max_iter = budget(options, 1000);
  const Index n = tensor.dim();
  const Matrix identity = Matrix::Identity(n, n);

  SolverOutcome outcome;
  Vector x = start_vector(tensor, options, StartPolicy::TeleportVector);

  for (Index k = 0;; ++k) {
    const double res = residual(tensor, options.alpha, options.v, x);
    record(outcome, options, x, res);
    if (res <= options.tol) {
      outcome.converged = true;
      outcome.iterations = k;
      break;
    }
    if (k == max_iter) {
      outcome.iterations = k;
      break;
    }
    // I - alpha S(x) is nonsingular: S is stochastic and alpha < 1.  The
    // solve reproduces e^T x = 1 only up to roundoff, and the error feeds
    // back through S at rate alpha/(1-alpha); renormalize to stay on the
    // simplex.
    const Matrix system = identity - options.alpha * markov_matrix(tensor, x);
    x = renormalize(
        system.partialPivLu().solve((1.0 - options.alpha) * options.v.vec()));
  }
  outcome.x = std::move(x);
  return outcome;
}

SolverOutcome solve_newton_pure(const TransitionTensor& tensor,
                                const SolverOptions& options,
                                NewtonTrace* trace) {
  check_options(tensor, options);
  const Index max_iter = budget(options, 1000);

  SolverOutcome outcome;
  Vector x = start_vector(tensor, options, StartPolicy::Zero);
  Vector f = fixed_point_map(tensor, options.alpha, options.v.vec(), x) - x;

  if (trace) {
    trace->defect_sums.push_back(f.sum());
    trace->iterate_sums.push_back(x.sum());
  }

  for (Index k = 0;; ++k) {
    const double res = f.lpNorm<1>();
    record(outcome, options, x, res);
    if (res <= options.tol) {
      outcome.converged = true;
      outcome.iterations = k;
      break;
    }
    if (k == max_iter) {
      outcome.iterations = k;
      break;
    }
    const NewtonStep step = newton_step(tensor, options.alpha, x, f);
    x = step.x;
    f = fixed_point_map(tensor, options.alpha, options.v.vec(), x) - x;
    if (trace) {
      trace->step_sums.push_back(step.p.sum());
      trace->defect_sums.push_back(f.sum());
      trace->iterate_sums.push_back(x.sum());
    }
  }
  outcome.x = std::move(x);
  return outcome;
}

SolverOutcome solve_newton_projected(const TransitionTensor& tensor,
                                     const SolverOptions& options) {
  check_options(tensor, options);
  const Index max_iter = budget(options, 1000);

  SolverOutcome outcome;
  Vector x = start_vector(tensor, options, StartPolicy::ScaledTeleport);

  for (Index k = 0;; ++k) {
    const Vector f =
        fixed_point_map(tensor, options.alpha, options.v.vec(), x) - x;
    const double res = f.lpNorm<1>();
    record(outcome, options, x, res);
    if (res <= options.tol) {
      outcome.converged = true;
      outcome.iterations = k;
      break;
    }
    if (k == max_iter) {
      outcome.iterations = k;
      break;
    }
    const NewtonStep step = newton_step(tensor, options.alpha, x, f);
    x = simplex_project(x + options.newton_step_scale * step.p);
  }
  outcome.x = std::move(x);
  return outcome;
}

}  // namespace mlpr
