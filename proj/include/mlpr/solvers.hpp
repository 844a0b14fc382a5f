#pragma once

#include "mlpr/tensor.hpp"

#include <optional>
#include <vector>

namespace mlpr {

// ---------------------------------------------------------------------------
// Solver configuration and results
// ---------------------------------------------------------------------------

enum class StartPolicy {
  MethodDefault,   ///< v for the first-order methods, 0 for pure Newton,
                   ///< (1-alpha) v for projected Newton
  TeleportVector,  ///< x0 = v
  Zero,            ///< x0 = 0
  ScaledTeleport,  ///< x0 = (1-alpha) v
  Custom,          ///< x0 = options.x0
};

struct SolverOptions {
  SolverOptions(double alpha_, ProbabilityVector v_)
      : alpha(alpha_), v(std::move(v_)) {}

  double alpha;
  ProbabilityVector v;
  double gamma = 1.0;       ///< shift of the damped iteration
  double tol = 1e-8;
  Index max_iter = 0;       ///< 0 picks the per-method default
  double inner_tol = 0.0;   ///< 0 picks tol / 100
  Index inner_max_iter = 10000;
  double newton_step_scale = 0.5;  ///< projected-Newton step fraction
  StartPolicy start = StartPolicy::MethodDefault;
  std::optional<Vector> x0;  ///< used when start == Custom
  bool record_iterates = false;
};

/// Result of one solver invocation.  `x` is stochastic for every method
/// except the pure Newton iteration, whose fixed points need not lie on the
/// simplex.  residual_history[k] is the residual of the k-th iterate, so its
/// length is always iterations + 1.
struct SolverOutcome {
  Vector x;
  bool converged = false;
  Index iterations = 0;
  std::vector<double> residual_history;
  std::vector<Vector> iterate_history;  ///< filled only when requested
};

/// Per-iteration bookkeeping of the pure Newton run: defect sums
/// f_k = e^T f(x_k), iterate sums z_k = e^T x_k, and step sums e^T p_k.
struct NewtonTrace {
  std::vector<double> defect_sums;
  std::vector<double> iterate_sums;
  std::vector<double> step_sums;
};

// ---------------------------------------------------------------------------
// Residual and derived operators
// ---------------------------------------------------------------------------

/// || alpha R(x (x) ... (x) x) + (1 - alpha) v - x ||_1.  The candidate need
/// not be stochastic (pure Newton iterates are not).
double residual(const TransitionTensor& tensor, double alpha,
                const ProbabilityVector& v, const Vector& x);

/// Sum of the m-1 identity placements R(I (x) x (x) ... (x) x) + ... +
/// R(x (x) ... (x) x (x) I), an n x n matrix.
Matrix placement_sum(const TransitionTensor& tensor, const Vector& x);

/// S(x): the solution-dependent Markov matrix, placement_sum / (m-1).
/// Column stochastic whenever x is.
Matrix markov_matrix(const TransitionTensor& tensor, const Vector& x);

/// Jacobian of f(x) = alpha R(x (x) ... (x) x) + (1-alpha) v - x, namely
/// alpha * placement_sum(x) - I.
Matrix jacobian(const TransitionTensor& tensor, double alpha, const Vector& x);

/// proj(x) = max(x, 0) / e^T max(x, 0).  Throws std::runtime_error when no
/// entry is positive, which signals a pathological Newton step.
Vector simplex_project(const Vector& x);

/// Predicted next Newton defect sum, alpha f^2 / ((1-2 alpha)^2 + 4 alpha f).
double newton_recurrence_predict(double defect_sum, double alpha);

// ---------------------------------------------------------------------------
// The five iterations
//
// All methods evaluate the residual at every iterate, starting with x0, and
// declare convergence as soon as it drops to tol.  Running out of iterations
// is a normal outcome reported through the converged flag.
// ---------------------------------------------------------------------------

/// x <- alpha R(x (x) ... (x) x) + (1-alpha) v.  Default budget 10,000.
SolverOutcome solve_fixed_point(const TransitionTensor& tensor,
                                const SolverOptions& options);

/// x <- [alpha R(x...) + (1-alpha) v + gamma x] / (1 + gamma).
/// Default budget 10,000.
SolverOutcome solve_shifted(const TransitionTensor& tensor,
                            const SolverOptions& options);

/// Outer update x_{k+1} solves the always-unique subproblem
///   z = (alpha/(m-1)) Rbar(z ...) + (1 - alpha/(m-1)) x_k,
/// Rbar = alpha R + (1-alpha) v e^T, by the convergent fixed-point method.
/// Default budget 1,000 outer iterations; an inner solve that fails to reach
/// its tolerance raises std::runtime_error.
SolverOutcome solve_inner_outer(const TransitionTensor& tensor,
                                const SolverOptions& options);

/// Each step solves the PageRank-style linear system
/// (I - alpha S(x_k)) x_{k+1} = (1-alpha) v by a dense LU factorization.
/// Default budget 1,000.
SolverOutcome solve_inverse(const TransitionTensor& tensor,
                            const SolverOptions& options);

/// Newton on f(x) = 0 from x0 = 0 with no safeguarding.  For m = 3 and
/// alpha < 1/2 the defect sums follow an exact recurrence and the iterates
/// converge quadratically; outside that regime the iteration may settle on a
/// non-stochastic root.  Default budget 1,000.
SolverOutcome solve_newton_pure(const TransitionTensor& tensor,
                                const SolverOptions& options,
                                NewtonTrace* trace = nullptr);

/// Damped Newton step followed by a projection onto the probability simplex,
/// started from (1-alpha) v.  The full step x + p falls into attracting
/// period-2 cycles of the projected map on several benchmark problems; the
/// default half step removes those cycles while leaving every fixed point in
/// place.  Default budget 1,000.
SolverOutcome solve_newton_projected(const TransitionTensor& tensor,
                                     const SolverOptions& options);

}  // namespace mlpr
