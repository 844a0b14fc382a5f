#pragma once

#include "mlpr/tensor.hpp"

#include <cstdint>
#include <vector>

namespace mlpr {

struct OracleOptions {
  int starts = 200;              ///< random simplex starts beyond v and e_i
  std::uint64_t seed = 0;
  double residual_accept = 1e-10;
  double dedup_radius = 1e-6;    ///< infinity-norm separation of kept roots
  double solver_tol = 1e-13;
  Index solver_max_iter = 500;
};

/// Distinct multilinear PageRank solutions found by multi-start projected
/// Newton.  Coverage is best effort: multi-start can miss roots, so an entry
/// count is a lower bound on the number of solutions.
struct SolutionSet {
  std::vector<Vector> solutions;  ///< stochastic, pairwise > dedup apart
  std::vector<double> residuals;  ///< re-checked via the residual functional
  int starts_used = 0;            ///< total start points tried
  int converged_starts = 0;       ///< starts that produced an accepted root
  double dedup_radius = 0.0;
};

/// Runs projected Newton from v, every basis vector, and `starts` points
/// drawn from the flat Dirichlet distribution on the simplex, keeping the
/// converged endpoints whose residual passes the acceptance threshold.
/// Deterministic for a fixed seed; start order fixes the merge order.
SolutionSet enumerate_solutions(const TransitionTensor& tensor, double alpha,
                                const ProbabilityVector& v,
                                const OracleOptions& options = {});

SolutionSet enumerate_solutions(const TransitionTensor& tensor, double alpha,
                                const ProbabilityVector& v, int starts,
                                std::uint64_t seed);

}  // namespace mlpr
