#pragma once

#include "mlpr/tensor.hpp"

namespace mlpr {

// ---------------------------------------------------------------------------
// Reduced first-order form of a higher-order chain
//
// The product state space enumerates histories (h1, ..., h_{m-1}) with h1 the
// current state and h_{m-1} the oldest; state s = sum_t (h_t) * n^(t-1) in
// 0-based subscripts, current index varying fastest.  With that encoding a
// state code coincides with the flattening column code of the tensor, so the
// chain part has P[s', s] = R(i, s) for s' = i + n * (s mod n^(m-2)).
// ---------------------------------------------------------------------------

struct ReducedChain {
  int order = 0;
  Index dim = 0;
  double alpha = 0.0;
  Vector teleport;       ///< v
  Matrix chain_part;     ///< P: tensor transitions on the product space
  Matrix teleport_part;  ///< V: teleportation on the same sparsity pattern

  Index states() const { return chain_part.rows(); }

  /// M = alpha * P + (1 - alpha) * V.
  Matrix matrix() const {
    return alpha * chain_part + (1.0 - alpha) * teleport_part;
  }

  /// M * y without materializing M.
  Vector apply(const Vector& y) const {
    return alpha * (chain_part * y) + (1.0 - alpha) * (teleport_part * y);
  }
};

/// Build the reduced chain of the PageRank-modified higher-order problem.
/// Throws std::length_error when n^(m-1) exceeds `max_states` (dense product
/// state spaces grow fast; the guard makes the blow-up explicit).
ReducedChain build_reduced(const TransitionTensor& tensor, double alpha,
                           const ProbabilityVector& v,
                           Index max_states = 10000);

/// Stationary distribution over histories, i.e. an order-(m-1) probability
/// table stored with the same fastest-first encoding as the state space.
struct StationaryTensor {
  int order = 0;  ///< m - 1
  Index dim = 0;
  Vector values;  ///< length n^(m-1), sums to 1
  bool converged = false;
  Index iterations = 0;
  double residual = 0.0;
};

/// Power iteration on the reduced chain, started from vec(v (x) ... (x) v).
/// Succeeds when ||M vec(X) - vec(X)||_1 <= tol; otherwise returns the best
/// iterate with converged = false.
StationaryTensor stationary(const ReducedChain& chain, double tol = 1e-10,
                            Index max_iter = 1000000);

/// Marginal over the current state: sums the table over all trailing indices.
ProbabilityVector marginal(const StationaryTensor& table);

// ---------------------------------------------------------------------------
// Equivalent standard PageRank problem
// ---------------------------------------------------------------------------

/// The stationary histogram of the reduced chain is the PageRank vector of
/// (alpha_pr, P_pr, v (x) ... (x) v) with alpha_pr = 1 - (1-alpha)^(m-1) and
/// P_pr = (M^(m-1) - (1-alpha)^(m-1) V^(m-1)) / alpha_pr.
struct EquivalentPageRank {
  double alpha_pr = 0.0;
  Matrix transition;  ///< P_pr, column stochastic
  Vector teleport;    ///< v_pr = v (x) ... (x) v
};

EquivalentPageRank equivalent_pagerank(const TransitionTensor& tensor,
                                       double alpha,
                                       const ProbabilityVector& v,
                                       Index max_states = 10000);

/// Standard PageRank by Richardson iteration, x0 = v.  The error contracts
/// like alpha^k, so exhausting max_iter before reaching tol indicates a bug
/// or an unreasonable budget and raises std::runtime_error.
ProbabilityVector pagerank(const Matrix& transition, double alpha,
                           const ProbabilityVector& v, double tol = 1e-10,
                           Index max_iter = 1000000);

}  // namespace mlpr
