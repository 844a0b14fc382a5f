#include "mlpr/higher_order.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mlpr {

ReducedChain build_reduced(const TransitionTensor& tensor, double alpha,
                           const ProbabilityVector& v, Index max_states) {
  if (alpha < 0.0 || alpha >= 1.0) {
    throw std::invalid_argument("build_reduced: alpha must lie in [0, 1)");
  }
  const Index n = tensor.dim();
  if (v.dim() != n) {
    throw std::invalid_argument("build_reduced: teleportation dimension mismatch");
  }
  const Index states = tensor.flattening().cols();  // n^(m-1)
  if (states > max_states) {
    std::ostringstream msg;
    msg << "build_reduced: " << states << " product states exceed the guard of "
        << max_states;
    throw std::length_error(msg.str());
  }
  const Index tail = states / n;  // n^(m-2)

  ReducedChain chain;
  chain.order = tensor.order();
  chain.dim = n;
  chain.alpha = alpha;
  chain.teleport = v.vec();
  chain.chain_part = Matrix::Zero(states, states);
  chain.teleport_part = Matrix::Zero(states, states);
  for (Index s = 0; s < states; ++s) {
    const Index shifted = (s % tail) * n;  // drop the oldest history entry
    for (Index i = 0; i < n; ++i) {
      const Index next = shifted + i;
      chain.chain_part(next, s) = tensor.flattening()(i, s);
      chain.teleport_part(next, s) = v[i];
    }
  }
  return chain;
}

StationaryTensor stationary(const ReducedChain& chain, double tol,
                            Index max_iter) {
  if (tol <= 0.0) throw std::invalid_argument("stationary: tol must be positive");

  StationaryTensor result;
  result.order = chain.order - 1;
  result.dim = chain.dim;

  // Start from the rank-1 history built out of the teleportation vector.
  Vector x = kron_power(chain.teleport, chain.order - 1);

  for (Index k = 0;; ++k) {
    const Vector next = chain.apply(x);
    const double res = (next - x).lpNorm<1>();
    if (res <= tol) {
      result.values = x;
      result.converged = true;
      result.iterations = k;
      result.residual = res;
      return result;
    }
    if (k == max_iter) {
      result.values = x;
      result.converged = false;
      result.iterations = k;
      result.residual = res;
      return result;
    }
    // Keep the iterate on the simplex; the stochastic map preserves the sum
    // only up to roundoff, which accumulates over long runs.
    x = next / next.sum();
  }
}

ProbabilityVector marginal(const StationaryTensor& table) {
  const Index n = table.dim;
  Vector sums = Vector::Zero(n);
  for (Index s = 0; s < table.values.size(); ++s) {
    sums[s % n] += table.values[s];
  }
  return ProbabilityVector(std::move(sums), 1e-9);
}

EquivalentPageRank equivalent_pagerank(const TransitionTensor& tensor,
                                       double alpha,
                                       const ProbabilityVector& v,
                                       Index max_states) {
  const ReducedChain chain = build_reduced(tensor, alpha, v, max_states);
  const int m = tensor.order();

  EquivalentPageRank equivalent;
  equivalent.alpha_pr = 1.0 - std::pow(1.0 - alpha, m - 1);
  equivalent.teleport = kron_power(v.vec(), m - 1);

  Matrix chain_power = chain.matrix();
  for (int t = 1; t < m - 1; ++t) chain_power = chain.matrix() * chain_power;

  if (equivalent.alpha_pr == 0.0) {
    // alpha = 0: the problem degenerates to pure teleportation and any
    // stochastic matrix works; M^(m-1) = V^(m-1) is the natural choice.
    equivalent.transition = chain_power;
    return equivalent;
  }

  // V^(m-1) = (v (x) ... (x) v)(e^T (x) ... (x) e^T), a rank-1 matrix.
  const Matrix teleport_power =
      equivalent.teleport * Eigen::RowVectorXd::Ones(chain.states());
  equivalent.transition =
      (chain_power - std::pow(1.0 - alpha, m - 1) * teleport_power) /
      equivalent.alpha_pr;
  return equivalent;
}

ProbabilityVector pagerank(const Matrix& transition, double alpha,
                           const ProbabilityVector& v, double tol,
                           Index max_iter) {
  if (alpha < 0.0 || alpha >= 1.0) {
    throw std::invalid_argument("pagerank: alpha must lie in [0, 1)");
  }
  if (transition.rows() != transition.cols() ||
      transition.rows() != v.dim()) {
    throw std::invalid_argument("pagerank: dimension mismatch");
  }
  Vector x = v.vec();
  for (Index k = 0; k <= max_iter; ++k) {
    const Vector next = alpha * (transition * x) + (1.0 - alpha) * v.vec();
    if ((next - x).lpNorm<1>() <= tol) {
      return ProbabilityVector(x, 1e-9);
    }
    x = next;
  }
  throw std::runtime_error(
      "pagerank: Richardson iteration failed to reach the tolerance; the "
      "2*alpha^k bound makes this a bug signal");
}

}  // namespace mlpr
