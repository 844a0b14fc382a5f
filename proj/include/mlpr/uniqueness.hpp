#pragma once

#include "mlpr/tensor.hpp"

#include <cstdint>

namespace mlpr {

/// Sufficient condition: the multilinear PageRank solution is
/// unique whenever alpha < 1/(m-1).
bool unique_regime(double alpha, int order);

/// Subset-minimum slack quantity for third-order tensors.  For a subset S of
/// the states with complement Sc,
///   beta1(S) = min_k [ min_{j in S} sum_{i in Sc} P_ijk
///                      + min_{j in Sc} sum_{i in S} P_ijk ],
/// beta2(S) is the same with the roles of the second and third subscripts
/// exchanged, and beta = min over nonempty proper S of beta1(S) + beta2(S).
/// beta > 1 certifies a unique stationary vector.
struct BetaResult {
  double beta = 0.0;
  double beta1 = 0.0;              ///< component at the minimizing subset
  double beta2 = 0.0;
  std::uint32_t witness_subset = 0;  ///< bitmask over states 0..n-1
};

/// beta of an arbitrary nonnegative third-order flattening (n x n^2).  The
/// quantity is positively homogeneous, so sub-stochastic inputs are allowed.
/// Enumerates all 2^n - 2 subsets (complement pairs share a value, so half
/// are evaluated); requires n <= 20.  Ties resolve to the lowest-code subset.
BetaResult li_ng_beta(const Matrix& flattening);

/// Convenience overload for stochastic tensors; requires order 3.
BetaResult li_ng_beta(const TransitionTensor& tensor);

/// Uniqueness diagnostics for the PageRank modification
/// Pbar = alpha P + (1-alpha) Q with Q_ijk = v_i.
struct UniquenessReport {
  double alpha = 0.0;
  bool alpha_in_unique_regime = false;  ///< alpha < 1/(m-1)
  BetaResult beta_modified;             ///< beta(Pbar)
  bool beta_certifies_unique = false;   ///< beta(Pbar) > 1
  bool teleport_has_zero = false;       ///< v has zero entries
};

UniquenessReport uniqueness_report(const TransitionTensor& tensor, double alpha,
                                   const ProbabilityVector& v);

}  // namespace mlpr
