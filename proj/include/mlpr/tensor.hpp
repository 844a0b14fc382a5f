#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace mlpr {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Default tolerance used when checking that probabilities sum to one.
inline constexpr double kStochasticTol = 1e-12;

// ---------------------------------------------------------------------------
// Column codes
//
// An order-m, n-dimensional transition tensor P(i1,...,im) is stored by its
// flattening along the first index: an n x n^(m-1) matrix R whose column c
// collects the entries with fixed trailing subscripts (i2,...,im).  The code
// uses 0-based subscripts idx[t] = i_{t+2}-1 and
//
//     c = sum_t idx[t] * n^t,        t = 0..m-2  (idx[0] varies fastest).
//
// For m = 3 this puts column (j,k) at c = (k-1)*n + (j-1) in 1-based terms:
// the slices P(:,:,1), P(:,:,2), ... appear left to right, each with its
// second subscript running over consecutive columns.
// ---------------------------------------------------------------------------

/// Encode trailing subscripts (0-based) into a flattening column index.
/// Throws std::out_of_range if any subscript is outside [0, dim).
Index column_code(std::span<const int> indices, Index dim);

/// Decode a flattening column index into `count` trailing subscripts (0-based).
std::vector<int> column_decode(Index code, Index dim, int count);

// ---------------------------------------------------------------------------
// Stochasticity validation
// ---------------------------------------------------------------------------

struct StochasticityViolation {
  Index column;       ///< offending column code
  double column_sum;  ///< its actual sum
  double min_entry;   ///< most negative entry in the column
};

struct StochasticityReport {
  bool ok = false;
  Index dim = 0;  ///< n inferred from the row count
  int order = 0;  ///< m inferred from columns = n^(m-1)
  std::vector<StochasticityViolation> violations;
};

/// Check that a flattening is column stochastic: all entries >= -tol and each
/// column sums to 1 within tol.  The order is inferred from the shape; a
/// column count that is not a positive power of the row count is an error.
StochasticityReport validate_stochastic(const Matrix& flattening,
                                        double tol = kStochasticTol);

// ---------------------------------------------------------------------------
// Probability vectors
// ---------------------------------------------------------------------------

/// A nonnegative vector summing to one.  Validated at construction and
/// immutable afterwards, so instances are safe to share across threads.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector entries, double tol = kStochasticTol);

  static ProbabilityVector uniform(Index n);
  static ProbabilityVector basis(Index n, Index i);

  const Vector& vec() const { return entries_; }
  Index dim() const { return entries_.size(); }
  double operator[](Index i) const { return entries_[i]; }

 private:
  Vector entries_;
};

// ---------------------------------------------------------------------------
// Transition tensors
// ---------------------------------------------------------------------------

/// Stochastic order-m transition tensor stored as its dense mode-1 flattening.
class TransitionTensor {
 public:
  /// Validates that `flattening` is n x n^(order-1) and column stochastic
  /// within `tol`; throws std::invalid_argument otherwise.
  TransitionTensor(int order, Matrix flattening, double tol = kStochasticTol);

  int order() const { return order_; }
  Index dim() const { return flattening_.rows(); }
  const Matrix& flattening() const { return flattening_; }

  /// Entry P(i, i2, ..., im) with 0-based subscripts.
  double entry(int i, std::span<const int> trailing) const;

  /// R (x (x) ... (x) x) with m-1 Kronecker factors, evaluated column by
  /// column without materializing the product.  `x` need not be stochastic;
  /// sums are compensated so residuals stay trustworthy near 1e-8 and below.
  Vector apply_raw(const Vector& x) const;

  /// Simplex-to-simplex version of apply_raw.
  ProbabilityVector apply(const ProbabilityVector& x) const;

 private:
  int order_;
  Matrix flattening_;
};

/// Kronecker product with `slow` supplying the slow (block) index.
Vector kron(const Vector& slow, const Vector& fast);

/// x (x) x (x) ... (x) x with `count` factors.
Vector kron_power(const Vector& x, int count);

// ---------------------------------------------------------------------------
// Sparse data with a dangling correction
// ---------------------------------------------------------------------------

struct SparseEntry {
  Index row = 0;     ///< first tensor subscript, 0-based
  Index column = 0;  ///< flattening column code
  double value = 0.0;
};

/// Nonnegative sparse tensor data S whose column sums are at most one,
/// together with a stochastic fill vector u.  The implied dense operator is
/// R = S + u d^T with d^T = e^T - e^T S, which completes every deficient
/// column to a probability distribution.
class SparseTransitionData {
 public:
  SparseTransitionData(int order, Index dim, std::vector<SparseEntry> entries,
                       ProbabilityVector dangling_fill,
                       double tol = kStochasticTol);

  int order() const { return order_; }
  Index dim() const { return dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  const ProbabilityVector& dangling_fill() const { return fill_; }

  /// d = e - S^T e as a dense vector of per-column deficiencies.
  Vector dangling_weights() const;

  /// Materialize R = S + u d^T (test/debug scale only).
  Matrix densify() const;

  /// R (x (x) ... (x) x) in work proportional to the stored nonzeros:
  /// z = S xk; result = z + (1 - e^T z) u, where xk is the implicit
  /// Kronecker power of x.
  ProbabilityVector dangling_apply(const ProbabilityVector& x) const;

 private:
  int order_;
  Index dim_;
  std::vector<SparseEntry> entries_;
  ProbabilityVector fill_;
};

}  // namespace mlpr
