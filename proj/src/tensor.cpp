#include "mlpr/tensor.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mlpr {

namespace {

// Neumaier variant of compensated summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

// Number of trailing-subscript tuples, n^(m-1), guarded against overflow.
Index trailing_count(Index dim, int order) {
  Index count = 1;
  for (int t = 1; t < order; ++t) {
    if (count > std::numeric_limits<Index>::max() / dim) {
      throw std::invalid_argument("tensor shape overflows the index type");
    }
    count *= dim;
  }
  return count;
}

}  // namespace

Index column_code(std::span<const int> indices, Index dim) {
  Index code = 0;
  Index stride = 1;
  for (int idx : indices) {
    if (idx < 0 || idx >= dim) {
      throw std::out_of_range("column_code: subscript out of range");
    }
    code += idx * stride;
    stride *= dim;
  }
  return code;
}

std::vector<int> column_decode(Index code, Index dim, int count) {
  if (code < 0) throw std::out_of_range("column_decode: negative code");
  std::vector<int> indices(count);
  for (int t = 0; t < count; ++t) {
    indices[t] = static_cast<int>(code % dim);
    code /= dim;
  }
  if (code != 0) throw std::out_of_range("column_decode: code out of range");
  return indices;
}

StochasticityReport validate_stochastic(const Matrix& flattening, double tol) {
  const Index n = flattening.rows();
  const Index cols = flattening.cols();
  if (n < 1 || cols < 1) {
    throw std::invalid_argument("validate_stochastic: empty matrix");
  }
  StochasticityReport report;
  report.dim = n;
  // Infer m from cols = n^(m-1).
  Index c = cols;
  int order = 1;
  while (c > 1) {
    if (n == 1 || c % n != 0) {
      throw std::invalid_argument(
          "validate_stochastic: column count is not a power of the row count");
    }
    c /= n;
    ++order;
  }
  if (order < 2) {
    // cols == 1 only matches n == 1; treat a single column as order 2.
    order = 2;
  }
  report.order = order;

  for (Index j = 0; j < cols; ++j) {
    CompensatedSum sum;
    double min_entry = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double p = flattening(i, j);
      sum.add(p);
      min_entry = std::min(min_entry, p);
    }
    if (std::abs(sum.value() - 1.0) > tol || min_entry < -tol) {
      report.violations.push_back({j, sum.value(), min_entry});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

ProbabilityVector::ProbabilityVector(Vector entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.size() == 0) {
    throw std::invalid_argument("ProbabilityVector: empty vector");
  }
  CompensatedSum sum;
  for (Index i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < -tol) {
      throw std::invalid_argument("ProbabilityVector: negative entry");
    }
    sum.add(entries_[i]);
  }
  if (std::abs(sum.value() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "ProbabilityVector: entries sum to " << sum.value() << ", not 1";
    throw std::invalid_argument(msg.str());
  }
}

ProbabilityVector ProbabilityVector::uniform(Index n) {
  return ProbabilityVector(Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::basis(Index n, Index i) {
  Vector e = Vector::Zero(n);
  e[i] = 1.0;
  return ProbabilityVector(std::move(e));
}

TransitionTensor::TransitionTensor(int order, Matrix flattening, double tol)
    : order_(order), flattening_(std::move(flattening)) {
  if (order_ < 2) {
    throw std::invalid_argument("TransitionTensor: order must be at least 2");
  }
  const Index n = flattening_.rows();
  if (n < 1) throw std::invalid_argument("TransitionTensor: empty flattening");
  if (flattening_.cols() != trailing_count(n, order_)) {
    throw std::invalid_argument(
        "TransitionTensor: flattening must be n x n^(order-1)");
  }
  const auto report = validate_stochastic(flattening_, tol);
  if (!report.ok) {
    std::ostringstream msg;
    msg << "TransitionTensor: flattening is not column stochastic ("
        << report.violations.size() << " bad columns, first at code "
        << report.violations.front().column << " with sum "
        << report.violations.front().column_sum << ")";
    throw std::invalid_argument(msg.str());
  }
}

double TransitionTensor::entry(int i, std::span<const int> trailing) const {
  if (static_cast<int>(trailing.size()) != order_ - 1) {
    throw std::invalid_argument("entry: expected order-1 trailing subscripts");
  }
  return flattening_(i, column_code(trailing, dim()));
}

Vector TransitionTensor::apply_raw(const Vector& x) const {
  const Index n = dim();
  if (x.size() != n) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  const Index cols = flattening_.cols();
  const int factors = order_ - 1;

  std::vector<CompensatedSum> acc(n);
  std::vector<int> odometer(factors, 0);
  for (Index c = 0; c < cols; ++c) {
    double weight = 1.0;
    for (int t = 0; t < factors; ++t) weight *= x[odometer[t]];
    if (weight != 0.0) {
      for (Index i = 0; i < n; ++i) {
        acc[i].add(flattening_(i, c) * weight);
      }
    }
    for (int t = 0; t < factors; ++t) {  // advance the subscript odometer
      if (++odometer[t] < n) break;
      odometer[t] = 0;
    }
  }

  Vector result(n);
  for (Index i = 0; i < n; ++i) result[i] = acc[i].value();
  return result;
}

ProbabilityVector TransitionTensor::apply(const ProbabilityVector& x) const {
  return ProbabilityVector(apply_raw(x.vec()));
}

Vector kron(const Vector& slow, const Vector& fast) {
  Vector result(slow.size() * fast.size());
  for (Index a = 0; a < slow.size(); ++a) {
    result.segment(a * fast.size(), fast.size()) = slow[a] * fast;
  }
  return result;
}

Vector kron_power(const Vector& x, int count) {
  if (count < 1) throw std::invalid_argument("kron_power: count must be >= 1");
  Vector result = x;
  for (int t = 1; t < count; ++t) result = kron(x, result);
  return result;
}

SparseTransitionData::SparseTransitionData(int order, Index dim,
                                           std::vector<SparseEntry> entries,
                                           ProbabilityVector dangling_fill,
                                           double tol)
    : order_(order),
      dim_(dim),
      entries_(std::move(entries)),
      fill_(std::move(dangling_fill)) {
  if (order_ < 2 || dim_ < 1) {
    throw std::invalid_argument("SparseTransitionData: bad shape");
  }
  if (fill_.dim() != dim_) {
    throw std::invalid_argument("SparseTransitionData: fill dimension mismatch");
  }
  const Index cols = trailing_count(dim_, order_);
  std::vector<double> colsum(cols, 0.0);
  for (const auto& e : entries_) {
    if (e.row < 0 || e.row >= dim_ || e.column < 0 || e.column >= cols) {
      throw std::invalid_argument("SparseTransitionData: entry out of range");
    }
    if (e.value < 0.0) {
      throw std::invalid_argument("SparseTransitionData: negative value");
    }
    colsum[e.column] += e.value;
  }
  for (Index c = 0; c < cols; ++c) {
    if (colsum[c] > 1.0 + tol) {
      std::ostringstream msg;
      msg << "SparseTransitionData: column " << c << " sums to " << colsum[c];
      throw std::invalid_argument(msg.str());
    }
  }
}

Vector SparseTransitionData::dangling_weights() const {
  const Index cols = trailing_count(dim_, order_);
  Vector d = Vector::Ones(cols);
  for (const auto& e : entries_) d[e.column] -= e.value;
  return d;
}

Matrix SparseTransitionData::densify() const {
  const Index cols = trailing_count(dim_, order_);
  Matrix dense = Matrix::Zero(dim_, cols);
  for (const auto& e : entries_) dense(e.row, e.column) += e.value;
  const Vector d = dangling_weights();
  dense += fill_.vec() * d.transpose();
  return dense;
}

ProbabilityVector SparseTransitionData::dangling_apply(
    const ProbabilityVector& x) const {
  if (x.dim() != dim_) {
    throw std::invalid_argument("dangling_apply: dimension mismatch");
  }
  // z = S (x (x) ... (x) x); each stored entry contributes value * prod x.
  std::vector<CompensatedSum> acc(dim_);
  for (const auto& e : entries_) {
    double weight = e.value;
    Index code = e.column;
    for (int t = 0; t < order_ - 1; ++t) {
      weight *= x[code % dim_];
      code /= dim_;
    }
    acc[e.row].add(weight);
  }
  Vector z(dim_);
  CompensatedSum total;
  for (Index i = 0; i < dim_; ++i) {
    z[i] = acc[i].value();
    total.add(z[i]);
  }
  const double deficiency = 1.0 - total.value();
  return ProbabilityVector(z + deficiency * fill_.vec());
}

}  // namespace mlpr
