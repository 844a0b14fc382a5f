#include "mlpr/repository.hpp"
#include "mlpr/tensor.hpp"

#include <doctest.h>

#include <random>

using namespace mlpr;

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vector random_simplex(std::mt19937_64& rng, Index n) {
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = -std::log1p(-uniform01(rng));
  return x / x.sum();
}

Matrix random_flattening(std::mt19937_64& rng, Index n, int order) {
  Index cols = 1;
  for (int t = 1; t < order; ++t) cols *= n;
  Matrix r(n, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < n; ++i) r(i, j) = uniform01(rng) + 1e-3;
    r.col(j) /= r.col(j).sum();
  }
  return r;
}

}  // namespace

TEST_CASE("column codes follow the fastest-first layout") {
  // 1-based (j,k) = (2,1) is the second flattening column.
  const int jk21[] = {1, 0};
  CHECK(column_code(jk21, 3) == 1);
  const int jk11[] = {0, 0};
  CHECK(column_code(jk11, 3) == 0);

  // bijection over all n^(m-1) codes for n = 4, m = 3
  for (Index c = 0; c < 16; ++c) {
    const auto idx = column_decode(c, 4, 2);
    CHECK(column_code(idx, 4) == c);
  }

  const int bad[] = {4, 0};
  CHECK_THROWS_AS(column_code(bad, 4), std::out_of_range);
  CHECK_THROWS_AS(column_decode(16, 4, 2), std::out_of_range);
}

TEST_CASE("validate_stochastic accepts the walkthrough matrix") {
  const auto report = validate_stochastic(load_problem("R1").tensor.flattening());
  CHECK(report.ok);
  CHECK(report.dim == 3);
  CHECK(report.order == 3);
}

TEST_CASE("validate_stochastic flags a deficient column") {
  Matrix flat = Matrix::Zero(3, 9);
  for (Index j = 0; j < 9; ++j) flat(j % 3, j) = 1.0;
  flat(1, 4) = 0.0;
  flat(0, 4) = 0.9;
  const auto report = validate_stochastic(flat);
  REQUIRE(!report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].column == 4);
  CHECK(report.violations[0].column_sum == doctest::Approx(0.9));
}

TEST_CASE("validate_stochastic on the raw binary data") {
  // Binary precursor of the first bundled 3x3x3 problem: the unnormalized
  // columns sum to 3, 2 or 1, so exactly the sum-3 and sum-2 columns fail.
  Matrix binary(3, 9);
  binary << 1, 1, 1, 1, 0, 0, 0, 0, 0,
            1, 1, 1, 1, 0, 1, 1, 0, 1,
            1, 1, 1, 1, 1, 1, 0, 1, 0;
  const auto report = validate_stochastic(binary);
  REQUIRE(!report.ok);
  std::vector<Index> bad;
  for (const auto& violation : report.violations) bad.push_back(violation.column);
  CHECK(bad == std::vector<Index>{0, 1, 2, 3, 5});
}

TEST_CASE("validate_stochastic rejects impossible shapes") {
  CHECK_THROWS_AS(validate_stochastic(Matrix::Ones(3, 8)), std::invalid_argument);
}

TEST_CASE("apply reproduces the reference multilinear PageRank solution") {
  const auto tensor = example31_tensor();
  Vector x(3);
  x << 0.1934, 0.0761, 0.7305;
  const Vector image = 0.85 * tensor.apply_raw(x) +
                       0.15 * Vector::Constant(3, 1.0 / 3.0);
  CHECK((image - x).lpNorm<1>() <= 1e-4);
}

TEST_CASE("apply on a basis vector selects one flattening column") {
  const auto& tensor = load_problem("R4_5").tensor;
  const auto e2 = ProbabilityVector::basis(4, 2);
  const Vector image = tensor.apply(e2).vec();
  const int code[] = {2, 2};
  const Vector column = tensor.flattening().col(column_code(code, 4));
  CHECK((image - column).lpNorm<1>() <= 1e-15);
}

TEST_CASE("apply matches a brute-force triple loop") {
  const auto& tensor = load_problem("R4_5").tensor;
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Vector x = random_simplex(rng, 4);
    const Vector fast = tensor.apply_raw(x);
    for (Index i = 0; i < 4; ++i) {
      double slow = 0.0;
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          const int jk[] = {j, k};
          slow += tensor.entry(static_cast<int>(i), jk) * x[j] * x[k];
        }
      }
      CHECK(std::abs(fast[i] - slow) <= 1e-14);
    }
  }
}

TEST_CASE("apply preserves the simplex") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 4);
    const int m = 3 + static_cast<int>(rng() % 2);
    const TransitionTensor tensor(m, random_flattening(rng, n, m));
    const Vector image = tensor.apply_raw(random_simplex(rng, n));
    CHECK(image.minCoeff() >= 0.0);
    CHECK(std::abs(image.sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("Kronecker difference bound, two factors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 4);
    const Index p = 2 + static_cast<Index>(rng() % 4);
    const Vector a = random_simplex(rng, n), c = random_simplex(rng, n);
    const Vector b = random_simplex(rng, p), d = random_simplex(rng, p);
    const double lhs = (kron(a, b) - kron(c, d)).lpNorm<1>();
    CHECK(lhs <= (a - c).lpNorm<1>() + (b - d).lpNorm<1>() + 1e-12);
  }
}

TEST_CASE("Kronecker difference bound, many factors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const int factors = 3 + static_cast<int>(rng() % 2);
    Vector lhs_prod, rhs_prod;
    double bound = 0.0;
    for (int t = 0; t < factors; ++t) {
      const Index n = 2 + static_cast<Index>(rng() % 3);
      const Vector x = random_simplex(rng, n), y = random_simplex(rng, n);
      bound += (x - y).lpNorm<1>();
      lhs_prod = t == 0 ? x : kron(lhs_prod, x);
      rhs_prod = t == 0 ? y : kron(rhs_prod, y);
    }
    CHECK((lhs_prod - rhs_prod).lpNorm<1>() <= bound + 1e-12);
  }
}

TEST_CASE("Kronecker bound is nearly tight for small two-dimensional vectors") {
  const double x1 = 0.003, y1 = 0.002;  // x1 + y1 = 0.005
  Vector x(2), y(2);
  x << x1, 1 - x1;
  y << y1, 1 - y1;
  const double ratio =
      (kron(x, x) - kron(y, y)).lpNorm<1>() / (x - y).lpNorm<1>();
  CHECK(ratio > 1.99);
  CHECK(ratio <= 2.0);
}

namespace {

// Random sub-stochastic sparse data for the dangling tests.
SparseTransitionData random_sparse(std::mt19937_64& rng, Index n, int order) {
  Index cols = 1;
  for (int t = 1; t < order; ++t) cols *= n;
  std::vector<SparseEntry> entries;
  for (Index c = 0; c < cols; ++c) {
    if (rng() % 5 == 0) continue;  // leave some columns fully dangling
    Vector column = Vector::Zero(n);
    for (Index i = 0; i < n; ++i) {
      if (rng() % 2 == 0) column[i] = uniform01(rng);
    }
    const double total = column.sum();
    if (total <= 0.0) continue;
    const double scale = uniform01(rng) / total;  // column sum in [0, 1)
    for (Index i = 0; i < n; ++i) {
      if (column[i] > 0.0) entries.push_back({i, c, column[i] * scale});
    }
  }
  return SparseTransitionData(order, n, std::move(entries),
                              ProbabilityVector(random_simplex(rng, n)));
}

}  // namespace

TEST_CASE("dangling_apply returns the fill vector on a fully dangling column") {
  // One stored entry in column (0,0); the basis Kronecker of state 1 hits the
  // empty column (1,1) and must come back as u exactly.
  std::vector<SparseEntry> entries{{0, 0, 1.0}};
  Vector u(3);
  u << 0.2, 0.3, 0.5;
  const SparseTransitionData data(3, 3, entries, ProbabilityVector(u));
  const auto image = data.dangling_apply(ProbabilityVector::basis(3, 1));
  CHECK((image.vec() - u).lpNorm<1>() == 0.0);
}

TEST_CASE("dangling_apply equals the densified operator") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto data = random_sparse(rng, 4, 3);
    const TransitionTensor dense(3, data.densify());
    const ProbabilityVector x(random_simplex(rng, 4));
    const Vector direct = dense.apply(x).vec();
    const Vector sparse = data.dangling_apply(x).vec();
    CHECK((direct - sparse).lpNorm<Eigen::Infinity>() <= 1e-14);
  }
}

TEST_CASE("a stochastic sparse operator ignores the fill vector") {
  // Column-stochastic S: every column holds a full distribution.
  std::mt19937_64 rng(5);
  std::vector<SparseEntry> entries;
  const Matrix flat = random_flattening(rng, 3, 3);
  for (Index c = 0; c < 9; ++c) {
    for (Index i = 0; i < 3; ++i) entries.push_back({i, c, flat(i, c)});
  }
  const SparseTransitionData with_u1(3, 3, entries,
                                     ProbabilityVector::basis(3, 0));
  const SparseTransitionData with_u2(3, 3, entries,
                                     ProbabilityVector::uniform(3));
  CHECK(with_u1.dangling_weights().lpNorm<Eigen::Infinity>() <= 1e-12);
  const ProbabilityVector x(random_simplex(rng, 3));
  CHECK((with_u1.dangling_apply(x).vec() - with_u2.dangling_apply(x).vec())
            .lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("sparse data rejects overfull columns and negative values") {
  const ProbabilityVector u = ProbabilityVector::uniform(2);
  CHECK_THROWS_AS(SparseTransitionData(3, 2, {{0, 0, 0.8}, {1, 0, 0.5}}, u),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseTransitionData(3, 2, {{0, 0, -0.1}}, u),
                  std::invalid_argument);
}

TEST_CASE("probability vectors are validated") {
  Vector negative(2);
  negative << -0.1, 1.1;
  CHECK_THROWS_AS(ProbabilityVector{negative}, std::invalid_argument);
  Vector short_sum(2);
  short_sum << 0.4, 0.4;
  CHECK_THROWS_AS(ProbabilityVector{short_sum}, std::invalid_argument);
  CHECK(ProbabilityVector::uniform(4).dim() == 4);
}

TEST_CASE("transition tensors are validated") {
  Matrix not_stochastic = Matrix::Ones(3, 9);
  CHECK_THROWS_AS(TransitionTensor(3, not_stochastic), std::invalid_argument);
  CHECK_THROWS_AS(TransitionTensor(3, Matrix::Ones(3, 3) / 3.0),
                  std::invalid_argument);  // columns must be n^(m-1)
  const auto tensor = example31_tensor();
  Vector wrong_size = Vector::Zero(4);
  CHECK_THROWS_AS(tensor.apply_raw(wrong_size), std::invalid_argument);
}
