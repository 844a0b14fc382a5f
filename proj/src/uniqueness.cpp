#include "mlpr/uniqueness.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mlpr {

namespace {

// beta1(S) + beta2(S) from per-subset restricted column sums.  Both
// components are invariant under complementing S, since the two inner terms
// simply swap.  in_s[j*n+k] = sum_{i in S} P_ijk; total is the sum over all i.
double subset_value(const std::vector<double>& in_s,
                    const std::vector<double>& total, std::uint32_t mask,
                    Index n, double& beta1, double& beta2) {
  const double inf = std::numeric_limits<double>::infinity();

  beta1 = inf;
  for (Index k = 0; k < n; ++k) {
    double from_s = inf, from_sc = inf;
    for (Index j = 0; j < n; ++j) {
      const double s_sum = in_s[j * n + k];
      const double sc_sum = total[j * n + k] - s_sum;
      if (mask & (1u << j)) {
        from_s = std::min(from_s, sc_sum);  // j in S, mass landing outside S
      } else {
        from_sc = std::min(from_sc, s_sum);  // j outside S, mass landing in S
      }
    }
    beta1 = std::min(beta1, from_s + from_sc);
  }

  beta2 = inf;  // same with the j and k roles exchanged
  for (Index j = 0; j < n; ++j) {
    double from_s = inf, from_sc = inf;
    for (Index k = 0; k < n; ++k) {
      const double s_sum = in_s[j * n + k];
      const double sc_sum = total[j * n + k] - s_sum;
      if (mask & (1u << k)) {
        from_s = std::min(from_s, sc_sum);
      } else {
        from_sc = std::min(from_sc, s_sum);
      }
    }
    beta2 = std::min(beta2, from_s + from_sc);
  }
  return beta1 + beta2;
}

}  // namespace

bool unique_regime(double alpha, int order) {
  if (order < 3) throw std::invalid_argument("unique_regime: order must be >= 3");
  return alpha < 1.0 / static_cast<double>(order - 1);
}

BetaResult li_ng_beta(const Matrix& flattening) {
  const Index n = flattening.rows();
  if (flattening.cols() != n * n) {
    throw std::invalid_argument("li_ng_beta: expected an n x n^2 flattening");
  }
  if (n < 2) throw std::invalid_argument("li_ng_beta: need at least two states");
  if (n > 20) {
    throw std::invalid_argument("li_ng_beta: subset enumeration capped at n = 20");
  }
  if ((flattening.array() < 0.0).any()) {
    throw std::invalid_argument("li_ng_beta: negative entries");
  }

  // Column code of (j, k) is k*n + j; cache sums indexed by j*n + k.
  std::vector<double> total(n * n), in_s(n * n, 0.0);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      total[j * n + k] = flattening.col(k * n + j).sum();
    }
  }

  // beta(S) = beta(Sc), so it suffices to visit the subsets that exclude the
  // top state: exactly the first half of the binary-reflected Gray sequence.
  // Gray steps flip one element, which keeps the running sums cheap.
  const std::uint32_t full = (1u << n) - 1u;
  std::uint32_t mask = 0;
  BetaResult best;
  best.beta = std::numeric_limits<double>::infinity();
  std::uint32_t best_code = full;

  const std::uint32_t half = 1u << (n - 1);
  for (std::uint32_t i = 1; i < half; ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    const std::uint32_t flipped = gray ^ mask;
    const int r = std::countr_zero(flipped);
    const double sign = (gray & flipped) ? 1.0 : -1.0;
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        in_s[j * n + k] += sign * flattening(r, k * n + j);
      }
    }
    mask = gray;

    double beta1 = 0.0, beta2 = 0.0;
    const double value = subset_value(in_s, total, mask, n, beta1, beta2);
    const std::uint32_t code = std::min(mask, full ^ mask);
    if (value < best.beta || (value == best.beta && code < best_code)) {
      best.beta = value;
      best.beta1 = beta1;
      best.beta2 = beta2;
      best_code = code;
    }
  }
  best.witness_subset = best_code;
  return best;
}

BetaResult li_ng_beta(const TransitionTensor& tensor) {
  if (tensor.order() != 3) {
    throw std::invalid_argument("li_ng_beta: defined for third-order tensors only");
  }
  return li_ng_beta(tensor.flattening());
}

UniquenessReport uniqueness_report(const TransitionTensor& tensor, double alpha,
                                   const ProbabilityVector& v) {
  if (tensor.order() != 3) {
    throw std::invalid_argument("uniqueness_report: third-order tensors only");
  }
  if (v.dim() != tensor.dim()) {
    throw std::invalid_argument("uniqueness_report: teleportation dimension mismatch");
  }
  UniquenessReport report;
  report.alpha = alpha;
  report.alpha_in_unique_regime = unique_regime(alpha, tensor.order());

  const Matrix modified =
      alpha * tensor.flattening() +
      (1.0 - alpha) * v.vec() *
          Eigen::RowVectorXd::Ones(tensor.flattening().cols());
  report.beta_modified = li_ng_beta(modified);
  report.beta_certifies_unique = report.beta_modified.beta > 1.0;
  report.teleport_has_zero = (v.vec().array() == 0.0).any();

  // Additivity gives beta(Pbar) = alpha beta(P) + 2(1-alpha) >= 2(1-alpha),
  // so alpha < 1/2 must imply the certificate.
  if (alpha < 0.5 && !report.beta_certifies_unique) {
    throw std::logic_error("uniqueness_report: beta additivity violated");
  }
  return report;
}

}  // namespace mlpr
