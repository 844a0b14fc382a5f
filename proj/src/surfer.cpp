#include "mlpr/surfer.hpp"

#include <stdexcept>

namespace mlpr {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Cumulative scan over an arbitrary nonnegative weight accessor; falls back
// to the last positively weighted index when u lands past the total mass.
template <typename Weight>
Index sample_categorical(std::mt19937_64& rng, Index n, double total,
                         Weight weight) {
  const double u = uniform01(rng) * total;
  double cumulative = 0.0;
  Index last_positive = -1;
  for (Index i = 0; i < n; ++i) {
    const double w = weight(i);
    if (w > 0.0) last_positive = i;
    cumulative += w;
    if (u < cumulative) return i;
  }
  if (last_positive < 0) {
    throw std::runtime_error("surfer: sampling from an all-zero distribution");
  }
  return last_positive;
}

}  // namespace

SurferState start_surfer(const ProbabilityVector& v, std::uint64_t seed) {
  SurferState state;
  state.counts.assign(v.dim(), 1);
  state.rng.seed(seed);
  state.current =
      sample_categorical(state.rng, v.dim(), 1.0, [&](Index i) { return v[i]; });
  state.counts[state.current] += 1;
  state.steps = 1;
  return state;
}

ProbabilityVector history_distribution(const SurferState& state) {
  const Index n = static_cast<Index>(state.counts.size());
  const double total = static_cast<double>(state.steps + n);
  Vector law(n);
  for (Index i = 0; i < n; ++i) {
    law[i] = static_cast<double>(state.counts[i]) / total;
  }
  return ProbabilityVector(std::move(law));
}

void step(const TransitionTensor& tensor, double alpha,
          const ProbabilityVector& v, SurferState& state) {
  const Index n = tensor.dim();
  if (static_cast<Index>(state.counts.size()) != n || v.dim() != n) {
    throw std::invalid_argument("step: dimension mismatch");
  }
  if (state.current < 0 || state.current >= n) {
    throw std::invalid_argument("step: walker has no valid current state");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("step: alpha must lie in [0, 1]");
  }

  // Remembered states, drawn by exact integer-count comparison.
  const double total = static_cast<double>(state.steps + n);
  std::vector<int> trailing(tensor.order() - 1);
  trailing[0] = static_cast<int>(state.current);
  for (int t = 1; t < tensor.order() - 1; ++t) {
    trailing[t] = static_cast<int>(sample_categorical(
        state.rng, n, total,
        [&](Index i) { return static_cast<double>(state.counts[i]); }));
  }
  const Index column = column_code(trailing, n);

  Index next;
  if (uniform01(state.rng) < alpha) {
    next = sample_categorical(state.rng, n, 1.0, [&](Index i) {
      return tensor.flattening()(i, column);
    });
  } else {
    next = sample_categorical(state.rng, n, 1.0, [&](Index i) { return v[i]; });
  }

  state.counts[next] += 1;
  state.steps += 1;
  state.current = next;
}

SimulationResult simulate(const TransitionTensor& tensor, double alpha,
                          const ProbabilityVector& v, std::int64_t steps,
                          std::uint64_t seed) {
  if (steps < 1) throw std::invalid_argument("simulate: steps must be >= 1");
  SurferState state = start_surfer(v, seed);
  for (std::int64_t t = 1; t < steps; ++t) {
    step(tensor, alpha, v, state);
  }
  return SimulationResult{history_distribution(state), state.steps, seed};
}

}  // namespace mlpr
