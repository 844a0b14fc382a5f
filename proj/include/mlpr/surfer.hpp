#pragma once

#include "mlpr/tensor.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace mlpr {

/// Name of the generator driving every simulation, recorded in output
/// metadata.  Uniform doubles are produced as (rng() >> 11) * 2^-53 and all
/// categorical draws scan the cumulative distribution, so a seed pins the
/// trajectory bit for bit.
inline constexpr std::string_view kSurferGenerator = "std::mt19937_64";

/// Walker state: the current vertex, occupation counts w (one pseudo-count
/// per state plus one count per visited state, so sum w = steps + n), and the
/// number of states sampled so far.
struct SurferState {
  Index current = -1;
  std::vector<std::int64_t> counts;
  std::int64_t steps = 0;
  std::mt19937_64 rng;
};

/// Fresh walker with counts all one and the first state sampled from v.
SurferState start_surfer(const ProbabilityVector& v, std::uint64_t seed);

/// The law of the remembered state: w / (steps + n).
ProbabilityVector history_distribution(const SurferState& state);

/// One transition: draw m-2 remembered states from the history distribution,
/// then move to the next state with law alpha P(., current, history...) +
/// (1-alpha) v.  The new state's count is incremented.  alpha = 1 is allowed
/// (no teleportation).
void step(const TransitionTensor& tensor, double alpha,
          const ProbabilityVector& v, SurferState& state);

struct SimulationResult {
  ProbabilityVector frequency;  ///< w / (steps + n) at termination
  std::int64_t steps = 0;
  std::uint64_t seed = 0;
};

/// Run a trajectory of `steps` sampled states (the initial draw from v
/// included).  The reported frequency keeps the unit pseudo-counts, matching
/// the process definition; it differs from the raw empirical frequency by
/// O(n / steps).
SimulationResult simulate(const TransitionTensor& tensor, double alpha,
                          const ProbabilityVector& v, std::int64_t steps,
                          std::uint64_t seed);

}  // namespace mlpr
