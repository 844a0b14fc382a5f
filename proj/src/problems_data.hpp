#pragma once

#include <span>

namespace mlpr::detail {

// Raw binary matrix backing one bundled test problem; rows holds the 0/1
// flattening row by row, whitespace separated.  Normalization to a stochastic
// tensor happens at load so no transcribed decimals can drift.
struct RawProblem {
  const char* name;
  int dim;
  const char* provenance;
  const char* rows;
};

std::span<const RawProblem> appendix_problems();

}  // namespace mlpr::detail
