#pragma once

#include "mlpr/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mlpr {

/// One bundled test tensor with its construction notes.
struct ProblemRecord {
  std::string name;
  TransitionTensor tensor;
  std::string provenance;
};

/// Divide every column of a nonnegative matrix by its sum.  A column with no
/// positive entry cannot be normalized; the error names its column code.
Matrix normalize_binary(const Matrix& raw);

/// The 31 bundled problems: R1, R2 (worked examples from the algorithm
/// walkthroughs) plus R3_1..R3_5, R4_1..R4_19 and R6_1..R6_5 (the adversarial
/// set).  R1 and R2 equal the normalized R3_1 and R4_11 entrywise.
const ProblemRecord& load_problem(std::string_view name);

/// All repository names in canonical order.
const std::vector<std::string>& problem_names();

/// True when `name` is a repository problem.
bool has_problem(std::string_view name);

// ---------------------------------------------------------------------------
// Worked-example tensors that live outside the 31-record repository
// ---------------------------------------------------------------------------

/// The 3-state walkthrough tensor whose higher-order and multilinear
/// PageRank vectors are known at alpha = 0.85, v = e/3.
TransitionTensor example31_tensor();

/// The 3-state tensor that has two multilinear PageRank solutions at
/// alpha = 0.99 with teleportation [0, 1, 0].
TransitionTensor nonunique_example_tensor();
ProbabilityVector nonunique_example_teleport();

/// Resolve any repository name plus the special names "example31" and
/// "nonunique" to a tensor.  Throws std::out_of_range for unknown names.
TransitionTensor named_tensor(std::string_view name);

// ---------------------------------------------------------------------------
// mlpr-tensor v1 text format
//
//   mlpr-tensor v1
//   order <m>
//   dim <n>
//   <n rows of n^(m-1) decimal values, flattening columns in code order>
//
// Values round-trip through 17 significant decimal digits.
// ---------------------------------------------------------------------------

TransitionTensor parse_tensor(std::string_view text);
std::string serialize_tensor(const TransitionTensor& tensor);

}  // namespace mlpr
