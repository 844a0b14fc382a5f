#pragma once

#include "mlpr/oracle.hpp"
#include "mlpr/solvers.hpp"
#include "mlpr/surfer.hpp"
#include "mlpr/uniqueness.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlpr {

// ---------------------------------------------------------------------------
// Method dispatch
// ---------------------------------------------------------------------------

enum class Method { Fixed, Shifted, InnerOuter, Inverse, Newton, NewtonPure };

/// CLI spelling: fixed, shifted, innerouter, inverse, newton, newton-pure.
std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Iteration budgets of the benchmark defaults: 10,000 for the fixed-point
/// and shifted iterations, 1,000 for the rest.
Index default_max_iter(Method method);

SolverOutcome solve_with_method(const TransitionTensor& tensor, Method method,
                                const SolverOptions& options);

/// The 29 bundled adversarial problems (R1 and R2 duplicate two of them and
/// are excluded so reliability counts stay honest).
const std::vector<std::string>& benchmark_problem_names();

// ---------------------------------------------------------------------------
// Reliability tables
// ---------------------------------------------------------------------------

/// Per-alpha table block: one count row per problem size plus the totals row.
struct TableGroupRow {
  Index dim = 0;
  std::vector<int> counts;  ///< one entry per column (gamma or method)
};

struct TableBlock {
  double alpha = 0.0;
  int budget_factor = 1;
  std::vector<TableGroupRow> groups;
  std::vector<int> totals;
};

struct ShiftTableConfig {
  std::vector<double> alphas{0.70, 0.85, 0.90, 0.95, 0.99};
  std::vector<double> gammas{0.0, 0.25, 0.5, 0.75, 1.0, 2.0, 10.0};
  double tol = 1e-8;
  Index max_iter = 10000;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct ShiftTableResult {
  ShiftTableConfig config;
  std::vector<TableBlock> blocks;  ///< one per alpha; columns follow gammas
};

/// How many problems the shifted iteration solves (residual below tol within
/// the budget) per alpha and shift, with v = e/n.  Cells that raise are
/// counted as failures, never propagated.
ShiftTableResult run_table_shift(const ShiftTableConfig& config);

struct MethodsTableConfig {
  std::vector<double> alphas{0.70, 0.85, 0.90, 0.95, 0.99};
  double gamma = 1.0;  ///< shift used by the S column
  double tol = 1e-8;
  int extra_factor = 10;
  bool run_extra = true;
  unsigned threads = 0;
};

struct MethodsTableResult {
  MethodsTableConfig config;
  /// Blocks ordered alpha-major, default budget before the extra budget.
  /// Columns follow methods_order().
  std::vector<TableBlock> blocks;
};

/// The five benchmark columns F, S, IO, Inv, N.
const std::vector<Method>& methods_order();

MethodsTableResult run_table_methods(const MethodsTableConfig& config);

// ---------------------------------------------------------------------------
// Shift sweep for one problem
// ---------------------------------------------------------------------------

struct ShiftSweepConfig {
  double alpha = 0.99;
  std::vector<double> gammas;
  double tol = 1e-8;
  Index max_iter = 10000;
};

struct ShiftSweepEntry {
  double gamma = 0.0;
  SolverOutcome outcome;
};

struct ShiftSweepResult {
  ShiftSweepConfig config;
  std::vector<ShiftSweepEntry> entries;
};

ShiftSweepResult run_sweep_shift(const TransitionTensor& tensor,
                                 const ProbabilityVector& v,
                                 const ShiftSweepConfig& config);

// ---------------------------------------------------------------------------
// CSV output
//
// Every writer starts with '# key=value' metadata lines (configuration only,
// never timestamps) so identical runs produce identical bytes.
// ---------------------------------------------------------------------------

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal form that round-trips a double (%.17g).
std::string format_double(double value);

void write_trace_csv(std::ostream& out, const SolverOutcome& outcome,
                     const Metadata& metadata);
void write_sweep_csv(std::ostream& out, const ShiftSweepResult& result,
                     const Metadata& metadata);
void write_table_shift_csv(std::ostream& out, const ShiftTableResult& result,
                           const Metadata& metadata);
void write_table_methods_csv(std::ostream& out,
                             const MethodsTableResult& result,
                             const Metadata& metadata);
void write_simulation_csv(std::ostream& out, const SimulationResult& result,
                          const Metadata& metadata);
void write_oracle_csv(std::ostream& out, const SolutionSet& set,
                      std::string_view problem, double alpha,
                      const Metadata& metadata);
void write_beta_csv(std::ostream& out, const UniquenessReport& report,
                    const Metadata& metadata);

}  // namespace mlpr
