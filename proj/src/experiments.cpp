#include "mlpr/experiments.hpp"

#include "mlpr/repository.hpp"

#include <atomic>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mlpr {

namespace {

// Run work(i) for i in [0, count) on a small pool; results must be written
// into per-index slots so the merge order stays deterministic.
template <typename Work>
void parallel_cells(size_t count, unsigned threads, Work&& work) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = std::min<size_t>(threads, count);
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        work(i);
      }
    });
  }
  for (auto& worker : pool) worker.join();
}

struct BenchmarkProblems {
  std::vector<std::string> names;
  std::vector<TransitionTensor> tensors;
  std::vector<Index> dims;
};

const BenchmarkProblems& benchmark_problems() {
  static const BenchmarkProblems instance = [] {
    BenchmarkProblems set;
    for (const auto& name : problem_names()) {
      if (name == "R1" || name == "R2") continue;  // duplicates of R3_1, R4_11
      const auto& record = load_problem(name);
      set.names.push_back(name);
      set.tensors.push_back(record.tensor);
      set.dims.push_back(record.tensor.dim());
    }
    return set;
  }();
  return instance;
}

// Group a flat solved-bitmap into per-size rows plus totals.
std::vector<TableGroupRow> group_counts(const std::vector<Index>& dims,
                                        const std::vector<char>& solved,
                                        size_t columns, size_t column_stride,
                                        size_t base) {
  std::map<Index, TableGroupRow> rows;
  for (size_t p = 0; p < dims.size(); ++p) {
    auto& row = rows[dims[p]];
    if (row.counts.empty()) {
      row.dim = dims[p];
      row.counts.assign(columns, 0);
    }
    for (size_t c = 0; c < columns; ++c) {
      row.counts[c] += solved[base + p * column_stride + c] ? 1 : 0;
    }
  }
  std::vector<TableGroupRow> ordered;
  for (auto& [dim, row] : rows) ordered.push_back(std::move(row));
  return ordered;
}

std::vector<int> total_counts(const std::vector<TableGroupRow>& groups) {
  std::vector<int> totals(groups.empty() ? 0 : groups.front().counts.size(), 0);
  for (const auto& row : groups) {
    for (size_t c = 0; c < totals.size(); ++c) totals[c] += row.counts[c];
  }
  return totals;
}

void write_metadata(std::ostream& out, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << "=" << value << "\n";
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Fixed: return "fixed";
    case Method::Shifted: return "shifted";
    case Method::InnerOuter: return "innerouter";
    case Method::Inverse: return "inverse";
    case Method::Newton: return "newton";
    case Method::NewtonPure: return "newton-pure";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method method :
       {Method::Fixed, Method::Shifted, Method::InnerOuter, Method::Inverse,
        Method::Newton, Method::NewtonPure}) {
    if (name == method_name(method)) return method;
  }
  return std::nullopt;
}

Index default_max_iter(Method method) {
  switch (method) {
    case Method::Fixed:
    case Method::Shifted: return 10000;
    default: return 1000;
  }
}

SolverOutcome solve_with_method(const TransitionTensor& tensor, Method method,
                                const SolverOptions& options) {
  switch (method) {
    case Method::Fixed: return solve_fixed_point(tensor, options);
    case Method::Shifted: return solve_shifted(tensor, options);
    case Method::InnerOuter: return solve_inner_outer(tensor, options);
    case Method::Inverse: return solve_inverse(tensor, options);
    case Method::Newton: return solve_newton_projected(tensor, options);
    case Method::NewtonPure: return solve_newton_pure(tensor, options);
  }
  throw std::logic_error("solve_with_method: unknown method");
}

const std::vector<std::string>& benchmark_problem_names() {
  return benchmark_problems().names;
}

const std::vector<Method>& methods_order() {
  static const std::vector<Method> order{Method::Fixed, Method::Shifted,
                                         Method::InnerOuter, Method::Inverse,
                                         Method::Newton};
  return order;
}

ShiftTableResult run_table_shift(const ShiftTableConfig& config) {
  const auto& problems = benchmark_problems();
  const size_t n_alpha = config.alphas.size();
  const size_t n_gamma = config.gammas.size();
  const size_t cells = n_alpha * problems.tensors.size() * n_gamma;

  std::vector<char> solved(cells, 0);
  parallel_cells(cells, config.threads, [&](size_t cell) {
    const size_t gi = cell % n_gamma;
    const size_t pi = (cell / n_gamma) % problems.tensors.size();
    const size_t ai = cell / (n_gamma * problems.tensors.size());
    const TransitionTensor& tensor = problems.tensors[pi];
    SolverOptions options(config.alphas[ai],
                          ProbabilityVector::uniform(tensor.dim()));
    options.gamma = config.gammas[gi];
    options.tol = config.tol;
    options.max_iter = config.max_iter;
    try {
      solved[cell] = solve_shifted(tensor, options).converged ? 1 : 0;
    } catch (const std::exception&) {
      solved[cell] = 0;
    }
  });

  ShiftTableResult result;
  result.config = config;
  for (size_t ai = 0; ai < n_alpha; ++ai) {
    TableBlock block;
    block.alpha = config.alphas[ai];
    block.groups =
        group_counts(problems.dims, solved, n_gamma, n_gamma,
                     ai * problems.tensors.size() * n_gamma);
    block.totals = total_counts(block.groups);
    result.blocks.push_back(std::move(block));
  }
  return result;
}

MethodsTableResult run_table_methods(const MethodsTableConfig& config) {
  const auto& problems = benchmark_problems();
  const auto& methods = methods_order();
  std::vector<int> factors{1};
  if (config.run_extra) factors.push_back(config.extra_factor);

  const size_t n_alpha = config.alphas.size();
  const size_t n_method = methods.size();
  const size_t per_budget = n_alpha * problems.tensors.size() * n_method;
  const size_t cells = per_budget * factors.size();

  std::vector<char> solved(cells, 0);
  parallel_cells(cells, config.threads, [&](size_t cell) {
    const size_t mi = cell % n_method;
    const size_t pi = (cell / n_method) % problems.tensors.size();
    const size_t ai = (cell / (n_method * problems.tensors.size())) % n_alpha;
    const size_t fi = cell / per_budget;
    const Method method = methods[mi];
    const TransitionTensor& tensor = problems.tensors[pi];
    SolverOptions options(config.alphas[ai],
                          ProbabilityVector::uniform(tensor.dim()));
    options.gamma = config.gamma;
    options.tol = config.tol;
    options.max_iter = default_max_iter(method) * factors[fi];
    try {
      solved[cell] = solve_with_method(tensor, method, options).converged ? 1 : 0;
    } catch (const std::exception&) {
      solved[cell] = 0;
    }
  });

  MethodsTableResult result;
  result.config = config;
  for (size_t ai = 0; ai < n_alpha; ++ai) {
    for (size_t fi = 0; fi < factors.size(); ++fi) {
      TableBlock block;
      block.alpha = config.alphas[ai];
      block.budget_factor = factors[fi];
      block.groups = group_counts(
          problems.dims, solved, n_method, n_method,
          fi * per_budget + ai * problems.tensors.size() * n_method);
      block.totals = total_counts(block.groups);
      result.blocks.push_back(std::move(block));
    }
  }
  return result;
}

ShiftSweepResult run_sweep_shift(const TransitionTensor& tensor,
                                 const ProbabilityVector& v,
                                 const ShiftSweepConfig& config) {
  ShiftSweepResult result;
  result.config = config;
  for (const double gamma : config.gammas) {
    SolverOptions options(config.alpha, v);
    options.gamma = gamma;
    options.tol = config.tol;
    options.max_iter = config.max_iter;
    result.entries.push_back({gamma, solve_shifted(tensor, options)});
  }
  return result;
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_trace_csv(std::ostream& out, const SolverOutcome& outcome,
                     const Metadata& metadata) {
  write_metadata(out, metadata);
  const Index n =
      outcome.iterate_history.empty() ? 0 : outcome.iterate_history[0].size();
  out << "iter,residual";
  for (Index i = 1; i <= n; ++i) out << ",x" << i;
  out << "\n";
  for (size_t k = 0; k < outcome.residual_history.size(); ++k) {
    out << k << "," << format_double(outcome.residual_history[k]);
    if (k < outcome.iterate_history.size()) {
      for (Index i = 0; i < n; ++i) {
        out << "," << format_double(outcome.iterate_history[k][i]);
      }
    }
    out << "\n";
  }
}

void write_sweep_csv(std::ostream& out, const ShiftSweepResult& result,
                     const Metadata& metadata) {
  write_metadata(out, metadata);
  out << "gamma,iter,residual\n";
  for (const auto& entry : result.entries) {
    for (size_t k = 0; k < entry.outcome.residual_history.size(); ++k) {
      out << format_double(entry.gamma) << "," << k << ","
          << format_double(entry.outcome.residual_history[k]) << "\n";
    }
  }
}

namespace {

void write_count_blocks(std::ostream& out, const std::vector<TableBlock>& blocks,
                        const std::vector<std::string>& columns,
                        bool with_budget) {
  out << "alpha,group";
  if (with_budget) out << ",budget";
  for (const auto& c : columns) out << "," << c;
  out << "\n";
  for (const auto& block : blocks) {
    auto row_prefix = [&](const std::string& group) {
      out << format_double(block.alpha) << "," << group;
      if (with_budget) out << "," << block.budget_factor << "x";
    };
    for (const auto& row : block.groups) {
      row_prefix("n" + std::to_string(row.dim));
      for (int c : row.counts) out << "," << c;
      out << "\n";
    }
    row_prefix("total");
    for (int c : block.totals) out << "," << c;
    out << "\n";
  }
}

}  // namespace

void write_table_shift_csv(std::ostream& out, const ShiftTableResult& result,
                           const Metadata& metadata) {
  write_metadata(out, metadata);
  std::vector<std::string> columns;
  for (double gamma : result.config.gammas) {
    columns.push_back("gamma" + format_double(gamma));
  }
  write_count_blocks(out, result.blocks, columns, false);
}

void write_table_methods_csv(std::ostream& out,
                             const MethodsTableResult& result,
                             const Metadata& metadata) {
  write_metadata(out, metadata);
  write_count_blocks(out, result.blocks, {"F", "S", "IO", "Inv", "N"}, true);
}

void write_simulation_csv(std::ostream& out, const SimulationResult& result,
                          const Metadata& metadata) {
  write_metadata(out, metadata);
  out << "seed,steps";
  for (Index i = 1; i <= result.frequency.dim(); ++i) out << ",x" << i;
  out << "\n" << result.seed << "," << result.steps;
  for (Index i = 0; i < result.frequency.dim(); ++i) {
    out << "," << format_double(result.frequency[i]);
  }
  out << "\n";
}

void write_oracle_csv(std::ostream& out, const SolutionSet& set,
                      std::string_view problem, double alpha,
                      const Metadata& metadata) {
  write_metadata(out, metadata);
  const Index n = set.solutions.empty() ? 0 : set.solutions[0].size();
  out << "problem,alpha,residual";
  for (Index i = 1; i <= n; ++i) out << ",x" << i;
  out << "\n";
  for (size_t s = 0; s < set.solutions.size(); ++s) {
    out << problem << "," << format_double(alpha) << ","
        << format_double(set.residuals[s]);
    for (Index i = 0; i < n; ++i) {
      out << "," << format_double(set.solutions[s][i]);
    }
    out << "\n";
  }
}

void write_beta_csv(std::ostream& out, const UniquenessReport& report,
                    const Metadata& metadata) {
  write_metadata(out, metadata);
  out << "alpha,unique_regime,beta,beta1,beta2,witness_subset,beta_certifies,"
         "teleport_has_zero\n";
  out << format_double(report.alpha) << ","
      << (report.alpha_in_unique_regime ? 1 : 0) << ","
      << format_double(report.beta_modified.beta) << ","
      << format_double(report.beta_modified.beta1) << ","
      << format_double(report.beta_modified.beta2) << ","
      << report.beta_modified.witness_subset << ","
      << (report.beta_certifies_unique ? 1 : 0) << ","
      << (report.teleport_has_zero ? 1 : 0) << "\n";
}

}  // namespace mlpr
