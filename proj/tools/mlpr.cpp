// Command-line harness for the multilinear PageRank library: single solves
// with trace output, the reliability tables, shift sweeps, the spacey-surfer
// simulator, the beta diagnostic, the solution oracle, and problem export.
//
// Exit codes: 0 success/converged, 2 solver did not converge, 1 usage or
// I/O error.

#include "mlpr/experiments.hpp"
#include "mlpr/higher_order.hpp"
#include "mlpr/repository.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mlpr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct CommonArgs {
  std::string problem;
  std::string tensor_file;
  std::string v_file;
  std::string out = "-";
};

TransitionTensor resolve_tensor(const CommonArgs& args) {
  if (!args.tensor_file.empty()) {
    std::ifstream in(args.tensor_file);
    if (!in) {
      throw std::runtime_error("cannot open tensor file '" + args.tensor_file +
                               "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_tensor(text.str());
  }
  if (args.problem.empty()) {
    throw std::runtime_error("either --problem or --tensor-file is required");
  }
  return named_tensor(args.problem);
}

ProbabilityVector resolve_teleport(const CommonArgs& args, Index n) {
  if (args.v_file.empty()) {
    if (args.problem == "nonunique") return nonunique_example_teleport();
    return ProbabilityVector::uniform(n);
  }
  std::ifstream in(args.v_file);
  if (!in) {
    throw std::runtime_error("cannot open v file '" + args.v_file + "'");
  }
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    if (!(in >> v[i])) {
      throw std::runtime_error("v file must hold " + std::to_string(n) +
                               " values");
    }
  }
  return ProbabilityVector(std::move(v));
}

// Writes through a file or stdout, chosen by the --out flag.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string source_label(const CommonArgs& args) {
  return args.tensor_file.empty() ? args.problem : args.tensor_file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilinear PageRank solvers and experiments"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // --- solve ---------------------------------------------------------------
  CommonArgs solve_args;
  std::string solve_method = "fixed";
  double solve_alpha = 0.85, solve_gamma = 1.0, solve_tol = 1e-8;
  Index solve_max_iter = 0;
  int solve_extra = 1;
  auto* solve_cmd = app.add_subcommand("solve", "run one solver, write a trace");
  solve_cmd->add_option("--problem", solve_args.problem, "bundled problem name");
  solve_cmd->add_option("--tensor-file", solve_args.tensor_file, "mlpr-tensor v1 file");
  solve_cmd->add_option("--method", solve_method,
                        "fixed|shifted|innerouter|inverse|newton|newton-pure");
  solve_cmd->add_option("--alpha", solve_alpha, "teleportation strength")->required();
  solve_cmd->add_option("--gamma", solve_gamma, "shift (shifted method)");
  solve_cmd->add_option("--tol", solve_tol, "residual tolerance");
  solve_cmd->add_option("--max-iter", solve_max_iter, "0 = method default");
  solve_cmd->add_option("--extra", solve_extra, "iteration budget multiplier");
  solve_cmd->add_option("--v-file", solve_args.v_file, "teleportation vector file");
  solve_cmd->add_option("--out", solve_args.out, "output CSV path, - for stdout");
  solve_cmd->callback([&]() {
    const auto method = parse_method(solve_method);
    if (!method) throw CLI::ValidationError("--method", "unknown method");
    const TransitionTensor tensor = resolve_tensor(solve_args);
    SolverOptions options(solve_alpha, resolve_teleport(solve_args, tensor.dim()));
    options.gamma = solve_gamma;
    options.tol = solve_tol;
    options.max_iter =
        (solve_max_iter > 0 ? solve_max_iter : default_max_iter(*method)) *
        solve_extra;
    options.record_iterates = true;
    const SolverOutcome outcome = solve_with_method(tensor, *method, options);

    Output out(solve_args.out);
    write_trace_csv(out.stream(), outcome,
                    {{"command", "solve"},
                     {"problem", source_label(solve_args)},
                     {"method", std::string(method_name(*method))},
                     {"alpha", format_double(solve_alpha)},
                     {"gamma", format_double(solve_gamma)},
                     {"tol", format_double(solve_tol)},
                     {"max_iter", std::to_string(options.max_iter)},
                     {"converged", outcome.converged ? "1" : "0"},
                     {"iterations", std::to_string(outcome.iterations)}});
    std::cerr << (outcome.converged ? "converged" : "did not converge")
              << " after " << outcome.iterations << " iterations, residual "
              << format_double(outcome.residual_history.back()) << "\n";
    if (!outcome.converged) exit_code = kExitNotConverged;
  });

  // --- table-shift -----------------------------------------------------------
  ShiftTableConfig shift_config;
  std::string shift_out = "-";
  auto* shift_cmd =
      app.add_subcommand("table-shift", "shifted-iteration reliability counts");
  shift_cmd->add_option("--alphas", shift_config.alphas, "alpha grid");
  shift_cmd->add_option("--gammas", shift_config.gammas, "shift grid");
  shift_cmd->add_option("--tol", shift_config.tol, "residual tolerance");
  shift_cmd->add_option("--max-iter", shift_config.max_iter, "iteration budget");
  shift_cmd->add_option("--threads", shift_config.threads, "0 = all cores");
  shift_cmd->add_option("--out", shift_out, "output CSV path");
  shift_cmd->callback([&]() {
    const ShiftTableResult result = run_table_shift(shift_config);
    Output out(shift_out);
    write_table_shift_csv(out.stream(), result,
                          {{"command", "table-shift"},
                           {"tol", format_double(shift_config.tol)},
                           {"max_iter", std::to_string(shift_config.max_iter)},
                           {"v", "uniform"}});
  });

  // --- table-methods ---------------------------------------------------------
  MethodsTableConfig methods_config;
  std::string methods_out = "-";
  bool methods_no_extra = false;
  auto* methods_cmd =
      app.add_subcommand("table-methods", "per-method reliability counts");
  methods_cmd->add_option("--alphas", methods_config.alphas, "alpha grid");
  methods_cmd->add_option("--gamma", methods_config.gamma, "shift for the S column");
  methods_cmd->add_option("--tol", methods_config.tol, "residual tolerance");
  methods_cmd->add_option("--extra-factor", methods_config.extra_factor,
                          "budget multiplier of the second block");
  methods_cmd->add_flag("--no-extra", methods_no_extra, "skip the extra block");
  methods_cmd->add_option("--threads", methods_config.threads, "0 = all cores");
  methods_cmd->add_option("--out", methods_out, "output CSV path");
  methods_cmd->callback([&]() {
    methods_config.run_extra = !methods_no_extra;
    const MethodsTableResult result = run_table_methods(methods_config);
    Output out(methods_out);
    write_table_methods_csv(
        out.stream(), result,
        {{"command", "table-methods"},
         {"tol", format_double(methods_config.tol)},
         {"gamma", format_double(methods_config.gamma)},
         {"extra_factor", std::to_string(methods_config.extra_factor)},
         {"v", "uniform"}});
  });

  // --- sweep-shift -----------------------------------------------------------
  CommonArgs sweep_args;
  ShiftSweepConfig sweep_config;
  auto* sweep_cmd =
      app.add_subcommand("sweep-shift", "residual traces across a shift grid");
  sweep_cmd->add_option("--problem", sweep_args.problem, "bundled problem name");
  sweep_cmd->add_option("--tensor-file", sweep_args.tensor_file, "mlpr-tensor v1 file");
  sweep_cmd->add_option("--alpha", sweep_config.alpha, "teleportation strength")->required();
  sweep_cmd->add_option("--gammas", sweep_config.gammas, "shift grid")->required();
  sweep_cmd->add_option("--tol", sweep_config.tol, "residual tolerance");
  sweep_cmd->add_option("--max-iter", sweep_config.max_iter, "iteration budget");
  sweep_cmd->add_option("--v-file", sweep_args.v_file, "teleportation vector file");
  sweep_cmd->add_option("--out", sweep_args.out, "output CSV path");
  sweep_cmd->callback([&]() {
    const TransitionTensor tensor = resolve_tensor(sweep_args);
    const ShiftSweepResult result = run_sweep_shift(
        tensor, resolve_teleport(sweep_args, tensor.dim()), sweep_config);
    Output out(sweep_args.out);
    write_sweep_csv(out.stream(), result,
                    {{"command", "sweep-shift"},
                     {"problem", source_label(sweep_args)},
                     {"alpha", format_double(sweep_config.alpha)},
                     {"tol", format_double(sweep_config.tol)},
                     {"max_iter", std::to_string(sweep_config.max_iter)}});
    for (const auto& entry : result.entries) {
      std::cerr << "gamma " << format_double(entry.gamma) << ": "
                << (entry.outcome.converged ? "converged" : "no convergence")
                << " (" << entry.outcome.iterations << " iterations)\n";
    }
  });

  // --- simulate --------------------------------------------------------------
  CommonArgs sim_args;
  double sim_alpha = 0.85;
  std::int64_t sim_steps = 1000000;
  std::uint64_t sim_seed = 1;
  auto* sim_cmd = app.add_subcommand("simulate", "spacey random surfer trajectory");
  sim_cmd->add_option("--problem", sim_args.problem, "bundled problem name");
  sim_cmd->add_option("--tensor-file", sim_args.tensor_file, "mlpr-tensor v1 file");
  sim_cmd->add_option("--alpha", sim_alpha, "teleportation strength")->required();
  sim_cmd->add_option("--steps", sim_steps, "trajectory length");
  sim_cmd->add_option("--seed", sim_seed, "generator seed");
  sim_cmd->add_option("--v-file", sim_args.v_file, "teleportation vector file");
  sim_cmd->add_option("--out", sim_args.out, "output CSV path");
  sim_cmd->callback([&]() {
    const TransitionTensor tensor = resolve_tensor(sim_args);
    const SimulationResult result =
        simulate(tensor, sim_alpha, resolve_teleport(sim_args, tensor.dim()),
                 sim_steps, sim_seed);
    Output out(sim_args.out);
    write_simulation_csv(out.stream(), result,
                         {{"command", "simulate"},
                          {"problem", source_label(sim_args)},
                          {"alpha", format_double(sim_alpha)},
                          {"generator", std::string(kSurferGenerator)}});
  });

  // --- beta ------------------------------------------------------------------
  CommonArgs beta_args;
  double beta_alpha = 0.5;
  auto* beta_cmd = app.add_subcommand("beta", "uniqueness diagnostics");
  beta_cmd->add_option("--problem", beta_args.problem, "bundled problem name");
  beta_cmd->add_option("--tensor-file", beta_args.tensor_file, "mlpr-tensor v1 file");
  beta_cmd->add_option("--alpha", beta_alpha, "teleportation strength")->required();
  beta_cmd->add_option("--v-file", beta_args.v_file, "teleportation vector file");
  beta_cmd->add_option("--out", beta_args.out, "output CSV path");
  beta_cmd->callback([&]() {
    const TransitionTensor tensor = resolve_tensor(beta_args);
    const UniquenessReport report = uniqueness_report(
        tensor, beta_alpha, resolve_teleport(beta_args, tensor.dim()));
    Output out(beta_args.out);
    write_beta_csv(out.stream(), report,
                   {{"command", "beta"},
                    {"problem", source_label(beta_args)},
                    {"alpha", format_double(beta_alpha)}});
  });

  // --- oracle ----------------------------------------------------------------
  CommonArgs oracle_args;
  double oracle_alpha = 0.99;
  OracleOptions oracle_options;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "multi-start enumeration of solutions");
  oracle_cmd->add_option("--problem", oracle_args.problem, "bundled problem name");
  oracle_cmd->add_option("--example", oracle_args.problem,
                         "worked example name (example31, nonunique)");
  oracle_cmd->add_option("--tensor-file", oracle_args.tensor_file, "mlpr-tensor v1 file");
  oracle_cmd->add_option("--alpha", oracle_alpha, "teleportation strength")->required();
  oracle_cmd->add_option("--starts", oracle_options.starts, "random starts");
  oracle_cmd->add_option("--seed", oracle_options.seed, "generator seed");
  oracle_cmd->add_option("--v-file", oracle_args.v_file, "teleportation vector file");
  oracle_cmd->add_option("--out", oracle_args.out, "output CSV path");
  oracle_cmd->callback([&]() {
    const TransitionTensor tensor = resolve_tensor(oracle_args);
    const SolutionSet set =
        enumerate_solutions(tensor, oracle_alpha,
                            resolve_teleport(oracle_args, tensor.dim()),
                            oracle_options);
    Output out(oracle_args.out);
    write_oracle_csv(out.stream(), set, source_label(oracle_args), oracle_alpha,
                     {{"command", "oracle"},
                      {"starts", std::to_string(oracle_options.starts)},
                      {"seed", std::to_string(oracle_options.seed)},
                      {"starts_used", std::to_string(set.starts_used)},
                      {"solutions", std::to_string(set.solutions.size())}});
  });

  // --- export-problems ---------------------------------------------------------
  std::string export_dir = "problems";
  auto* export_cmd =
      app.add_subcommand("export-problems", "write every bundled tensor to disk");
  export_cmd->add_option("--dir", export_dir, "destination directory");
  export_cmd->callback([&]() {
    std::filesystem::create_directories(export_dir);
    for (const auto& name : problem_names()) {
      const std::filesystem::path path =
          std::filesystem::path(export_dir) / (name + ".tensor");
      std::ofstream out(path);
      if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
      }
      out << serialize_tensor(load_problem(name).tensor);
    }
    std::cerr << "wrote " << problem_names().size() << " tensors to "
              << export_dir << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
