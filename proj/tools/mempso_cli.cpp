// mempso: memetic binary-PSO SAT / MAX-SAT solver.
//
//   mempso solve  [file.cnf|-]      exit 0 satisfied, 1 budget exhausted, 2 error
//   mempso bench  <dir|file>...     suite run with success rate and timing
//   mempso gen    --vars N --clauses M --seed S
//   mempso oracle <file.cnf>        exhaustive MAX-SAT, at most 24 variables

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mempso/bench.hpp"
#include "mempso/cnf.hpp"
#include "mempso/engine.hpp"
#include "mempso/instances.hpp"

namespace {

constexpr int kExitSatisfied = 0;
constexpr int kExitUnsolved = 1;
constexpr int kExitError = 2;

struct SolverFlags {
  mempso::SolverConfig cfg;
  mempso::PivotRule pivot = mempso::PivotRule::SteepestAscent;
  std::size_t ls_depth = 0;  // 0: variable count
  std::size_t target = 0;    // 0: all clauses
  std::uint64_t seed = 0;
  std::string trace;
  mempso::ReportFormat format = mempso::ReportFormat::Table;

  mempso::SolverConfig build() const {
    auto c = cfg;
    c.ls.pivot = pivot;
    if (ls_depth > 0) c.ls.max_depth = ls_depth;
    if (target > 0) c.target_fitness = target;
    c.random_seed = seed;
    return c;
  }
};

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  auto& c = f.cfg;
  app->add_option("--omega", c.pso.omega, "Inertia weight")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--c1", c.pso.c1, "Cognitive coefficient")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--c2", c.pso.c2, "Social coefficient")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--vmax", c.pso.v_max, "Velocity clamp")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--pop", c.population_size, "Swarm size")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--pool", c.seed_pool_size, "Seeding pool size")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--max-iters", c.max_iterations, "Iteration budget")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--target", f.target, "Stop at this many satisfied clauses (default: all)");
  const std::map<std::string, mempso::PivotRule> pivots{{"greedy", mempso::PivotRule::GreedyAscent},
                                                        {"steepest", mempso::PivotRule::SteepestAscent}};
  app->add_option("--pivot", f.pivot, "Local search pivot rule: greedy|steepest")
      ->transform(CLI::CheckedTransformer(pivots, CLI::ignore_case));
  app->add_option("--ls-depth", f.ls_depth, "Local search move bound (default: variable count)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", f.seed, "Random seed (base seed for bench)")->capture_default_str();
  app->add_option("--trace", f.trace, "Trace CSV path (solve) or directory (bench)");
  const std::map<std::string, mempso::ReportFormat> formats{{"table", mempso::ReportFormat::Table},
                                                            {"csv", mempso::ReportFormat::Csv},
                                                            {"json", mempso::ReportFormat::Json}};
  app->add_option("--format", f.format, "Output format: table|csv|json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

mempso::CnfFormula read_input(const std::string& path) {
  if (path.empty() || path == "-") return mempso::parse_dimacs(std::cin);
  return mempso::read_dimacs_file(path);
}

void print_run(std::ostream& out, const mempso::RunReport& r, mempso::ReportFormat format) {
  if (format == mempso::ReportFormat::Json) {
    out << mempso::render_run_json(r);
    return;
  }
  if (format == mempso::ReportFormat::Csv) {
    out << "seed,status,best_fitness,clauses,false_clause_count,iterations_used,wall_time_s\n"
        << r.seed << ',' << mempso::to_string(r.status) << ',' << r.best_fitness << ','
        << r.clause_count << ',' << r.false_clause_count << ',' << r.iterations_used << ','
        << mempso::format_seconds(r.wall_time.count()) << '\n';
    return;
  }
  out << "c status " << mempso::to_string(r.status) << '\n'
      << "c satisfied " << r.best_fitness << '/' << r.clause_count << '\n'
      << "c false_clauses " << r.false_clause_count << '\n'
      << "c iterations " << r.iterations_used << '\n'
      << "c seed " << r.seed << '\n'
      << "c time " << mempso::format_seconds(r.wall_time.count()) << '\n'
      << (r.status == mempso::RunStatus::Satisfied ? "s SATISFIABLE\n" : "s UNKNOWN\n") << 'v';
  for (std::size_t i = 0; i < r.best_assignment.size(); ++i)
    out << ' ' << (r.best_assignment[i] ? "" : "-") << i + 1;
  out << " 0\n";
}

int run_solve(const std::string& input, const SolverFlags& flags) {
  const auto formula = read_input(input);
  const auto report = mempso::solve(formula, flags.build());
  if (!mempso::verify_report(formula, report)) {
    std::cerr << "mempso: internal error, report failed verification\n";
    return kExitError;
  }
  print_run(std::cout, report, flags.format);
  if (!flags.trace.empty()) {
    std::ofstream trace(flags.trace);
    if (!trace) throw std::runtime_error("cannot write trace '" + flags.trace + "'");
    mempso::write_trace_csv(trace, report);
  }
  return report.status == mempso::RunStatus::Satisfied ? kExitSatisfied : kExitUnsolved;
}

int run_bench(const std::vector<std::string>& inputs, const SolverFlags& flags, std::size_t runs,
              std::size_t workers, const std::string& output, bool with_traces) {
  const auto instances = mempso::load_instances(inputs);
  const auto suite = mempso::run_suite(instances, flags.build(), runs, flags.seed, workers);
  const auto text = mempso::render_report(suite, flags.format, with_traces);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write report '" + output + "'");
    out << text;
  }
  if (!flags.trace.empty()) {
    std::filesystem::create_directories(flags.trace);
    for (const auto& inst : suite.instances)
      for (const auto& run : inst.runs) {
        const auto path = std::filesystem::path(flags.trace) /
                          (inst.name + "_seed" + std::to_string(run.seed) + ".csv");
        std::ofstream trace(path);
        if (!trace) throw std::runtime_error("cannot write trace '" + path.string() + "'");
        mempso::write_trace_csv(trace, run);
      }
  }
  for (const auto& inst : suite.instances)
    if (!inst.error.empty()) std::cerr << "mempso: " << inst.name << ": " << inst.error << '\n';
  return kExitSatisfied;
}

int run_gen(const mempso::RandomInstanceSpec& spec, const std::string& output) {
  const auto formula = mempso::generate(spec);
  const auto comments = mempso::provenance_comments(spec);
  if (output.empty() || output == "-") {
    mempso::write_dimacs(std::cout, formula, comments);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write '" + output + "'");
    mempso::write_dimacs(out, formula, comments);
  }
  return 0;
}

int run_oracle(const std::string& input) {
  const auto formula = read_input(input);
  const auto result = mempso::brute_force(formula);
  std::cout << "c max_satisfied " << result.max_fitness << '/' << formula.clause_count() << '\n'
            << (result.satisfiable ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n") << 'v';
  for (std::size_t i = 0; i < result.witness.size(); ++i)
    std::cout << ' ' << (result.witness[i] ? "" : "-") << i + 1;
  std::cout << " 0\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memetic binary-PSO solver for SAT and MAX-SAT"};
  app.require_subcommand(1);

  SolverFlags solve_flags;
  std::string solve_input = "-";
  auto* solve = app.add_subcommand("solve", "Solve one DIMACS instance");
  solve->add_option("file", solve_input, "DIMACS file, '-' for stdin");
  add_solver_flags(solve, solve_flags);

  SolverFlags bench_flags;
  std::vector<std::string> bench_inputs;
  std::size_t runs = 10, workers = 1;
  std::string bench_output;
  bool with_traces = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("inputs", bench_inputs, "Directories of .cnf files or individual files")->required();
  add_solver_flags(bench, bench_flags);
  bench->add_option("--runs", runs, "Runs per instance")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--workers", workers, "Concurrent runs")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_output, "Report path (default stdout)");
  bench->add_flag("--with-traces", with_traces, "Embed per-run fitness traces in CSV/JSON reports");

  mempso::RandomInstanceSpec spec;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a random 3-SAT instance");
  gen->add_option("--vars", spec.variable_count, "Variables")->required()->check(CLI::Range(3, 1 << 30));
  gen->add_option("--clauses", spec.clause_count, "Clauses")->required();
  gen->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "Output path (default stdout)");

  std::string oracle_input;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive MAX-SAT for small instances");
  oracle->add_option("file", oracle_input, "DIMACS file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error.
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) return run_solve(solve_input, solve_flags);
    if (*bench) return run_bench(bench_inputs, bench_flags, runs, workers, bench_output, with_traces);
    if (*gen) return run_gen(spec, gen_output);
    if (*oracle) return run_oracle(oracle_input);
  } catch (const std::exception& e) {
    std::cerr << "mempso: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
