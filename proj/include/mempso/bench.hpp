#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mempso/cnf.hpp"
#include "mempso/engine.hpp"

namespace mempso {

/// A named benchmark instance, or the reason it could not be loaded.
struct NamedInstance {
  std::string name;
  std::optional<CnfFormula> formula;
  std::string error;
};

/// Reads each path; directories contribute their *.cnf files in name order.
/// Unreadable or malformed files become entries with an error, not exceptions.
std::vector<NamedInstance> load_instances(const std::vector<std::string>& paths);

struct InstanceResult {
  std::string name;
  std::size_t variable_count = 0;
  std::size_t clause_count = 0;
  std::string error;
  std::vector<RunReport> runs;

  double success_rate = 0.0;
  /// Mean solve time over satisfied runs; unset without successes.
  std::optional<double> mean_success_seconds;
  /// Minimum false-clause count over runs; unset when no run happened.
  std::optional<std::size_t> best_false_clause_count;

  std::size_t successes() const;
};

struct SuiteReport {
  SolverConfig config;
  std::size_t runs_per_instance = 1;
  std::uint64_t base_seed = 0;
  std::vector<InstanceResult> instances;
};

/// Fills the aggregate fields of r from r.runs.
void aggregate(InstanceResult& r);

/// Runs runs_per_instance solves per loaded instance with seeds base_seed + k.
/// Jobs may execute on up to `workers` threads; the report is ordered by
/// (instance, run) regardless of completion order. Every report is checked
/// with verify_report; a failure is recorded as an instance error.
SuiteReport run_suite(const std::vector<NamedInstance>& instances, const SolverConfig& cfg,
                      std::size_t runs_per_instance, std::uint64_t base_seed,
                      std::size_t workers = 1);

enum class ReportFormat { Table, Csv, Json };

/// "100% 27.19" when some run succeeded, "(k clauses)" otherwise.
std::string result_cell(const InstanceResult& r);

/// Seconds with at most three decimals, trailing zeros trimmed.
std::string format_seconds(double seconds);

std::string render_report(const SuiteReport& report, ReportFormat format,
                          bool include_traces = false);

/// One run as a JSON object (same fields as the per-run entries of a suite report).
std::string render_run_json(const RunReport& run, bool include_trace = false);

/// Inverse of the JSON rendering (traces included when present).
SuiteReport suite_from_json(const std::string& text);

/// Trace CSV: header "iteration,gbest_fitness", one row per trace point.
void write_trace_csv(std::ostream& out, const RunReport& report);

}  // namespace mempso
