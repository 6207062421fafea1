#include "mempso/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mempso {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<NamedInstance> load_instances(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  std::vector<NamedInstance> out;
  for (const auto& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(path, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".cnf")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  for (const auto& file : files) {
    NamedInstance inst;
    inst.name = fs::path(file).stem().string();
    try {
      inst.formula = read_dimacs_file(file);
    } catch (const std::exception& e) {
      inst.error = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::size_t InstanceResult::successes() const {
  return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [](const RunReport& r) {
    return r.status == RunStatus::Satisfied;
  }));
}

void aggregate(InstanceResult& r) {
  const std::size_t wins = r.successes();
  r.success_rate = r.runs.empty() ? 0.0 : static_cast<double>(wins) / static_cast<double>(r.runs.size());
  r.mean_success_seconds.reset();
  r.best_false_clause_count.reset();
  if (wins > 0) {
    double total = 0.0;
    for (const auto& run : r.runs)
      if (run.status == RunStatus::Satisfied) total += run.wall_time.count();
    r.mean_success_seconds = total / static_cast<double>(wins);
  }
  for (const auto& run : r.runs)
    if (!r.best_false_clause_count || run.false_clause_count < *r.best_false_clause_count)
      r.best_false_clause_count = run.false_clause_count;
}

SuiteReport run_suite(const std::vector<NamedInstance>& instances, const SolverConfig& cfg,
                      std::size_t runs_per_instance, std::uint64_t base_seed,
                      std::size_t workers) {
  if (runs_per_instance == 0) throw ConfigError("runs per instance must be >= 1");
  cfg.validate();

  SuiteReport suite;
  suite.config = cfg;
  suite.runs_per_instance = runs_per_instance;
  suite.base_seed = base_seed;

  struct Job {
    std::size_t instance;
    std::size_t run;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceResult r;
    r.name = instances[i].name;
    r.error = instances[i].error;
    if (instances[i].formula) {
      r.variable_count = instances[i].formula->variable_count();
      r.clause_count = instances[i].formula->clause_count();
      r.runs.resize(runs_per_instance);
      for (std::size_t k = 0; k < runs_per_instance; ++k) jobs.push_back({i, k});
    }
    suite.instances.push_back(std::move(r));
  }

  std::vector<char> verified(jobs.size(), 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto [i, k] = jobs[j];
      SolverConfig run_cfg = cfg;
      run_cfg.random_seed = base_seed + k;
      const auto& formula = *instances[i].formula;
      auto report = solve(formula, run_cfg);
      verified[j] = verify_report(formula, report) ? 1 : 0;
      suite.instances[i].runs[k] = std::move(report);
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(jobs.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    auto& r = suite.instances[jobs[j].instance];
    if (!verified[j] && r.error.empty())
      r.error = "run " + std::to_string(jobs[j].run) + " failed verification";
  }
  for (auto& r : suite.instances) aggregate(r);
  return suite;
}

std::string format_seconds(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string result_cell(const InstanceResult& r) {
  if (!r.error.empty()) return "error: " + r.error;
  if (r.successes() > 0)
    return std::to_string(std::lround(r.success_rate * 100.0)) + "% " +
           format_seconds(r.mean_success_seconds.value_or(0.0));
  if (!r.best_false_clause_count) return "-";
  const auto k = *r.best_false_clause_count;
  return "(" + std::to_string(k) + (k == 1 ? " clause)" : " clauses)");
}

namespace {

std::string status_name(RunStatus s) { return std::string(to_string(s)); }

RunStatus status_from(const std::string& s) {
  for (auto st : {RunStatus::Satisfied, RunStatus::TargetReached, RunStatus::BudgetExhausted})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown run status '" + s + "'");
}

std::string exact_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json config_json(const SolverConfig& cfg) {
  json j;
  j["omega"] = cfg.pso.omega;
  j["c1"] = cfg.pso.c1;
  j["c2"] = cfg.pso.c2;
  j["v_max"] = cfg.pso.v_max;
  j["pivot"] = cfg.ls.pivot == PivotRule::GreedyAscent ? "greedy" : "steepest";
  j["ls_depth"] = cfg.ls.max_depth ? json(*cfg.ls.max_depth) : json(nullptr);
  j["population_size"] = cfg.population_size;
  j["seed_pool_size"] = cfg.seed_pool_size;
  j["max_iterations"] = cfg.max_iterations;
  j["target_fitness"] = cfg.target_fitness ? json(*cfg.target_fitness) : json(nullptr);
  return j;
}

SolverConfig config_from(const json& j) {
  SolverConfig cfg;
  cfg.pso.omega = j.at("omega").get<double>();
  cfg.pso.c1 = j.at("c1").get<double>();
  cfg.pso.c2 = j.at("c2").get<double>();
  cfg.pso.v_max = j.at("v_max").get<double>();
  cfg.ls.pivot = j.at("pivot").get<std::string>() == "greedy" ? PivotRule::GreedyAscent
                                                               : PivotRule::SteepestAscent;
  if (!j.at("ls_depth").is_null()) cfg.ls.max_depth = j.at("ls_depth").get<std::size_t>();
  cfg.population_size = j.at("population_size").get<std::size_t>();
  cfg.seed_pool_size = j.at("seed_pool_size").get<std::size_t>();
  cfg.max_iterations = j.at("max_iterations").get<std::size_t>();
  if (!j.at("target_fitness").is_null()) cfg.target_fitness = j.at("target_fitness").get<std::size_t>();
  return cfg;
}

json run_json(const RunReport& run, bool include_trace) {
  json jr;
  jr["seed"] = run.seed;
  jr["status"] = status_name(run.status);
  jr["best_fitness"] = run.best_fitness;
  jr["clauses"] = run.clause_count;
  jr["false_clause_count"] = run.false_clause_count;
  jr["iterations_used"] = run.iterations_used;
  jr["wall_time_s"] = run.wall_time.count();
  jr["assignment"] = run.best_assignment.to_string();
  if (include_trace) {
    json trace = json::array();
    for (const auto& t : run.fitness_trace) trace.push_back({t.iteration, t.gbest_fitness});
    jr["trace"] = std::move(trace);
  }
  return jr;
}

json to_json(const SuiteReport& suite, bool include_traces) {
  json root;
  root["config"] = config_json(suite.config);
  root["runs_per_instance"] = suite.runs_per_instance;
  root["base_seed"] = suite.base_seed;
  root["instances"] = json::array();
  for (const auto& r : suite.instances) {
    json ji;
    ji["name"] = r.name;
    ji["variables"] = r.variable_count;
    ji["clauses"] = r.clause_count;
    ji["error"] = r.error.empty() ? json(nullptr) : json(r.error);
    ji["successes"] = r.successes();
    ji["success_rate"] = r.success_rate;
    ji["mean_success_time_s"] = r.mean_success_seconds ? json(*r.mean_success_seconds) : json(nullptr);
    ji["best_false_clause_count"] =
        r.best_false_clause_count ? json(*r.best_false_clause_count) : json(nullptr);
    ji["cell"] = result_cell(r);
    ji["runs"] = json::array();
    for (const auto& run : r.runs) ji["runs"].push_back(run_json(run, include_traces));
    root["instances"].push_back(std::move(ji));
  }
  return root;
}

}  // namespace

std::string render_run_json(const RunReport& run, bool include_trace) {
  return run_json(run, include_trace).dump(2) + "\n";
}

std::string render_report(const SuiteReport& suite, ReportFormat format, bool include_traces) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json:
      out << to_json(suite, include_traces).dump(2) << '\n';
      break;

    case ReportFormat::Csv:
      out << "instance,variables,clauses,run,seed,status,best_fitness,false_clause_count,"
             "iterations_used,wall_time_s,success_rate,mean_success_time_s,"
             "best_false_clause_count,error";
      if (include_traces) out << ",trace";
      out << '\n';
      for (const auto& r : suite.instances) {
        const std::string tail =
            exact_number(r.success_rate) + ',' +
            (r.mean_success_seconds ? format_seconds(*r.mean_success_seconds) : "") + ',' +
            (r.best_false_clause_count ? std::to_string(*r.best_false_clause_count) : "") + ',' +
            csv_field(r.error);
        const std::string head = csv_field(r.name) + ',' + std::to_string(r.variable_count) +
                                 ',' + std::to_string(r.clause_count) + ',';
        if (r.runs.empty()) {
          out << head << ",,,,,,," << tail << (include_traces ? "," : "") << '\n';
          continue;
        }
        for (std::size_t k = 0; k < r.runs.size(); ++k) {
          const auto& run = r.runs[k];
          out << head << k << ',' << run.seed << ',' << status_name(run.status) << ','
              << run.best_fitness << ',' << run.false_clause_count << ',' << run.iterations_used
              << ',' << format_seconds(run.wall_time.count()) << ',' << tail;
          if (include_traces) {
            out << ',';
            for (std::size_t t = 0; t < run.fitness_trace.size(); ++t)
              out << (t ? ";" : "") << run.fitness_trace[t].gbest_fitness;
          }
          out << '\n';
        }
      }
      break;

    case ReportFormat::Table: {
      std::size_t width = 8;
      for (const auto& r : suite.instances) width = std::max(width, r.name.size());
      out << std::left << std::setw(static_cast<int>(width)) << "instance" << "  " << std::right
          << std::setw(8) << "vars" << std::setw(9) << "clauses" << std::setw(6) << "runs"
          << "  result\n";
      for (const auto& r : suite.instances) {
        out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::right
            << std::setw(8) << r.variable_count << std::setw(9) << r.clause_count << std::setw(6)
            << r.runs.size() << "  " << result_cell(r) << '\n';
      }
      break;
    }
  }
  return out.str();
}

SuiteReport suite_from_json(const std::string& text) {
  const json root = json::parse(text);
  SuiteReport suite;
  suite.config = config_from(root.at("config"));
  suite.runs_per_instance = root.at("runs_per_instance").get<std::size_t>();
  suite.base_seed = root.at("base_seed").get<std::uint64_t>();
  for (const auto& ji : root.at("instances")) {
    InstanceResult r;
    r.name = ji.at("name").get<std::string>();
    r.variable_count = ji.at("variables").get<std::size_t>();
    r.clause_count = ji.at("clauses").get<std::size_t>();
    if (!ji.at("error").is_null()) r.error = ji.at("error").get<std::string>();
    r.success_rate = ji.at("success_rate").get<double>();
    if (!ji.at("mean_success_time_s").is_null())
      r.mean_success_seconds = ji.at("mean_success_time_s").get<double>();
    if (!ji.at("best_false_clause_count").is_null())
      r.best_false_clause_count = ji.at("best_false_clause_count").get<std::size_t>();
    for (const auto& jr : ji.at("runs")) {
      RunReport run;
      run.seed = jr.at("seed").get<std::uint64_t>();
      run.status = status_from(jr.at("status").get<std::string>());
      run.best_fitness = jr.at("best_fitness").get<std::size_t>();
      run.clause_count = r.clause_count;
      run.false_clause_count = jr.at("false_clause_count").get<std::size_t>();
      run.iterations_used = jr.at("iterations_used").get<std::size_t>();
      run.wall_time = std::chrono::duration<double>(jr.at("wall_time_s").get<double>());
      const auto bits = jr.at("assignment").get<std::string>();
      Assignment a(bits.size());
      for (std::size_t i = 0; i < bits.size(); ++i) a.set(i, bits[i] == '1');
      run.best_assignment = std::move(a);
      if (jr.contains("trace"))
        for (const auto& t : jr.at("trace"))
          run.fitness_trace.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()});
      r.runs.push_back(std::move(run));
    }
    suite.instances.push_back(std::move(r));
  }
  return suite;
}

void write_trace_csv(std::ostream& out, const RunReport& report) {
  out << "iteration,gbest_fitness\n";
  for (const auto& t : report.fitness_trace) out << t.iteration << ',' << t.gbest_fitness << '\n';
}

}  // namespace mempso
