#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mempso/bench.hpp"
#include "mempso/cnf.hpp"
#include "mempso/engine.hpp"
#include "mempso/instances.hpp"
#include "mempso/local_search.hpp"
#include "mempso/swarm.hpp"

namespace py = pybind11;
using namespace mempso;

namespace {

Assignment to_assignment(const std::vector<bool>& bits) {
  Assignment a(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) a.set(i, bits[i]);
  return a;
}

std::vector<bool> to_list(const Assignment& a) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  return out;
}

// Clauses as lists of signed 1-based DIMACS literals.
CnfFormula from_clauses(std::size_t variables, const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> out;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int v : c) {
      if (v == 0 || static_cast<std::size_t>(v < 0 ? -v : v) > variables)
        throw std::invalid_argument("literal " + std::to_string(v) + " out of range");
      lits.push_back(Literal{static_cast<std::uint32_t>((v < 0 ? -v : v) - 1), v < 0});
    }
    out.emplace_back(std::move(lits));
  }
  return CnfFormula(variables, std::move(out));
}

std::vector<std::vector<int>> to_clauses(const CnfFormula& f) {
  std::vector<std::vector<int>> out;
  for (const auto& c : f.clauses()) {
    std::vector<int> lits;
    for (const auto& l : c) lits.push_back((l.negated ? -1 : 1) * static_cast<int>(l.variable + 1));
    out.push_back(std::move(lits));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_mempso, m) {
  m.doc() = "Memetic binary-PSO solver for SAT and MAX-SAT";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidAssignment>(m, "InvalidAssignment", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<OracleRefused>(m, "OracleRefused", PyExc_RuntimeError);

  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init(&from_clauses), py::arg("variables"), py::arg("clauses"))
      .def_property_readonly("variable_count", &CnfFormula::variable_count)
      .def_property_readonly("clause_count", &CnfFormula::clause_count)
      .def_property_readonly("clauses", &to_clauses)
      .def(py::self == py::self)
      .def("__repr__", [](const CnfFormula& f) {
        return "<CnfFormula vars=" + std::to_string(f.variable_count()) +
               " clauses=" + std::to_string(f.clause_count()) + ">";
      });

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); }, py::arg("text"));
  m.def("read_dimacs", &read_dimacs_file, py::arg("path"));
  m.def("write_dimacs", [](const CnfFormula& f) { return write_dimacs(f); }, py::arg("formula"));
  m.def("evaluate", [](const CnfFormula& f, const std::vector<bool>& a) { return evaluate(f, to_assignment(a)); },
        py::arg("formula"), py::arg("assignment"));
  m.def("unsatisfied_clauses",
        [](const CnfFormula& f, const std::vector<bool>& a) { return unsatisfied_clauses(f, to_assignment(a)); },
        py::arg("formula"), py::arg("assignment"));

  m.def("clamp_velocity", &clamp_velocity, py::arg("v"), py::arg("v_max"));
  m.def("sigmoid", &sigmoid, py::arg("v"));

  py::enum_<PivotRule>(m, "PivotRule")
      .value("GREEDY_ASCENT", PivotRule::GreedyAscent)
      .value("STEEPEST_ASCENT", PivotRule::SteepestAscent);

  m.def(
      "local_search",
      [](const CnfFormula& f, const std::vector<bool>& start, PivotRule pivot, std::optional<std::size_t> depth) {
        const auto r = local_search(f, to_assignment(start), LocalSearchConfig{pivot, depth});
        return py::make_tuple(to_list(r.assignment), r.fitness, r.moves);
      },
      py::arg("formula"), py::arg("start"), py::arg("pivot") = PivotRule::SteepestAscent,
      py::arg("max_depth") = py::none(), "Returns (assignment, fitness, moves).");

  m.def(
      "generate",
      [](std::size_t n, std::size_t clauses, std::uint64_t seed) { return generate({n, clauses, seed}); },
      py::arg("variables"), py::arg("clauses"), py::arg("seed") = 0);

  m.def(
      "brute_force",
      [](const CnfFormula& f) {
        const auto r = brute_force(f);
        return py::make_tuple(r.max_fitness, to_list(r.witness), r.satisfiable);
      },
      py::arg("formula"), "Returns (max_fitness, witness, satisfiable).");

  py::enum_<RunStatus>(m, "RunStatus")
      .value("SATISFIED", RunStatus::Satisfied)
      .value("TARGET_REACHED", RunStatus::TargetReached)
      .value("BUDGET_EXHAUSTED", RunStatus::BudgetExhausted);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("status", &RunReport::status)
      .def_readonly("best_fitness", &RunReport::best_fitness)
      .def_readonly("clause_count", &RunReport::clause_count)
      .def_readonly("false_clause_count", &RunReport::false_clause_count)
      .def_readonly("iterations_used", &RunReport::iterations_used)
      .def_readonly("seed", &RunReport::seed)
      .def_property_readonly("best_assignment", [](const RunReport& r) { return to_list(r.best_assignment); })
      .def_property_readonly("fitness_trace",
                             [](const RunReport& r) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& t : r.fitness_trace) out.emplace_back(t.iteration, t.gbest_fitness);
                               return out;
                             })
      .def_property_readonly("wall_time", [](const RunReport& r) { return r.wall_time.count(); })
      .def("to_json", [](const RunReport& r, bool trace) { return render_run_json(r, trace); },
           py::arg("include_trace") = false);

  m.def(
      "solve",
      [](const CnfFormula& f, double omega, double c1, double c2, double v_max, std::size_t population,
         std::size_t pool, std::size_t max_iterations, PivotRule pivot, std::optional<std::size_t> ls_depth,
         std::optional<std::size_t> target, std::uint64_t seed) {
        SolverConfig cfg;
        cfg.pso = PsoParams{omega, c1, c2, v_max};
        cfg.ls = LocalSearchConfig{pivot, ls_depth};
        cfg.population_size = population;
        cfg.seed_pool_size = pool;
        cfg.max_iterations = max_iterations;
        cfg.target_fitness = target;
        cfg.random_seed = seed;
        py::gil_scoped_release release;
        return solve(f, cfg);
      },
      py::arg("formula"), py::kw_only(), py::arg("omega") = 1.0, py::arg("c1") = 2.0, py::arg("c2") = 2.0,
      py::arg("v_max") = 4.0, py::arg("population") = 100, py::arg("pool") = 1000,
      py::arg("max_iterations") = 200, py::arg("pivot") = PivotRule::SteepestAscent,
      py::arg("ls_depth") = py::none(), py::arg("target") = py::none(), py::arg("seed") = 0);

  m.def("verify_report", &verify_report, py::arg("formula"), py::arg("report"));
}
