#include "mempso/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mempso {

void SolverConfig::validate() const {
  try {
    pso.validate();
    ls.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (population_size == 0) throw ConfigError("population size must be >= 1");
  if (seed_pool_size < population_size)
    throw ConfigError("seed pool (" + std::to_string(seed_pool_size) +
                      ") smaller than population (" + std::to_string(population_size) + ")");
  if (max_iterations == 0) throw ConfigError("max iterations must be >= 1");
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Satisfied:
      return "SATISFIED";
    case RunStatus::TargetReached:
      return "TARGET_REACHED";
    case RunStatus::BudgetExhausted:
      return "BUDGET_EXHAUSTED";
  }
  return "UNKNOWN";
}

bool RunReport::same_outcome(const RunReport& o) const {
  return status == o.status && best_assignment == o.best_assignment &&
         best_fitness == o.best_fitness && clause_count == o.clause_count &&
         false_clause_count == o.false_clause_count && iterations_used == o.iterations_used &&
         fitness_trace == o.fitness_trace && seed == o.seed;
}

std::vector<std::size_t> select_top_k(std::span<const std::size_t> fitness, std::size_t keep) {
  if (keep > fitness.size())
    throw ConfigError("cannot keep " + std::to_string(keep) + " of " +
                      std::to_string(fitness.size()) + " candidates");
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto better = [&](std::size_t a, std::size_t b) {
    return fitness[a] != fitness[b] ? fitness[a] > fitness[b] : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    better);
  order.resize(keep);
  return order;
}

std::vector<Particle> seed_population(const CnfFormula& formula, std::size_t pool_size,
                                      std::size_t keep, double v_max, RandomStream& pool_rng,
                                      std::span<RandomStream> particle_rngs) {
  if (keep == 0) throw ConfigError("population size must be >= 1");
  if (keep > pool_size)
    throw ConfigError("cannot keep " + std::to_string(keep) + " particles from a pool of " +
                      std::to_string(pool_size));
  if (particle_rngs.size() != keep)
    throw std::invalid_argument("seed_population: one random stream per kept particle required");

  const std::size_t n = formula.variable_count();
  std::vector<Assignment> pool;
  std::vector<std::size_t> fitness;
  pool.reserve(pool_size);
  fitness.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    Assignment a(n);
    for (std::size_t d = 0; d < n; ++d) a.set(d, pool_rng.coin());
    fitness.push_back(evaluate(formula, a));
    pool.push_back(std::move(a));
  }

  const auto kept = select_top_k(fitness, keep);
  std::vector<Particle> particles;
  particles.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    Particle p;
    p.position = pool[kept[i]];
    p.velocity = random_velocity(n, v_max, particle_rngs[i]);
    p.best_position = p.position;
    p.best_fitness = fitness[kept[i]];
    particles.push_back(std::move(p));
  }
  return particles;
}

RunReport solve(const CnfFormula& formula, const SolverConfig& cfg,
                const RefinementObserver& observer) {
  cfg.validate();
  const std::size_t m = formula.clause_count();
  const std::size_t target = std::min(cfg.target_fitness.value_or(m), m);
  const auto started = std::chrono::steady_clock::now();

  RandomStream pool_rng(cfg.random_seed, kSeedingStream);
  std::vector<RandomStream> rngs;
  rngs.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i)
    rngs.emplace_back(cfg.random_seed, particle_stream_id(i));

  auto particles = seed_population(formula, cfg.seed_pool_size, cfg.population_size,
                                   cfg.pso.v_max, pool_rng, rngs);

  GlobalBest gbest{particles.front().best_position, particles.front().best_fitness};
  for (auto& p : particles) refresh_bests(p, gbest, p.best_fitness);

  RunReport report;
  report.seed = cfg.random_seed;
  report.clause_count = m;
  report.fitness_trace.push_back({0, gbest.fitness});

  std::size_t iteration = 0;
  while (gbest.fitness < target && iteration < cfg.max_iterations) {
    ++iteration;
    // Every particle moves against the previous iteration's global best; the
    // reduction into gbest happens afterwards in particle order.
    std::vector<std::size_t> current(particles.size());
    for (std::size_t i = 0; i < particles.size(); ++i) {
      auto& p = particles[i];
      p.velocity = update_velocity(p, gbest, cfg.pso, rngs[i]);
      p.position = update_position(p.velocity, rngs[i]);
      auto refined = local_search(formula, p.position, cfg.ls);
      if (observer) observer({iteration, i, evaluate(formula, p.position), refined.fitness});
      p.position = std::move(refined.assignment);
      current[i] = refined.fitness;
    }
    for (std::size_t i = 0; i < particles.size(); ++i) refresh_bests(particles[i], gbest, current[i]);
    report.fitness_trace.push_back({iteration, gbest.fitness});
  }

  report.wall_time = std::chrono::steady_clock::now() - started;
  report.best_assignment = gbest.position;
  report.best_fitness = gbest.fitness;
  report.false_clause_count = m - gbest.fitness;
  report.iterations_used = iteration;
  if (gbest.fitness == m)
    report.status = RunStatus::Satisfied;
  else if (gbest.fitness >= target)
    report.status = RunStatus::TargetReached;
  else
    report.status = RunStatus::BudgetExhausted;
  return report;
}

bool verify_report(const CnfFormula& formula, const RunReport& r) {
  if (r.best_assignment.size() != formula.variable_count()) return false;
  const std::size_t m = formula.clause_count();
  if (evaluate(formula, r.best_assignment) != r.best_fitness) return false;
  if (r.status == RunStatus::Satisfied && r.best_fitness != m) return false;
  return true;
}

}  // namespace mempso
