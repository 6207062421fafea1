#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mempso/cnf.hpp"
#include "mempso/local_search.hpp"
#include "mempso/random.hpp"
#include "mempso/swarm.hpp"

namespace mempso {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolverConfig {
  PsoParams pso;
  LocalSearchConfig ls;
  std::size_t population_size = 100;
  std::size_t seed_pool_size = 1000;
  std::size_t max_iterations = 200;
  /// Stop once the global best reaches this many satisfied clauses; unset means all of them.
  std::optional<std::size_t> target_fitness;
  std::uint64_t random_seed = 0;

  /// Throws ConfigError.
  void validate() const;
};

enum class RunStatus {
  Satisfied,        // every clause satisfied
  TargetReached,    // explicit target_fitness < m reached
  BudgetExhausted,  // max_iterations used without reaching the target
};

std::string_view to_string(RunStatus status);

struct TracePoint {
  std::size_t iteration = 0;
  std::size_t gbest_fitness = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunReport {
  RunStatus status = RunStatus::BudgetExhausted;
  Assignment best_assignment;
  std::size_t best_fitness = 0;
  std::size_t clause_count = 0;
  std::size_t false_clause_count = 0;
  std::size_t iterations_used = 0;
  std::vector<TracePoint> fitness_trace;
  std::chrono::duration<double> wall_time{0};
  std::uint64_t seed = 0;

  /// Equality over every field except wall_time.
  bool same_outcome(const RunReport& other) const;
};

/// Stream ids derived from SolverConfig::random_seed.
inline constexpr std::uint64_t kSeedingStream = 0;
inline std::uint64_t particle_stream_id(std::size_t particle) { return particle + 1; }

/// Indices of the keep largest values; ties go to the lower index. Result is
/// ordered by decreasing value.
std::vector<std::size_t> select_top_k(std::span<const std::size_t> fitness, std::size_t keep);

/// Draws pool_size uniform assignments from pool_rng and keeps the keep
/// fittest as particles. Particle i gets its velocity from particle_rngs[i]
/// (uniform in [-v_max, v_max]); its personal best is its own position.
std::vector<Particle> seed_population(const CnfFormula& formula, std::size_t pool_size,
                                      std::size_t keep, double v_max, RandomStream& pool_rng,
                                      std::span<RandomStream> particle_rngs);

/// Fitness of one particle before and after memetic refinement.
struct RefinementEvent {
  std::size_t iteration;
  std::size_t particle;
  std::size_t before;
  std::size_t after;
};

using RefinementObserver = std::function<void(const RefinementEvent&)>;

RunReport solve(const CnfFormula& formula, const SolverConfig& cfg,
                const RefinementObserver& observer = {});

/// True iff the reported fitness matches the assignment and a Satisfied
/// status is backed by a full model.
bool verify_report(const CnfFormula& formula, const RunReport& report);

}  // namespace mempso
