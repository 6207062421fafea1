#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mempso/cnf.hpp"
#include "mempso/random.hpp"

namespace mempso {

/// Binary PSO coefficients. Defaults: inertia 1, c1 = c2 = 2, |v| <= 4.
struct PsoParams {
  double omega = 1.0;
  double c1 = 2.0;
  double c2 = 2.0;
  double v_max = 4.0;

  /// Throws std::invalid_argument on negative coefficients or v_max <= 0.
  void validate() const;
};

struct Particle {
  Assignment position;
  std::vector<double> velocity;
  Assignment best_position;
  std::size_t best_fitness = 0;
};

struct GlobalBest {
  Assignment position;
  std::size_t fitness = 0;
};

double clamp_velocity(double v, double v_max);

/// Logistic transfer 1 / (1 + e^-v).
double sigmoid(double v);

/// Velocity rule with caller-supplied uniform draws: for each dimension d,
///   g(omega*v_d + c1*cognitive[d]*(pbest_d - x_d) + c2*social[d]*(gbest_d - x_d))
/// where bits enter as 0.0 / 1.0 and g clamps to [-v_max, v_max].
std::vector<double> update_velocity(const Particle& p, const GlobalBest& gbest,
                                    const PsoParams& params, std::span<const double> cognitive,
                                    std::span<const double> social);

/// Same rule, drawing two fresh uniforms per dimension from rng.
std::vector<double> update_velocity(const Particle& p, const GlobalBest& gbest,
                                    const PsoParams& params, RandomStream& rng);

/// Bit d is 1 iff draws[d] < sigmoid(velocity[d]).
Assignment update_position(std::span<const double> velocity, std::span<const double> draws);
Assignment update_position(std::span<const double> velocity, RandomStream& rng);

/// Velocity vector with components uniform in [-v_max, v_max].
std::vector<double> random_velocity(std::size_t size, double v_max, RandomStream& rng);

/// Evaluates p.position; replaces the personal best when strictly better, then
/// the global best when the personal best strictly exceeds it. Ties keep the
/// incumbent. Returns the fitness of the current position.
std::size_t refresh_bests(Particle& p, GlobalBest& gbest, const CnfFormula& formula);

/// refresh_bests for a position whose fitness is already known.
void refresh_bests(Particle& p, GlobalBest& gbest, std::size_t current_fitness);

}  // namespace mempso
