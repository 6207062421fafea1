#include "mempso/swarm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mempso {

void PsoParams::validate() const {
  if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be positive");
  if (omega < 0.0 || c1 < 0.0 || c2 < 0.0)
    throw std::invalid_argument("omega, c1 and c2 must be non-negative");
}

double clamp_velocity(double v, double v_max) {
  if (v > v_max) return v_max;
  if (v < -v_max) return -v_max;
  return v;
}

double sigmoid(double v) {
  // Split by sign so exp() never overflows.
  if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
  const double e = std::exp(v);
  return e / (1.0 + e);
}

std::vector<double> update_velocity(const Particle& p, const GlobalBest& gbest,
                                    const PsoParams& params, std::span<const double> cognitive,
                                    std::span<const double> social) {
  const std::size_t n = p.position.size();
  if (p.velocity.size() != n || p.best_position.size() != n || gbest.position.size() != n ||
      cognitive.size() != n || social.size() != n)
    throw std::invalid_argument("update_velocity: dimension mismatch");

  std::vector<double> out(n);
  for (std::size_t d = 0; d < n; ++d) {
    const double x = p.position[d] ? 1.0 : 0.0;
    const double own = p.best_position[d] ? 1.0 : 0.0;
    const double swarm = gbest.position[d] ? 1.0 : 0.0;
    const double raw = params.omega * p.velocity[d] + params.c1 * cognitive[d] * (own - x) +
                       params.c2 * social[d] * (swarm - x);
    out[d] = clamp_velocity(raw, params.v_max);
  }
  return out;
}

std::vector<double> update_velocity(const Particle& p, const GlobalBest& gbest,
                                    const PsoParams& params, RandomStream& rng) {
  const std::size_t n = p.position.size();
  std::vector<double> cognitive(n), social(n);
  for (std::size_t d = 0; d < n; ++d) {
    cognitive[d] = rng.uniform();
    social[d] = rng.uniform();
  }
  return update_velocity(p, gbest, params, cognitive, social);
}

Assignment update_position(std::span<const double> velocity, std::span<const double> draws) {
  if (velocity.size() != draws.size())
    throw std::invalid_argument("update_position: dimension mismatch");
  Assignment a(velocity.size());
  for (std::size_t d = 0; d < velocity.size(); ++d) a.set(d, draws[d] < sigmoid(velocity[d]));
  return a;
}

Assignment update_position(std::span<const double> velocity, RandomStream& rng) {
  Assignment a(velocity.size());
  for (std::size_t d = 0; d < velocity.size(); ++d) a.set(d, rng.uniform() < sigmoid(velocity[d]));
  return a;
}

std::vector<double> random_velocity(std::size_t size, double v_max, RandomStream& rng) {
  std::vector<double> v(size);
  for (auto& component : v) component = clamp_velocity((2.0 * rng.uniform() - 1.0) * v_max, v_max);
  return v;
}

void refresh_bests(Particle& p, GlobalBest& gbest, std::size_t current_fitness) {
  if (current_fitness > p.best_fitness) {
    p.best_fitness = current_fitness;
    p.best_position = p.position;
  }
  if (p.best_fitness > gbest.fitness) {
    gbest.fitness = p.best_fitness;
    gbest.position = p.best_position;
  }
}

std::size_t refresh_bests(Particle& p, GlobalBest& gbest, const CnfFormula& formula) {
  const std::size_t fitness = evaluate(formula, p.position);
  refresh_bests(p, gbest, fitness);
  return fitness;
}

}  // namespace mempso
