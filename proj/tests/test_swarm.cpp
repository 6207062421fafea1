#include <doctest.h>

#include <cmath>

#include "mempso/swarm.hpp"
#include "support.hpp"

using namespace mempso;
using mempso::testing::bits;

namespace {

Particle one_dim(double v, int x, int pbest) {
  Particle p;
  p.position = bits({x});
  p.velocity = {v};
  p.best_position = bits({pbest});
  return p;
}

}  // namespace

TEST_CASE("clamp_velocity branches") {
  CHECK(clamp_velocity(10.0, 4.0) == 4.0);
  CHECK(clamp_velocity(-10.0, 4.0) == -4.0);
  CHECK(clamp_velocity(1.5, 4.0) == 1.5);
  CHECK(clamp_velocity(4.0, 4.0) == 4.0);
}

TEST_CASE("sigmoid values and identities") {
  CHECK(sigmoid(0.0) == 0.5);
  // 1/(1+e^-4) = 0.98201379..., 1/(1+e^4) = 0.01798620...
  CHECK(std::abs(sigmoid(4.0) - 0.98201) < 1e-5);
  CHECK(std::abs(sigmoid(-4.0) - 0.01799) < 1e-5);
  CHECK(sigmoid(-800.0) >= 0.0);
  CHECK(sigmoid(800.0) <= 1.0);
  double prev = 0.0;
  for (double v = -10.0; v <= 10.0; v += 0.25) {
    CHECK(sigmoid(v) > prev);
    prev = sigmoid(v);
    CHECK(std::abs(sigmoid(v) + sigmoid(-v) - 1.0) < 1e-12);
  }
}

TEST_CASE("update_velocity follows the weighted rule") {
  const PsoParams params{1.0, 2.0, 2.0, 4.0};

  SUBCASE("vanishing differences leave zero velocity") {
    const auto p = one_dim(0.0, 1, 1);
    const GlobalBest g{bits({1}), 0};
    const double r1[] = {0.9}, r2[] = {0.3};
    CHECK(update_velocity(p, g, params, r1, r2)[0] == 0.0);
  }
  SUBCASE("0.5 + 2*0.25*1 + 2*0.5*1 = 2.0") {
    const auto p = one_dim(0.5, 0, 1);
    const GlobalBest g{bits({1}), 0};
    const double r1[] = {0.25}, r2[] = {0.5};
    CHECK(update_velocity(p, g, params, r1, r2)[0] == doctest::Approx(2.0));
  }
  SUBCASE("raw 7.9 clamps to 4") {
    const auto p = one_dim(3.9, 0, 1);
    const GlobalBest g{bits({1}), 0};
    const double r1[] = {1.0}, r2[] = {1.0};
    CHECK(update_velocity(p, g, params, r1, r2)[0] == 4.0);
  }
  SUBCASE("dimension mismatch") {
    const auto p = one_dim(0.0, 0, 1);
    const GlobalBest g{bits({1, 0}), 0};
    const double r1[] = {1.0}, r2[] = {1.0};
    CHECK_THROWS_AS(update_velocity(p, g, params, r1, r2), std::invalid_argument);
  }
}

TEST_CASE("property: velocities stay clamped; zero coefficients are identity") {
  RandomStream rng(3, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    PsoParams params{rng.uniform() * 2.0, rng.uniform() * 4.0, rng.uniform() * 4.0,
                     0.1 + rng.uniform() * 8.0};
    Particle p;
    p.position = mempso::testing::random_assignment(n, rng);
    p.best_position = mempso::testing::random_assignment(n, rng);
    p.velocity = random_velocity(n, params.v_max, rng);
    const GlobalBest g{mempso::testing::random_assignment(n, rng), 0};

    for (double v : update_velocity(p, g, params, rng)) {
      CHECK(v <= params.v_max);
      CHECK(v >= -params.v_max);
    }
    const PsoParams still{1.0, 0.0, 0.0, params.v_max};
    CHECK(update_velocity(p, g, still, rng) == p.velocity);
  }
}

TEST_CASE("update_position uses a strict threshold") {
  const double v1[] = {2.0}, d1[] = {0.5};
  CHECK(update_position(v1, d1)[0]);  // sigmoid(2) = 0.8808 > 0.5
  const double v0[] = {0.0}, d0[] = {0.5};
  CHECK_FALSE(update_position(v0, d0)[0]);
  const double vhi[] = {1000.0}, dhi[] = {0.999999};
  CHECK(update_position(vhi, dhi)[0]);
  const double vlo[] = {-1000.0}, dlo[] = {0.0};
  CHECK_FALSE(update_position(vlo, dlo)[0]);
}

TEST_CASE("update_position one-rate matches sigmoid within 3 standard errors") {
  RandomStream rng(17, 1);
  constexpr std::size_t draws = 100000;
  for (double v : {0.0, 1.0, -2.5, 4.0}) {
    const std::vector<double> velocity(draws, v);
    const auto a = update_position(velocity, rng);
    double ones = 0;
    for (std::size_t i = 0; i < draws; ++i) ones += a[i] ? 1 : 0;
    const double p = sigmoid(v);
    const double se = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(ones / draws - p) <= 3 * se);
    if (v == 0.0) CHECK(std::abs(ones / draws - 0.5) <= 0.01);
  }
}

TEST_CASE("refresh_bests keeps incumbents on ties and never decreases") {
  const auto f = mempso::testing::example_formula();  // (F,F,T,F) satisfies 2, all-true 4
  Particle p;
  p.velocity.assign(4, 0.0);
  p.best_position = bits({1, 0, 0, 0});
  p.best_fitness = 3;
  GlobalBest g{bits({1, 0, 0, 0}), 3};

  SUBCASE("worse current position") {
    p.position = bits({0, 0, 1, 0});
    CHECK(refresh_bests(p, g, f) == 2);
    CHECK(p.best_position == bits({1, 0, 0, 0}));
    CHECK(p.best_fitness == 3);
    CHECK(g.fitness == 3);
  }
  SUBCASE("tie keeps incumbent") {
    p.position = bits({1, 1, 0, 0});  // clause 2 false: fitness 3
    CHECK(refresh_bests(p, g, f) == 3);
    CHECK(p.best_position == bits({1, 0, 0, 0}));
    CHECK(g.position == bits({1, 0, 0, 0}));
  }
  SUBCASE("satisfying position becomes both bests") {
    p.position = bits({1, 1, 1, 1});
    CHECK(refresh_bests(p, g, f) == 4);
    CHECK(p.best_position == bits({1, 1, 1, 1}));
    CHECK(g.position == bits({1, 1, 1, 1}));
    CHECK(g.fitness == 4);
  }
}

TEST_CASE("random_velocity covers the symmetric clamp interval") {
  RandomStream rng(2, 2);
  const auto v = random_velocity(10000, 4.0, rng);
  double lo = 0, hi = 0;
  for (double x : v) {
    CHECK(std::abs(x) <= 4.0);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  CHECK(lo < -3.9);
  CHECK(hi > 3.9);
}

TEST_CASE("PsoParams validation") {
  CHECK_NOTHROW(PsoParams{}.validate());
  CHECK_THROWS(PsoParams{1.0, 2.0, 2.0, 0.0}.validate());
  CHECK_THROWS(PsoParams{-1.0, 2.0, 2.0, 4.0}.validate());
  CHECK_THROWS(PsoParams{1.0, -2.0, 2.0, 4.0}.validate());
}
