#pragma once

// Test-only oracles. These deliberately avoid the library's evaluation and
// search code paths so they can check them independently.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mempso/cnf.hpp"
#include "mempso/instances.hpp"
#include "mempso/random.hpp"

namespace mempso::testing {

/// (p1 | p2 | !p3) & (!p1 | p2 | p3) & (!p1 | !p2 | p3) & (p1 | !p3 | p4)
inline CnfFormula example_formula() {
  auto lit = [](int v) { return Literal{static_cast<std::uint32_t>((v < 0 ? -v : v) - 1), v < 0}; };
  std::vector<Clause> clauses;
  for (const auto& c : std::vector<std::vector<int>>{{1, 2, -3}, {-1, 2, 3}, {-1, -2, 3}, {1, -3, 4}}) {
    std::vector<Literal> lits;
    for (int v : c) lits.push_back(lit(v));
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(4, std::move(clauses));
}

inline Assignment bits(std::initializer_list<int> values) {
  Assignment a(values.size());
  std::size_t i = 0;
  for (int v : values) a.set(i++, v != 0);
  return a;
}

/// Satisfied-clause count by direct double loop.
inline std::size_t naive_fitness(const CnfFormula& f, const Assignment& a) {
  std::size_t sat = 0;
  for (const auto& clause : f.clauses()) {
    bool any = false;
    for (const auto& lit : clause.literals())
      if ((a.bits()[lit.variable] != 0) != lit.negated) any = true;
    sat += any ? 1 : 0;
  }
  return sat;
}

/// Maximum satisfied count by recursive enumeration.
inline std::size_t naive_max_fitness(const CnfFormula& f) {
  Assignment a(f.variable_count());
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == f.variable_count()) {
      best = std::max(best, naive_fitness(f, a));
      return;
    }
    a.set(i, false);
    self(self, i + 1);
    a.set(i, true);
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

/// True iff no single-bit flip of a strictly improves fitness.
inline bool is_one_flip_optimum(const CnfFormula& f, const Assignment& a) {
  const std::size_t base = naive_fitness(f, a);
  for (std::size_t v = 0; v < a.size(); ++v) {
    Assignment b = a;
    b.flip(v);
    if (naive_fitness(f, b) > base) return false;
  }
  return true;
}

inline Assignment random_assignment(std::size_t n, RandomStream& rng) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, rng.coin());
  return a;
}

/// Random CNF with mixed clause widths 1..4, including occasional
/// tautologies and repeated variables.
inline CnfFormula random_mixed_formula(std::size_t n, std::size_t m, RandomStream& rng) {
  std::vector<Clause> clauses;
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t width = 1 + rng.below(4);
    std::vector<Literal> lits;
    for (std::size_t k = 0; k < width; ++k)
      lits.push_back(Literal{static_cast<std::uint32_t>(rng.below(n)), rng.coin()});
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(n, std::move(clauses));
}

}  // namespace mempso::testing
