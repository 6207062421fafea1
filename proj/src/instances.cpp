#include "mempso/instances.hpp"

#include "mempso/random.hpp"

namespace mempso {

CnfFormula generate(const RandomInstanceSpec& spec) {
  const std::size_t n = spec.variable_count;
  if (n < 3) throw std::invalid_argument("random 3-SAT needs at least 3 variables");

  RandomStream rng(spec.seed, 0);
  std::vector<Clause> clauses;
  clauses.reserve(spec.clause_count);
  for (std::size_t c = 0; c < spec.clause_count; ++c) {
    std::vector<Literal> lits;
    while (lits.size() < 3) {
      const auto v = static_cast<std::uint32_t>(rng.below(n));
      bool seen = false;
      for (const auto& l : lits) seen = seen || l.variable == v;
      if (!seen) lits.push_back(Literal{v, false});
    }
    for (auto& l : lits) l.negated = rng.coin();
    clauses.emplace_back(std::move(lits));
  }
  return CnfFormula(n, std::move(clauses));
}

std::vector<std::string> provenance_comments(const RandomInstanceSpec& spec) {
  return {"random 3-SAT vars=" + std::to_string(spec.variable_count) +
          " clauses=" + std::to_string(spec.clause_count) + " seed=" + std::to_string(spec.seed)};
}

OracleResult brute_force(const CnfFormula& formula) {
  const std::size_t n = formula.variable_count();
  if (n > kOracleMaxVariables)
    throw OracleRefused("oracle refuses " + std::to_string(n) + " variables (limit " +
                        std::to_string(kOracleMaxVariables) + ")");

  // Enumeration index k encodes variable i at bit (n-1-i), so increasing k
  // walks assignments in lexicographic order with variable 0 most significant.
  struct Masks {
    std::uint32_t positive = 0;
    std::uint32_t negative = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(formula.clause_count());
  for (const auto& clause : formula.clauses()) {
    Masks mk;
    for (const auto& lit : clause) {
      const std::uint32_t bit = std::uint32_t{1} << (n - 1 - lit.variable);
      (lit.negated ? mk.negative : mk.positive) |= bit;
    }
    masks.push_back(mk);
  }

  const std::size_t m = formula.clause_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>(total - 1);
  std::size_t best = 0;
  std::uint64_t best_index = 0;
  bool any = false;
  for (std::uint64_t k = 0; k < total; ++k) {
    const auto bits = static_cast<std::uint32_t>(k);
    std::size_t sat = 0;
    for (const auto& mk : masks) sat += ((bits & mk.positive) | (~bits & all & mk.negative)) != 0;
    if (!any || sat > best) {
      any = true;
      best = sat;
      best_index = k;
      if (best == m) break;
    }
  }

  Assignment witness(n);
  for (std::size_t i = 0; i < n; ++i) witness.set(i, ((best_index >> (n - 1 - i)) & 1) != 0);
  return OracleResult{best, std::move(witness), best == m};
}

}  // namespace mempso
