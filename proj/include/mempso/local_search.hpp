#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mempso/cnf.hpp"

namespace mempso {

enum class PivotRule { GreedyAscent, SteepestAscent };

struct LocalSearchConfig {
  PivotRule pivot = PivotRule::SteepestAscent;
  /// Bound on accepted moves; unset means the formula's variable count.
  std::optional<std::size_t> max_depth;

  std::size_t depth_for(const CnfFormula& formula) const {
    return max_depth.value_or(formula.variable_count());
  }
  /// Throws std::invalid_argument if max_depth is set to 0.
  void validate() const;
};

struct LocalSearchResult {
  Assignment assignment;
  std::size_t fitness = 0;
  /// Accepted moves. moves == depth means the depth budget stopped the search.
  std::size_t moves = 0;
};

/// Assignment plus per-clause true-literal counts and per-variable flip
/// gains, kept consistent under single-bit flips.
class ClauseTracker {
 public:
  ClauseTracker(const CnfFormula& formula, Assignment start);

  const Assignment& assignment() const { return assignment_; }
  std::size_t fitness() const { return satisfied_; }

  /// Change in fitness if variable v were flipped.
  std::int64_t gain(std::size_t v) const { return gain_[v]; }
  const std::vector<std::int64_t>& gains() const { return gain_; }

  void flip(std::size_t v);

 private:
  struct Occurrence {
    std::uint32_t variable;
    std::uint32_t positive;  // literals x_v in the clause
    std::uint32_t negative;  // literals !x_v in the clause
  };

  std::uint32_t true_on(const Occurrence& occ) const {
    return assignment_[occ.variable] ? occ.positive : occ.negative;
  }
  std::uint32_t false_on(const Occurrence& occ) const {
    return assignment_[occ.variable] ? occ.negative : occ.positive;
  }
  // Adds sign * (contribution of clause c) to the gains of its variables.
  void apply_clause(std::size_t c, std::int64_t sign);

  std::vector<std::vector<Occurrence>> clause_vars_;
  std::vector<std::vector<std::uint32_t>> var_clauses_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::int64_t> gain_;
  Assignment assignment_;
  std::size_t satisfied_ = 0;
};

/// The 1-flip neighbourhood: n assignments, the k-th differing from a in bit k.
std::vector<Assignment> neighbors(const Assignment& a);

/// Strictly improving 1-flip hill climbing. Steepest ascent takes the best
/// gain (lowest variable on ties); greedy ascent takes the first positive gain
/// in index order. Stops at a local optimum, at full satisfaction, or after
/// the depth budget.
LocalSearchResult local_search(const CnfFormula& formula, const Assignment& start,
                               const LocalSearchConfig& cfg);

}  // namespace mempso
