#include "mempso/local_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mempso {

void LocalSearchConfig::validate() const {
  if (max_depth && *max_depth == 0) throw std::invalid_argument("local search depth must be >= 1");
}

ClauseTracker::ClauseTracker(const CnfFormula& formula, Assignment start)
    : clause_vars_(formula.clause_count()),
      var_clauses_(formula.variable_count()),
      true_count_(formula.clause_count(), 0),
      gain_(formula.variable_count(), 0),
      assignment_(std::move(start)) {
  if (assignment_.size() != formula.variable_count())
    throw InvalidAssignment("assignment has " + std::to_string(assignment_.size()) +
                            " bits, formula has " + std::to_string(formula.variable_count()) +
                            " variables");

  for (std::size_t c = 0; c < formula.clause_count(); ++c) {
    auto& occs = clause_vars_[c];
    for (const auto& lit : formula.clause(c)) {
      auto it = std::find_if(occs.begin(), occs.end(),
                             [&](const Occurrence& o) { return o.variable == lit.variable; });
      if (it == occs.end()) {
        occs.push_back(Occurrence{lit.variable, 0, 0});
        it = occs.end() - 1;
        var_clauses_[lit.variable].push_back(static_cast<std::uint32_t>(c));
      }
      (lit.negated ? it->negative : it->positive) += 1;
      if (literal_true(lit, assignment_)) ++true_count_[c];
    }
    if (true_count_[c] > 0) ++satisfied_;
    apply_clause(c, +1);
  }
}

void ClauseTracker::apply_clause(std::size_t c, std::int64_t sign) {
  const std::uint32_t count = true_count_[c];
  const std::int64_t now = count > 0 ? 1 : 0;
  for (const auto& occ : clause_vars_[c]) {
    const std::uint32_t after = count - true_on(occ) + false_on(occ);
    gain_[occ.variable] += sign * ((after > 0 ? 1 : 0) - now);
  }
}

void ClauseTracker::flip(std::size_t v) {
  for (const auto c : var_clauses_[v]) apply_clause(c, -1);

  for (const auto c : var_clauses_[v]) {
    const auto& occs = clause_vars_[c];
    const auto occ = *std::find_if(occs.begin(), occs.end(),
                                   [&](const Occurrence& o) { return o.variable == v; });
    const bool was = true_count_[c] > 0;
    true_count_[c] = true_count_[c] - true_on(occ) + false_on(occ);
    const bool is = true_count_[c] > 0;
    if (was && !is) --satisfied_;
    if (!was && is) ++satisfied_;
  }
  assignment_.flip(v);

  for (const auto c : var_clauses_[v]) apply_clause(c, +1);
}

std::vector<Assignment> neighbors(const Assignment& a) {
  std::vector<Assignment> out(a.size(), a);
  for (std::size_t k = 0; k < a.size(); ++k) out[k].flip(k);
  return out;
}

LocalSearchResult local_search(const CnfFormula& formula, const Assignment& start,
                               const LocalSearchConfig& cfg) {
  cfg.validate();
  ClauseTracker tracker(formula, start);
  const std::size_t depth = cfg.depth_for(formula);
  const std::size_t m = formula.clause_count();
  const auto& gains = tracker.gains();

  std::size_t moves = 0;
  while (moves < depth && tracker.fitness() < m) {
    std::size_t chosen = gains.size();
    if (cfg.pivot == PivotRule::GreedyAscent) {
      const auto it = std::find_if(gains.begin(), gains.end(), [](std::int64_t g) { return g > 0; });
      chosen = static_cast<std::size_t>(it - gains.begin());
    } else {
      // max_element returns the first maximum, i.e. the lowest index on ties.
      const auto it = std::max_element(gains.begin(), gains.end());
      if (it != gains.end() && *it > 0) chosen = static_cast<std::size_t>(it - gains.begin());
    }
    if (chosen == gains.size()) break;
    tracker.flip(chosen);
    ++moves;
  }
  return LocalSearchResult{tracker.assignment(), tracker.fitness(), moves};
}

}  // namespace mempso
