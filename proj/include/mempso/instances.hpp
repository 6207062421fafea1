#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mempso/cnf.hpp"

namespace mempso {

/// Fixed-clause-length uniform random 3-SAT.
struct RandomInstanceSpec {
  std::size_t variable_count = 3;
  std::size_t clause_count = 0;
  std::uint64_t seed = 0;
};

/// Each clause draws 3 distinct variables uniformly without replacement and
/// an independent fair coin per polarity. Repeated clauses are allowed.
/// Throws std::invalid_argument when variable_count < 3.
CnfFormula generate(const RandomInstanceSpec& spec);

/// Comment lines recording the generator parameters, for write_dimacs.
std::vector<std::string> provenance_comments(const RandomInstanceSpec& spec);

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxVariables = 24;

struct OracleResult {
  std::size_t max_fitness = 0;
  Assignment witness;
  bool satisfiable = false;
};

/// Exhaustive MAX-SAT over all 2^n assignments; the witness is the
/// lexicographically smallest maximiser (variable 0 most significant).
/// Accepts clauses of any width. Throws OracleRefused when n > 24.
OracleResult brute_force(const CnfFormula& formula);

}  // namespace mempso
