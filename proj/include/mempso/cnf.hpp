#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mempso {

class InvalidAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// DIMACS syntax or consistency error. line() is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Literal {
  std::uint32_t variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals. Construction drops repeated literals (same
/// variable, same polarity); complementary pairs are kept.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Truth assignment, one bit per variable. Bit i is the value of variable i.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size, bool value = false) : bits_(size, value ? 1 : 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// "1011..." in variable order.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  /// Throws std::invalid_argument if a clause is empty or mentions a
  /// variable >= variable_count.
  CnfFormula(std::size_t variable_count, std::vector<Clause> clauses);

  std::size_t variable_count() const { return variable_count_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::size_t variable_count_ = 0;
  std::vector<Clause> clauses_;
};

bool literal_true(const Literal& lit, const Assignment& a);
bool clause_satisfied(const Clause& clause, const Assignment& a);

/// Number of clauses with at least one true literal.
std::size_t evaluate(const CnfFormula& formula, const Assignment& a);

/// Ascending indices of the clauses that are false under a.
std::vector<std::size_t> unsatisfied_clauses(const CnfFormula& formula, const Assignment& a);

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
CnfFormula read_dimacs_file(const std::string& path);

/// Canonical DIMACS text. Each comment is emitted as a "c " line before the header.
std::string write_dimacs(const CnfFormula& formula, const std::vector<std::string>& comments = {});
void write_dimacs(std::ostream& out, const CnfFormula& formula,
                  const std::vector<std::string>& comments = {});

}  // namespace mempso
