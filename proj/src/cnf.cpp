#include "mempso/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace mempso {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? "end of input: " + what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Clause::Clause(std::vector<Literal> literals) {
  literals_.reserve(literals.size());
  for (const auto& lit : literals) {
    if (std::find(literals_.begin(), literals_.end(), lit) == literals_.end())
      literals_.push_back(lit);
  }
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b != 0 ? 1 : 0;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].size() == 0)
      throw std::invalid_argument("clause " + std::to_string(i) + " is empty");
    for (const auto& lit : clauses_[i]) {
      if (lit.variable >= variable_count_)
        throw std::invalid_argument("clause " + std::to_string(i) + " mentions variable " +
                                    std::to_string(lit.variable) + " >= " +
                                    std::to_string(variable_count_));
    }
  }
}

bool literal_true(const Literal& lit, const Assignment& a) { return a[lit.variable] != lit.negated; }

bool clause_satisfied(const Clause& clause, const Assignment& a) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](const Literal& lit) { return literal_true(lit, a); });
}

namespace {

void check_length(const CnfFormula& formula, const Assignment& a) {
  if (a.size() != formula.variable_count())
    throw InvalidAssignment("assignment has " + std::to_string(a.size()) +
                            " bits, formula has " + std::to_string(formula.variable_count()) +
                            " variables");
}

}  // namespace

std::size_t evaluate(const CnfFormula& formula, const Assignment& a) {
  check_length(formula, a);
  return static_cast<std::size_t>(
      std::count_if(formula.clauses().begin(), formula.clauses().end(),
                    [&](const Clause& c) { return clause_satisfied(c, a); }));
}

std::vector<std::size_t> unsatisfied_clauses(const CnfFormula& formula, const Assignment& a) {
  check_length(formula, a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < formula.clause_count(); ++i)
    if (!clause_satisfied(formula.clause(i), a)) out.push_back(i);
  return out;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);

    if (view.front() == 'c') continue;
    // SATLIB files end with a "%" line followed by a stray "0".
    if (view.front() == '%') break;

    if (view.front() == 'p') {
      if (header) throw ParseError(lineno, "duplicate problem line");
      std::istringstream hs{std::string(view)};
      std::string p, fmt;
      long long n = -1, m = -1;
      if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 0 || m < 0)
        throw ParseError(lineno, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      std::string rest;
      if (hs >> rest) throw ParseError(lineno, "trailing tokens on problem line");
      header.emplace(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      continue;
    }

    if (!header) throw ParseError(lineno, "clause data before problem line");
    const auto [n, m] = *header;

    while (!view.empty()) {
      const auto start = view.find_first_not_of(" \t");
      if (start == std::string_view::npos) break;
      view.remove_prefix(start);
      const auto stop = std::min(view.find_first_of(" \t"), view.size());
      const auto token = view.substr(0, stop);
      view.remove_prefix(stop);

      long long value = 0;
      const auto* tail = token.data() + token.size();
      const auto* begin = token.data();
      if (*begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, tail, value);
      if (ec != std::errc() || ptr != tail)
        throw ParseError(lineno, "invalid token '" + std::string(token) + "'");

      if (value == 0) {
        if (pending.empty()) throw ParseError(lineno, "empty clause");
        if (clauses.size() == m)
          throw ParseError(lineno, "more clauses than the " + std::to_string(m) + " declared");
        clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      const auto magnitude = static_cast<unsigned long long>(value < 0 ? -value : value);
      if (magnitude > n)
        throw ParseError(lineno, "literal " + std::to_string(value) + " out of range for " +
                                     std::to_string(n) + " variables");
      if (pending.empty()) pending_line = lineno;
      pending.push_back(Literal{static_cast<std::uint32_t>(magnitude - 1), value < 0});
    }
  }

  if (!header) throw ParseError(0, "missing problem line");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (clauses.size() != header->second)
    throw ParseError(0, "declared " + std::to_string(header->second) + " clauses, found " +
                            std::to_string(clauses.size()));
  return CnfFormula(header->first, std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& formula,
                  const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << formula.variable_count() << ' ' << formula.clause_count() << '\n';
  for (const auto& clause : formula.clauses()) {
    for (const auto& lit : clause) {
      if (lit.negated) out << '-';
      out << lit.variable + 1 << ' ';
    }
    out << "0\n";
  }
}

std::string write_dimacs(const CnfFormula& formula, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_dimacs(out, formula, comments);
  return out.str();
}

}  // namespace mempso
