#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "enumkit/core/assignment.hpp"

namespace enumkit {

struct Literal {
  int var = 1;  // >= 1
  bool positive = true;

  static Literal pos(int v) { return {v, true}; }
  static Literal neg(int v) { return {v, false}; }
  static Literal from_dimacs(int code);
  int to_dimacs() const { return positive ? var : -var; }

  Literal operator~() const { return {var, !positive}; }
  bool satisfied_by(const Assignment& a) const { return a.value_of(var) == positive; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var <=> b.var;
    return b.positive <=> a.positive;
  }
};

using Clause = std::vector<Literal>;
using Term = std::vector<Literal>;

/// Removes repeated literals (first occurrence wins). Returns nullopt for a
/// tautological clause, which carries no constraint.
std::optional<Clause> normalize_clause(std::span<const Literal> lits);

/// Removes repeated literals from a conjunction; complementary pairs stay
/// (such a term is simply unsatisfiable).
Term normalize_term(std::span<const Literal> lits);

/// Clause-set formula. Clauses are stored normalized; tautologies are dropped.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  CnfFormula() = default;
  explicit CnfFormula(int n) : num_vars(n) {}

  /// Normalizes and appends; widens num_vars if a literal exceeds it.
  void add_clause(std::span<const Literal> lits);
  void add_clause(std::initializer_list<Literal> lits) {
    add_clause(std::span<const Literal>(lits.begin(), lits.size()));
  }

  /// Oracle input measure: literal occurrences plus one terminator per clause.
  std::size_t size() const;
  bool evaluate(const Assignment& a) const;
};

struct DnfFormula {
  int num_vars = 0;
  std::vector<Term> terms;

  void add_term(std::span<const Literal> lits);
  void add_term(std::initializer_list<Literal> lits) {
    add_term(std::span<const Literal>(lits.begin(), lits.size()));
  }

  std::size_t size() const;
  bool evaluate(const Assignment& a) const;
};

using Matrix = std::variant<CnfFormula, DnfFormula>;

int matrix_num_vars(const Matrix& m);
std::size_t matrix_size(const Matrix& m);
bool evaluate_matrix(const Matrix& m, const Assignment& a);

enum class Quantifier { exists, forall };

struct QuantifierBlock {
  Quantifier quantifier = Quantifier::exists;
  std::vector<int> vars;
};

/// psi(free) = Q1 block1 ... Qk blockk . matrix
struct QbfInstance {
  std::vector<int> free_vars;
  std::vector<QuantifierBlock> blocks;
  Matrix matrix;

  int num_vars() const { return matrix_num_vars(matrix); }
  std::size_t depth() const { return blocks.size(); }
  bool matrix_is_dnf() const { return std::holds_alternative<DnfFormula>(matrix); }

  /// Checks the partition and alternation invariants; throws InvalidInstance.
  void validate() const;
};

}  // namespace enumkit
