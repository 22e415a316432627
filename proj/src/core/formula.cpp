#include "enumkit/core/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "enumkit/core/errors.hpp"

namespace enumkit {

Literal Literal::from_dimacs(int code) {
  if (code == 0) throw std::invalid_argument("literal code 0");
  return code > 0 ? pos(code) : neg(-code);
}

std::optional<Clause> normalize_clause(std::span<const Literal> lits) {
  Clause out;
  out.reserve(lits.size());
  for (const auto& l : lits) {
    if (l.var < 1) throw std::invalid_argument("literal variable must be >= 1");
    bool seen = false;
    for (const auto& k : out) {
      if (k.var != l.var) continue;
      if (k.positive != l.positive) return std::nullopt;
      seen = true;
    }
    if (!seen) out.push_back(l);
  }
  return out;
}

Term normalize_term(std::span<const Literal> lits) {
  Term out;
  out.reserve(lits.size());
  for (const auto& l : lits) {
    if (l.var < 1) throw std::invalid_argument("literal variable must be >= 1");
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

void CnfFormula::add_clause(std::span<const Literal> lits) {
  auto c = normalize_clause(lits);
  if (!c) return;
  for (const auto& l : *c) num_vars = std::max(num_vars, l.var);
  clauses.push_back(std::move(*c));
}

std::size_t CnfFormula::size() const {
  std::size_t s = 0;
  for (const auto& c : clauses) s += c.size() + 1;
  return s;
}

bool CnfFormula::evaluate(const Assignment& a) const {
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return l.satisfied_by(a); });
  });
}

void DnfFormula::add_term(std::span<const Literal> lits) {
  auto t = normalize_term(lits);
  for (const auto& l : t) num_vars = std::max(num_vars, l.var);
  terms.push_back(std::move(t));
}

std::size_t DnfFormula::size() const {
  std::size_t s = 0;
  for (const auto& t : terms) s += t.size() + 1;
  return s;
}

bool DnfFormula::evaluate(const Assignment& a) const {
  return std::any_of(terms.begin(), terms.end(), [&](const Term& t) {
    return std::all_of(t.begin(), t.end(), [&](const Literal& l) { return l.satisfied_by(a); });
  });
}

int matrix_num_vars(const Matrix& m) {
  return std::visit([](const auto& f) { return f.num_vars; }, m);
}

std::size_t matrix_size(const Matrix& m) {
  return std::visit([](const auto& f) { return f.size(); }, m);
}

bool evaluate_matrix(const Matrix& m, const Assignment& a) {
  return std::visit([&](const auto& f) { return f.evaluate(a); }, m);
}

void QbfInstance::validate() const {
  const int n = num_vars();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  auto claim = [&](int v) {
    if (v < 1 || v > n) throw InvalidInstance("quantified variable " + std::to_string(v) + " out of range");
    if (owner[static_cast<std::size_t>(v)]++) throw InvalidInstance("variable " + std::to_string(v) + " bound twice");
  };
  for (int v : free_vars) claim(v);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0 && blocks[i].quantifier == blocks[i - 1].quantifier)
      throw InvalidInstance("quantifier blocks must alternate");
    for (int v : blocks[i].vars) claim(v);
  }
  for (int v = 1; v <= n; ++v)
    if (!owner[static_cast<std::size_t>(v)]) throw InvalidInstance("variable " + std::to_string(v) + " is not bound");
}

}  // namespace enumkit
