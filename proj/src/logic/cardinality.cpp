#include "enumkit/logic/cardinality.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "enumkit/core/errors.hpp"

namespace enumkit {
namespace {

// A counter cell: constant or literal.
struct Cell {
  enum Kind { false_, true_, lit } kind = false_;
  Literal l;

  static Cell constant(bool b) { return {b ? true_ : false_, {}}; }
  static Cell of(Literal x) { return {lit, x}; }
  Cell operator~() const {
    if (kind == lit) return of(~l);
    return constant(kind == false_);
  }
};

void emit(CnfFormula& out, std::initializer_list<Cell> cells) {
  Clause c;
  for (const auto& x : cells) {
    if (x.kind == Cell::true_) return;
    if (x.kind == Cell::lit) c.push_back(x.l);
  }
  out.add_clause(c);
}

}  // namespace

CnfFormula encode_cardinality(const CardinalityConstraint& c, int fresh_var_base) {
  const int n = static_cast<int>(c.vars.size());
  if (c.bound < 0 || c.bound > n) throw InvalidInstance("cardinality bound out of range");
  if (std::set<int>(c.vars.begin(), c.vars.end()).size() != c.vars.size())
    throw InvalidInstance("cardinality constraint repeats a variable");

  int top = 0;
  switch (c.sense) {
    case CardinalitySense::at_most:
    case CardinalitySense::exactly: top = std::min(c.bound + 1, n); break;
    case CardinalitySense::at_least: top = c.bound; break;
  }

  CnfFormula out;
  for (int v : c.vars) out.num_vars = std::max(out.num_vars, v);
  int next_var = fresh_var_base;
  // prev[j] = cell for "at least j of the first i vars", j = 0..top
  std::vector<Cell> prev(static_cast<std::size_t>(top) + 1, Cell::constant(false));
  prev[0] = Cell::constant(true);
  for (int i = 1; i <= n; ++i) {
    const Cell x = Cell::of(Literal::pos(c.vars[static_cast<std::size_t>(i - 1)]));
    std::vector<Cell> cur(prev.size(), Cell::constant(false));
    cur[0] = Cell::constant(true);
    for (int j = 1; j <= std::min(i, top); ++j) {
      const Cell keep = prev[static_cast<std::size_t>(j)];
      const Cell step = prev[static_cast<std::size_t>(j - 1)];
      const Cell s = Cell::of(Literal::pos(next_var++));
      // s <=> keep or (x and step)
      emit(out, {~keep, s});
      emit(out, {~x, ~step, s});
      emit(out, {~s, keep, x});
      emit(out, {~s, keep, step});
      cur[static_cast<std::size_t>(j)] = s;
    }
    prev = std::move(cur);
  }
  out.num_vars = std::max(out.num_vars, next_var - 1);

  const bool upper = c.sense != CardinalitySense::at_least;
  const bool lower = c.sense != CardinalitySense::at_most;
  if (upper && c.bound + 1 <= n) emit(out, {~prev[static_cast<std::size_t>(c.bound + 1)]});
  if (lower && c.bound >= 1) emit(out, {prev[static_cast<std::size_t>(c.bound)]});
  return out;
}

void add_cardinality(CnfFormula& f, const CardinalityConstraint& c) {
  int base = f.num_vars + 1;
  for (int v : c.vars) base = std::max(base, v + 1);
  auto enc = encode_cardinality(c, base);
  for (const auto& cl : enc.clauses) f.add_clause(cl);
  f.num_vars = std::max(f.num_vars, enc.num_vars);
}

}  // namespace enumkit
