#pragma once

// Exhaustive reference evaluators. Deliberately written against raw bit
// masks (variable v is bit n - v) rather than the library's evaluators.

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"

namespace enumkit::testing {

inline bool bit_of(std::uint64_t mask, int n, int var) { return (mask >> (n - var)) & 1U; }

inline Assignment mask_to_assignment(std::uint64_t mask, int n) {
  Assignment a(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) a.set(static_cast<std::size_t>(v - 1), bit_of(mask, n, v));
  return a;
}

inline std::uint64_t assignment_to_mask(const Assignment& a) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = (m << 1) | (a[i] ? 1U : 0U);
  return m;
}

inline bool cnf_holds(const CnfFormula& f, std::uint64_t mask, int n) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (const auto& l : c) sat = sat || bit_of(mask, n, l.var) == l.positive;
    if (!sat) return false;
  }
  return true;
}

inline bool dnf_holds(const DnfFormula& d, std::uint64_t mask, int n) {
  for (const auto& t : d.terms) {
    bool all = true;
    for (const auto& l : t) all = all && bit_of(mask, n, l.var) == l.positive;
    if (all) return true;
  }
  return false;
}

inline bool matrix_holds(const Matrix& m, std::uint64_t mask, int n) {
  if (const auto* c = std::get_if<CnfFormula>(&m)) return cnf_holds(*c, mask, n);
  return dnf_holds(std::get<DnfFormula>(m), mask, n);
}

/// Models over 1..n in ascending (lex) order.
inline std::vector<Assignment> cnf_models(const CnfFormula& f, int n) {
  std::vector<Assignment> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (cnf_holds(f, m, n)) out.push_back(mask_to_assignment(m, n));
  return out;
}

inline bool cnf_satisfiable_with(const CnfFormula& f, int n, const std::vector<Literal>& assumptions) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (const auto& a : assumptions) ok = ok && bit_of(m, n, a.var) == a.positive;
    if (ok && cnf_holds(f, m, n)) return true;
  }
  return false;
}

/// Nested evaluation of a prefix over a full-variable mask.
inline bool qbf_holds(const QbfInstance& q, std::uint64_t mask, std::size_t block = 0) {
  const int n = q.num_vars();
  if (block == q.blocks.size()) return matrix_holds(q.matrix, mask, n);
  const auto& vars = q.blocks[block].vars;
  const bool exists = q.blocks[block].quantifier == Quantifier::exists;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << vars.size()); ++sub) {
    std::uint64_t m = mask;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (n - vars[j]);
      m = ((sub >> j) & 1U) ? (m | bit) : (m & ~bit);
    }
    const bool r = qbf_holds(q, m, block + 1);
    if (exists && r) return true;
    if (!exists && !r) return false;
  }
  return !exists;
}

/// Free-variable assignments (free_vars order) making q true, lex.
inline std::vector<Assignment> qbf_models(const QbfInstance& q) {
  const int n = q.num_vars();
  const auto k = q.free_vars.size();
  std::vector<Assignment> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((x >> (k - 1 - i)) & 1U) m |= std::uint64_t{1} << (n - q.free_vars[i]);
    if (qbf_holds(q, m)) out.push_back(mask_to_assignment(x, static_cast<int>(k)));
  }
  return out;
}

inline bool gamma_holds(const GammaFormula& f, std::uint64_t mask) {
  for (const auto& c : f.constraints) {
    const auto& r = f.language.at(c.relation);
    std::uint32_t t = 0;
    for (int v : c.vars) t = (t << 1) | (bit_of(mask, f.num_vars, v) ? 1U : 0U);
    if (!r.tuples().count(t)) return false;
  }
  return true;
}

inline std::vector<Assignment> gamma_models(const GammaFormula& f) {
  std::vector<Assignment> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.num_vars); ++m)
    if (gamma_holds(f, m)) out.push_back(mask_to_assignment(m, f.num_vars));
  return out;
}

/// Keeps the members of `sets` (as masks) that are minimal / maximal under
/// inclusion, or of extremal popcount.
inline std::vector<std::uint64_t> subset_minimal(const std::vector<std::uint64_t>& sets) {
  std::vector<std::uint64_t> out;
  for (auto a : sets) {
    bool minimal = true;
    for (auto b : sets) minimal = minimal && !(b != a && (b & a) == b);
    if (minimal) out.push_back(a);
  }
  return out;
}

inline std::vector<std::uint64_t> subset_maximal(const std::vector<std::uint64_t>& sets) {
  std::vector<std::uint64_t> out;
  for (auto a : sets) {
    bool maximal = true;
    for (auto b : sets) maximal = maximal && !(b != a && (b & a) == a);
    if (maximal) out.push_back(a);
  }
  return out;
}

inline std::vector<std::uint64_t> extremal_weight(const std::vector<std::uint64_t>& sets, bool minimum) {
  if (sets.empty()) return {};
  int best = std::popcount(sets.front());
  for (auto s : sets) best = minimum ? std::min(best, std::popcount(s)) : std::max(best, std::popcount(s));
  std::vector<std::uint64_t> out;
  for (auto s : sets)
    if (std::popcount(s) == best) out.push_back(s);
  return out;
}

inline std::vector<Assignment> to_assignments(const std::vector<std::uint64_t>& masks, int n) {
  std::vector<Assignment> out;
  for (auto m : masks) out.push_back(mask_to_assignment(m, n));
  return out;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end());
}

template <class T>
bool has_duplicates(const std::vector<T>& v) {
  return as_set(v).size() != v.size();
}

template <class T>
bool strictly_increasing(const std::vector<T>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

}  // namespace enumkit::testing
