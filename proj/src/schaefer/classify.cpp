#include "enumkit/schaefer/classify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "enumkit/core/errors.hpp"

namespace enumkit {
namespace {

template <class Op>
bool closed_pairwise(const BoolRelation& r, Op op) {
  for (auto a : r.tuples())
    for (auto b : r.tuples())
      if (!r.contains(op(a, b))) return false;
  return true;
}

template <class Op>
bool closed_triplewise(const BoolRelation& r, Op op) {
  for (auto a : r.tuples())
    for (auto b : r.tuples())
      for (auto c : r.tuples())
        if (!r.contains(op(a, b, c))) return false;
  return true;
}

struct MaskClause {
  std::uint32_t neg = 0;
  std::uint32_t pos = 0;

  bool satisfied(std::uint32_t t) const { return (t & pos) != 0 || (~t & neg) != 0; }
  bool subsumes(const MaskClause& o) const { return (neg & ~o.neg) == 0 && (pos & ~o.pos) == 0; }
};

Clause to_clause(const MaskClause& m, int arity) {
  Clause c;
  for (int i = 0; i < arity; ++i) {
    const std::uint32_t bit = 1U << (arity - 1 - i);
    if (m.neg & bit) c.push_back(Literal::neg(i + 1));
    if (m.pos & bit) c.push_back(Literal::pos(i + 1));
  }
  return c;
}

std::vector<MaskClause> implied_clauses(const BoolRelation& r, SchaeferKind kind) {
  const int k = r.arity();
  const std::uint32_t full = (1U << k) - 1;
  std::vector<MaskClause> candidates;
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = 0; b <= full; ++b) {
      if (a & b) continue;
      const MaskClause m{a, b};
      const int negs = std::popcount(a);
      const int poss = std::popcount(b);
      bool shape = false;
      switch (kind) {
        case SchaeferKind::horn: shape = poss <= 1; break;
        case SchaeferKind::dualhorn: shape = negs <= 1; break;
        case SchaeferKind::bijunctive: shape = negs + poss <= 2; break;
        case SchaeferKind::affine: break;
      }
      if (!shape || negs + poss == 0) continue;
      if (std::all_of(r.tuples().begin(), r.tuples().end(), [&](auto t) { return m.satisfied(t); }))
        candidates.push_back(m);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const MaskClause& x, const MaskClause& y) {
    auto wx = std::popcount(x.neg | x.pos), wy = std::popcount(y.neg | y.pos);
    if (wx != wy) return wx < wy;
    return std::pair(x.neg, x.pos) > std::pair(y.neg, y.pos);
  });
  std::vector<MaskClause> kept;
  for (const auto& c : candidates)
    if (std::none_of(kept.begin(), kept.end(), [&](const MaskClause& k2) { return k2.subsumes(c); }))
      kept.push_back(c);
  return kept;
}

std::vector<LinearEquation> affine_equations(const BoolRelation& r) {
  const int k = r.arity();
  const std::uint32_t full = (1U << k) - 1;
  const auto t0 = *r.tuples().begin();
  // Rows of the orthogonal complement, kept in reduced echelon form.
  std::vector<std::uint32_t> basis;
  for (std::uint32_t a = 1; a <= full; ++a) {
    const auto parity0 = std::popcount(a & t0) & 1;
    bool constant = std::all_of(r.tuples().begin(), r.tuples().end(),
                                [&](auto t) { return (std::popcount(a & t) & 1) == parity0; });
    if (!constant) continue;
    auto v = a;
    for (auto b : basis)
      if (v & std::bit_floor(b)) v ^= b;
    if (v == 0) continue;
    for (auto& b : basis)
      if (b & std::bit_floor(v)) b ^= v;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  std::vector<LinearEquation> eqs;
  for (auto a : basis) {
    LinearEquation e;
    for (int i = 0; i < k; ++i)
      if (a & (1U << (k - 1 - i))) e.positions.push_back(i + 1);
    e.rhs = (std::popcount(a & t0) & 1) != 0;
    eqs.push_back(std::move(e));
  }
  return eqs;
}

bool has_flag(const SchaeferClass& c, SchaeferKind k) {
  switch (k) {
    case SchaeferKind::horn: return c.horn;
    case SchaeferKind::dualhorn: return c.dualhorn;
    case SchaeferKind::bijunctive: return c.bijunctive;
    case SchaeferKind::affine: return c.affine;
  }
  return false;
}

}  // namespace

SchaeferClass classify_relation(const BoolRelation& r) {
  if (r.arity() > kMaxRelationArity) throw ResourceLimit("relation arity exceeds classifier cap");
  const std::uint32_t full = (1U << r.arity()) - 1;
  SchaeferClass c;
  c.horn = closed_pairwise(r, [](auto a, auto b) { return a & b; });
  c.dualhorn = closed_pairwise(r, [](auto a, auto b) { return a | b; });
  c.bijunctive = closed_triplewise(r, [](auto a, auto b, auto d) { return (a & b) | (a & d) | (b & d); });
  c.affine = closed_triplewise(r, [](auto a, auto b, auto d) { return a ^ b ^ d; });
  c.zero_valid = r.contains(0);
  c.one_valid = r.contains(full);
  return c;
}

SchaeferClass classify_language(const std::map<std::string, BoolRelation>& language) {
  SchaeferClass all{true, true, true, true, true, true};
  for (const auto& [name, r] : language) {
    auto c = classify_relation(r);
    all.horn &= c.horn;
    all.dualhorn &= c.dualhorn;
    all.bijunctive &= c.bijunctive;
    all.affine &= c.affine;
    all.zero_valid &= c.zero_valid;
    all.one_valid &= c.one_valid;
  }
  return all;
}

const char* to_string(SchaeferKind k) {
  switch (k) {
    case SchaeferKind::horn: return "horn";
    case SchaeferKind::dualhorn: return "dualhorn";
    case SchaeferKind::bijunctive: return "bijunctive";
    case SchaeferKind::affine: return "affine";
  }
  return "?";
}

std::optional<SchaeferKind> select_schaefer_kind(const SchaeferClass& c) {
  for (auto k : {SchaeferKind::horn, SchaeferKind::dualhorn, SchaeferKind::bijunctive, SchaeferKind::affine})
    if (has_flag(c, k)) return k;
  return std::nullopt;
}

std::vector<std::uint32_t> compiled_models(const CompiledRelation& c, int arity) {
  std::vector<std::uint32_t> models;
  for (std::uint32_t t = 0; t < (1U << arity); ++t) {
    auto bit = [&](int pos) { return ((t >> (arity - pos)) & 1U) != 0; };
    bool ok = std::all_of(c.clauses.begin(), c.clauses.end(), [&](const Clause& cl) {
      return std::any_of(cl.begin(), cl.end(), [&](const Literal& l) { return bit(l.var) == l.positive; });
    });
    ok = ok && std::all_of(c.equations.begin(), c.equations.end(), [&](const LinearEquation& e) {
      bool x = false;
      for (int p : e.positions) x ^= bit(p);
      return x == e.rhs;
    });
    if (ok) models.push_back(t);
  }
  return models;
}

CompiledRelation relation_to_clausal_form(const BoolRelation& r, SchaeferKind target) {
  if (!has_flag(classify_relation(r), target))
    throw InvalidInstance(std::string("relation is not ") + to_string(target));
  CompiledRelation out;
  out.kind = target;
  if (target == SchaeferKind::affine) {
    out.equations = affine_equations(r);
  } else {
    for (const auto& m : implied_clauses(r, target)) out.clauses.push_back(to_clause(m, r.arity()));
  }
  auto models = compiled_models(out, r.arity());
  if (!std::equal(models.begin(), models.end(), r.tuples().begin(), r.tuples().end()))
    throw std::logic_error("compiled form does not reproduce the relation");
  return out;
}

}  // namespace enumkit
