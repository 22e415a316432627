#include "enumkit/oracles/sat_oracle.hpp"

#include <stdexcept>
#include <string>

#include "enumkit/core/errors.hpp"

namespace enumkit {

SatOracle::SatOracle(int num_vars, SatOptions options) : options_(options) { ensure_vars(num_vars); }

SatOracle::SatOracle(const CnfFormula& f, SatOptions options) : options_(options) {
  ensure_vars(f.num_vars);
  add_formula(f);
}

void SatOracle::ensure_vars(int n) {
  if (n <= num_vars_) return;
  num_vars_ = n;
  assigns_.resize(static_cast<std::size_t>(n) + 1, kUndef);
  watches_.resize(2 * (static_cast<std::size_t>(n) + 1));
}

void SatOracle::add_formula(const CnfFormula& f) {
  ensure_vars(f.num_vars);
  for (const auto& c : f.clauses) add_clause(c);
}

void SatOracle::add_clause(std::span<const Literal> clause) {
  auto normalized = normalize_clause(clause);
  if (!normalized) return;
  for (const auto& l : *normalized) ensure_vars(l.var);
  formula_size_ += normalized->size() + 1;
  ++num_clauses_;
  if (normalized->empty()) {
    has_empty_clause_ = true;
    return;
  }
  if (normalized->size() == 1) {
    units_.push_back(encode(normalized->front()));
    return;
  }
  std::vector<Lit> lits;
  lits.reserve(normalized->size());
  for (const auto& l : *normalized) lits.push_back(encode(l));
  const auto index = static_cast<std::uint32_t>(clauses_.size());
  watches_[lits[0]].push_back(index);
  watches_[lits[1]].push_back(index);
  clauses_.push_back(std::move(lits));
}

std::int8_t SatOracle::value(Lit l) const {
  auto v = assigns_[static_cast<std::size_t>(var_of(l))];
  if (v == kUndef) return kUndef;
  return static_cast<std::int8_t>((l & 1U) ? !v : v);
}

bool SatOracle::enqueue(Lit l) {
  auto v = value(l);
  if (v != kUndef) return v == 1;
  assigns_[static_cast<std::size_t>(var_of(l))] = static_cast<std::int8_t>((l & 1U) ? 0 : 1);
  trail_.push_back(l);
  return true;
}

bool SatOracle::propagate() {
  while (propagate_head_ < trail_.size()) {
    const Lit false_lit = negate(trail_[propagate_head_++]);
    auto& watch_list = watches_[false_lit];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t i = 0; i < watch_list.size(); ++i) {
      const auto ci = watch_list[i];
      if (conflict) {
        watch_list[keep++] = ci;
        continue;
      }
      auto& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        watch_list[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      watch_list[keep++] = ci;
      if (!enqueue(c[0])) conflict = true;
    }
    watch_list.resize(keep);
    if (conflict) return false;
  }
  return true;
}

void SatOracle::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    assigns_[static_cast<std::size_t>(var_of(trail_.back()))] = kUndef;
    trail_.pop_back();
  }
  propagate_head_ = std::min(propagate_head_, trail_size);
}

SatResult SatOracle::solve(std::span<const Literal> assumptions, bool want_model) {
  for (const auto& a : assumptions) {
    if (a.var < 1) throw std::invalid_argument("assumption variable must be >= 1");
    ensure_vars(a.var);
  }
  stats_.record(formula_size_ + assumptions.size());

  struct Decision {
    std::size_t trail_pos;
    Lit lit;
    bool flipped;
  };
  std::vector<Decision> decisions;
  SatResult result;

  auto finish = [&](SatStatus status) {
    result.status = status;
    if (status == SatStatus::sat && want_model) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(num_vars_));
      for (int v = 1; v <= num_vars_; ++v) bits[static_cast<std::size_t>(v - 1)] = assigns_[static_cast<std::size_t>(v)] == 1;
      result.model = Assignment(std::move(bits));
    }
    undo_to(0);
    return result;
  };

  if (has_empty_clause_) return finish(SatStatus::unsat);
  for (auto u : units_)
    if (!enqueue(u)) return finish(SatStatus::unsat);
  for (const auto& a : assumptions)
    if (!enqueue(encode(a))) return finish(SatStatus::unsat);
  if (!propagate()) return finish(SatStatus::unsat);

  std::uint64_t conflicts = 0;
  int next_var = 1;
  while (true) {
    while (next_var <= num_vars_ && assigns_[static_cast<std::size_t>(next_var)] != kUndef) ++next_var;
    if (next_var > num_vars_) return finish(SatStatus::sat);

    const Lit decision = encode(Literal::neg(next_var));
    decisions.push_back({trail_.size(), decision, false});
    enqueue(decision);

    while (!propagate()) {
      ++conflicts;
      ++total_conflicts_;
      if (options_.conflict_budget && conflicts > *options_.conflict_budget) {
        undo_to(0);
        throw ResourceLimit("SAT oracle exceeded its conflict budget of " +
                            std::to_string(*options_.conflict_budget));
      }
      while (!decisions.empty() && decisions.back().flipped) {
        undo_to(decisions.back().trail_pos);
        decisions.pop_back();
      }
      if (decisions.empty()) return finish(SatStatus::unsat);
      auto& d = decisions.back();
      undo_to(d.trail_pos);
      d.flipped = true;
      d.lit = negate(d.lit);
      enqueue(d.lit);
    }
    // Backtracking may have unassigned variables below next_var.
    next_var = 1;
  }
}

SatResult sat_decide(const CnfFormula& f, std::span<const Literal> assumptions, bool want_model, OracleStats* stats,
                     SatOptions options) {
  SatOracle oracle(f, options);
  auto r = oracle.solve(assumptions, want_model);
  if (stats) stats->record(oracle.stats().max_input_size);
  return r;
}

std::optional<Assignment> model_via_decisions(SatOracle& oracle) {
  if (!oracle.solve().sat()) return std::nullopt;
  const int n = oracle.num_vars();
  std::vector<Literal> fixed;
  fixed.reserve(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    fixed.push_back(Literal::neg(v));
    if (oracle.solve(fixed).sat()) continue;
    fixed.back() = Literal::pos(v);
    bits[static_cast<std::size_t>(v - 1)] = 1;
  }
  return Assignment(std::move(bits));
}

std::optional<Assignment> model_via_decisions(const CnfFormula& f, OracleStats* stats) {
  SatOracle oracle(f);
  auto m = model_via_decisions(oracle);
  if (stats) {
    stats->calls += oracle.stats().calls;
    stats->max_input_size = std::max(stats->max_input_size, oracle.stats().max_input_size);
  }
  return m;
}

}  // namespace enumkit
