#include "enumkit/oracles/sigma2.hpp"

#include <algorithm>
#include <string>

#include "enumkit/core/errors.hpp"

namespace enumkit {
namespace {

std::vector<int> occurring_vars(const Matrix& m) {
  std::vector<int> vars;
  std::visit(
      [&](const auto& f) {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, CnfFormula>) {
          for (const auto& c : f.clauses)
            for (const auto& l : c) vars.push_back(l.var);
        } else {
          for (const auto& t : f.terms)
            for (const auto& l : t) vars.push_back(l.var);
        }
      },
      m);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

Sigma2Oracle::Sigma2Oracle(std::vector<int> exists_vars, std::vector<int> forall_vars, Matrix matrix,
                           Sigma2Options options)
    : exists_(std::move(exists_vars)), forall_(std::move(forall_vars)), matrix_(std::move(matrix)), options_(options) {
  num_vars_ = matrix_num_vars(matrix_);
  for (int v : exists_) num_vars_ = std::max(num_vars_, v);
  for (int v : forall_) num_vars_ = std::max(num_vars_, v);
  is_exists_.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
  is_forall_.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
  for (int v : exists_) {
    if (v < 1) throw InvalidInstance("exists variable must be >= 1");
    is_exists_[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : forall_) {
    if (v < 1) throw InvalidInstance("forall variable must be >= 1");
    if (is_exists_[static_cast<std::size_t>(v)]) throw InvalidInstance("variable quantified twice");
    is_forall_[static_cast<std::size_t>(v)] = 1;
  }
}

void Sigma2Oracle::add_side_clause(std::span<const Literal> clause) {
  auto c = normalize_clause(clause);
  if (!c) return;
  for (const auto& l : *c)
    if (l.var > num_vars_ || !is_exists_[static_cast<std::size_t>(l.var)])
      throw InvalidInstance("side clause may only mention exists variables");
  side_size_ += c->size() + 1;
  side_.push_back(std::move(*c));
}

std::size_t Sigma2Oracle::input_size() const noexcept { return matrix_size(matrix_) + side_size_; }

bool Sigma2Oracle::decide(std::span<const Literal> assumptions) {
  std::vector<std::uint8_t> assumed(static_cast<std::size_t>(num_vars_) + 1, 0);
  std::vector<std::int8_t> fixed(static_cast<std::size_t>(num_vars_) + 1, -1);
  for (const auto& a : assumptions) {
    if (a.var < 1 || a.var > num_vars_) throw InvalidInstance("assumption variable out of range");
    assumed[static_cast<std::size_t>(a.var)] = 1;
  }
  for (int v : occurring_vars(matrix_)) {
    const auto i = static_cast<std::size_t>(v);
    if (!is_exists_[i] && !is_forall_[i] && !assumed[i])
      throw InvalidInstance("matrix variable " + std::to_string(v) + " is not covered");
  }
  stats_.record(input_size() + assumptions.size());
  witness_.reset();

  SatOracle candidates(num_vars_, options_.sat);
  for (const auto& c : side_) candidates.add_clause(c);

  for (std::size_t round = 0;; ++round) {
    if (round >= options_.max_iterations)
      throw ResourceLimit("exists-forall loop exceeded " + std::to_string(options_.max_iterations) + " iterations");
    ++iterations_;
    ++np_calls_;
    auto cand = candidates.solve(assumptions, true);
    if (!cand.sat()) return false;

    std::fill(fixed.begin(), fixed.end(), -1);
    for (const auto& a : assumptions) {
      auto& slot = fixed[static_cast<std::size_t>(a.var)];
      if (slot >= 0 && slot != static_cast<std::int8_t>(a.positive)) return false;  // contradictory assumptions
      slot = static_cast<std::int8_t>(a.positive);
    }
    for (int v : exists_) {
      auto& slot = fixed[static_cast<std::size_t>(v)];
      if (slot < 0) slot = static_cast<std::int8_t>(cand.model->value_of(v));
    }

    auto cex = find_counterexample(fixed);
    if (!cex) {
      witness_ = std::move(cand.model);
      return true;
    }
    Clause block;
    auto pick = [&](const Literal& l) {
      if (is_exists_[static_cast<std::size_t>(l.var)] && !assumed[static_cast<std::size_t>(l.var)]) block.push_back(l);
    };
    if (const auto* cnf = std::get_if<CnfFormula>(&matrix_)) {
      for (const auto& c : cnf->clauses) {
        if (std::any_of(c.begin(), c.end(), [&](const Literal& l) { return l.satisfied_by(*cex); })) continue;
        for (const auto& l : c) pick(l);
        break;
      }
    } else {
      for (const auto& t : std::get<DnfFormula>(matrix_).terms) {
        // A false literal outside the candidate's control kills the term for every x.
        bool dead = std::any_of(t.begin(), t.end(), [&](const Literal& l) {
          const auto i = static_cast<std::size_t>(l.var);
          return !l.satisfied_by(*cex) && (!is_exists_[i] || assumed[i]);
        });
        if (dead) continue;
        for (const auto& l : t) {
          if (!l.satisfied_by(*cex)) {
            pick(l);
            break;
          }
        }
      }
    }
    auto normalized = normalize_clause(block);
    if (!normalized || normalized->empty()) return false;
    candidates.add_clause(*normalized);
  }
}

std::optional<Assignment> Sigma2Oracle::find_counterexample(const std::vector<std::int8_t>& fixed) {
  const auto n = static_cast<std::size_t>(num_vars_);
  Assignment base(n);
  std::vector<int> open;
  for (std::size_t v = 1; v <= n; ++v) {
    if (fixed[v] >= 0) base.set(v - 1, fixed[v] == 1);
    else if (is_forall_[v]) open.push_back(static_cast<int>(v));
  }

  if (open.size() <= options_.exhaustive_forall_limit) {
    const std::uint64_t count = std::uint64_t{1} << open.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      for (std::size_t j = 0; j < open.size(); ++j)
        base.set(static_cast<std::size_t>(open[j] - 1), (mask >> (open.size() - 1 - j)) & 1U);
      if (!evaluate_matrix(matrix_, base)) return base;
    }
    return std::nullopt;
  }

  // Satisfiability of the negated matrix with everything but Y fixed.
  SatOracle check(num_vars_, options_.sat);
  if (const auto* cnf = std::get_if<CnfFormula>(&matrix_)) {
    if (cnf->clauses.empty()) return std::nullopt;
    Clause some_false;
    for (std::size_t i = 0; i < cnf->clauses.size(); ++i) {
      const int selector = num_vars_ + 1 + static_cast<int>(i);
      for (const auto& l : cnf->clauses[i]) check.add_clause({Literal::neg(selector), ~l});
      some_false.push_back(Literal::pos(selector));
    }
    check.add_clause(some_false);
  } else {
    for (const auto& t : std::get<DnfFormula>(matrix_).terms) {
      Clause c;
      for (const auto& l : t) c.push_back(~l);
      check.add_clause(c);
    }
  }
  std::vector<Literal> assumptions;
  for (std::size_t v = 1; v <= n; ++v)
    if (fixed[v] >= 0) assumptions.push_back({static_cast<int>(v), fixed[v] == 1});
  ++np_calls_;
  auto r = check.solve(assumptions, true);
  if (!r.sat()) return std::nullopt;
  std::vector<std::uint8_t> bits(r.model->bits().begin(), r.model->bits().begin() + static_cast<std::ptrdiff_t>(n));
  return Assignment(std::move(bits));
}

bool sigma2_decide(const std::vector<int>& exists_vars, const std::vector<int>& forall_vars, const Matrix& matrix,
                   std::span<const Literal> assumptions, OracleStats* stats, Sigma2Options options) {
  Sigma2Oracle oracle(exists_vars, forall_vars, matrix, options);
  bool r = oracle.decide(assumptions);
  if (stats) stats->record(oracle.stats().max_input_size);
  return r;
}

}  // namespace enumkit
