#include "enumkit/oracles/schaefer_decider.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "enumkit/core/errors.hpp"

namespace enumkit {

SchaeferDecider::SchaeferDecider(const GammaFormula& f, SchaeferKind kind) : kind_(kind), num_vars_(f.num_vars) {
  f.validate();
  std::map<std::string, CompiledRelation> compiled;
  for (const auto& [name, r] : f.language) compiled.emplace(name, relation_to_clausal_form(r, kind));

  for (const auto& c : f.constraints) {
    const auto& form = compiled.at(c.relation);
    auto var_at = [&](int pos) { return c.vars[static_cast<std::size_t>(pos - 1)]; };
    for (const auto& cl : form.clauses) {
      Clause inst;
      for (const auto& l : cl) inst.push_back({var_at(l.var), l.positive});
      auto norm = normalize_clause(inst);
      if (!norm) continue;
      if (norm->empty()) trivially_false_ = true;
      compiled_size_ += norm->size() + 1;
      clauses_.push_back(std::move(*norm));
    }
    for (const auto& eq : form.equations) {
      std::vector<int> vars;
      for (int p : eq.positions) {
        int v = var_at(p);
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) vars.push_back(v);
        else vars.erase(it);  // x xor x = 0
      }
      if (vars.empty()) {
        if (eq.rhs) trivially_false_ = true;
        continue;
      }
      std::sort(vars.begin(), vars.end());
      compiled_size_ += vars.size() + 1;
      equations_.push_back({std::move(vars), eq.rhs});
    }
  }
}

bool SchaeferDecider::decide(const PartialAssignment& partial) {
  if (partial.num_vars() != static_cast<std::size_t>(num_vars_))
    throw std::invalid_argument("partial assignment length differs from formula variable count");
  stats_.record(compiled_size_ + partial.prefix_len());
  if (trivially_false_) return false;
  switch (kind_) {
    case SchaeferKind::horn:
    case SchaeferKind::dualhorn: return decide_unit_propagation(partial);
    case SchaeferKind::bijunctive: return decide_two_sat(partial);
    case SchaeferKind::affine: return decide_linear(partial);
  }
  return false;
}

bool SchaeferDecider::decide_unit_propagation(const PartialAssignment& partial) const {
  const auto n = static_cast<std::size_t>(num_vars_);
  std::vector<std::int8_t> val(n + 1, -1);
  // occurrences[2*v + positive] lists clauses containing that literal
  std::vector<std::vector<std::size_t>> occurrences(2 * (n + 1));
  std::vector<std::size_t> remaining(clauses_.size());
  for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
    remaining[ci] = clauses_[ci].size();
    for (const auto& l : clauses_[ci]) occurrences[2 * static_cast<std::size_t>(l.var) + l.positive].push_back(ci);
  }
  std::vector<Literal> queue;
  auto assign = [&](Literal l) {
    auto& v = val[static_cast<std::size_t>(l.var)];
    if (v >= 0) return v == static_cast<std::int8_t>(l.positive);
    v = static_cast<std::int8_t>(l.positive);
    queue.push_back(l);
    return true;
  };
  for (std::size_t i = 0; i < partial.prefix_len(); ++i)
    if (!assign({static_cast<int>(i + 1), partial[i]})) return false;
  for (const auto& c : clauses_)
    if (c.size() == 1 && !assign(c.front())) return false;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Literal falsified = ~queue[head];
    for (auto ci : occurrences[2 * static_cast<std::size_t>(falsified.var) + falsified.positive]) {
      --remaining[ci];
      const auto& c = clauses_[ci];
      bool satisfied = std::any_of(c.begin(), c.end(), [&](const Literal& l) {
        return val[static_cast<std::size_t>(l.var)] == static_cast<std::int8_t>(l.positive);
      });
      if (satisfied) continue;
      if (remaining[ci] == 0) return false;
      if (remaining[ci] == 1) {
        for (const auto& l : c)
          if (val[static_cast<std::size_t>(l.var)] < 0 && !assign(l)) return false;
      }
    }
  }
  return true;
}

bool SchaeferDecider::decide_two_sat(const PartialAssignment& partial) const {
  const auto n = static_cast<std::size_t>(num_vars_);
  auto node = [](const Literal& l) { return 2 * static_cast<std::size_t>(l.var - 1) + (l.positive ? 0 : 1); };
  std::vector<std::vector<std::size_t>> graph(2 * n);
  auto implication = [&](const Literal& a, const Literal& b) { graph[node(a)].push_back(node(b)); };
  for (const auto& c : clauses_) {
    if (c.size() == 1) {
      implication(~c[0], c[0]);
    } else {
      implication(~c[0], c[1]);
      implication(~c[1], c[0]);
    }
  }
  for (std::size_t i = 0; i < partial.prefix_len(); ++i) {
    Literal l{static_cast<int>(i + 1), partial[i]};
    implication(~l, l);
  }

  // Tarjan's algorithm.
  std::vector<int> index(2 * n, -1), low(2 * n, 0), component(2 * n, -1);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(2 * n, false);
  int counter = 0, components = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : graph[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < 2 * n; ++v)
    if (index[v] < 0) visit(v);
  for (std::size_t v = 0; v < n; ++v)
    if (component[2 * v] == component[2 * v + 1]) return false;
  return true;
}

bool SchaeferDecider::decide_linear(const PartialAssignment& partial) const {
  const auto n = static_cast<std::size_t>(num_vars_);
  const std::size_t words = (n + 1 + 63) / 64;  // bit n holds the right-hand side
  using Row = std::vector<std::uint64_t>;
  auto set_bit = [](Row& r, std::size_t b) { r[b / 64] ^= std::uint64_t{1} << (b % 64); };
  auto get_bit = [](const Row& r, std::size_t b) { return (r[b / 64] >> (b % 64)) & 1U; };

  std::vector<Row> rows;
  for (const auto& e : equations_) {
    Row r(words, 0);
    for (int v : e.positions) set_bit(r, static_cast<std::size_t>(v - 1));
    if (e.rhs) set_bit(r, n);
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < partial.prefix_len(); ++i) {
    Row r(words, 0);
    set_bit(r, i);
    if (partial[i]) set_bit(r, n);
    rows.push_back(std::move(r));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !get_bit(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || !get_bit(rows[r], col)) continue;
      for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (get_bit(rows[r], n)) return false;
  return true;
}

bool schaefer_decide(const GammaFormula& f, const PartialAssignment& partial, SchaeferKind kind) {
  SchaeferDecider d(f, kind);
  return d.decide(partial);
}

}  // namespace enumkit
