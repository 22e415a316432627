#include "enumkit/structures/repairs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"

namespace enumkit {
namespace {

using Binding = std::map<std::string, std::string>;

// Calls visit(atom indices, binding) for every homomorphism of the body into
// the selected atoms.
void for_each_match(const DatabaseInstance& d, const Egd& egd, const std::vector<bool>& present,
                    const std::function<void(const std::vector<std::size_t>&, const Binding&)>& visit) {
  std::vector<std::size_t> chosen;
  Binding binding;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == egd.body.size()) {
      visit(chosen, binding);
      return;
    }
    const Atom& pattern = egd.body[k];
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!present[i]) continue;
      const Atom& fact = d.atom(i);
      if (fact.predicate != pattern.predicate || fact.args.size() != pattern.args.size()) continue;
      std::vector<std::string> bound_here;
      bool ok = true;
      for (std::size_t a = 0; a < fact.args.size() && ok; ++a) {
        const auto& term = pattern.args[a];
        if (!is_variable_token(term)) {
          ok = term == fact.args[a];
          continue;
        }
        auto it = binding.find(term);
        if (it == binding.end()) {
          binding.emplace(term, fact.args[a]);
          bound_here.push_back(term);
        } else {
          ok = it->second == fact.args[a];
        }
      }
      if (ok) {
        chosen.push_back(i);
        go(k + 1);
        chosen.pop_back();
      }
      for (const auto& v : bound_here) binding.erase(v);
    }
  };
  go(0);
}

}  // namespace

std::vector<ConflictSet> ground_egds(const DatabaseInstance& d, const std::vector<Egd>& egds) {
  std::set<ConflictSet> found;
  const std::vector<bool> all(d.size(), true);
  for (const auto& egd : egds) {
    egd.validate();
    for_each_match(d, egd, all, [&](const std::vector<std::size_t>& atoms, const Binding& b) {
      if (b.at(egd.lhs) != b.at(egd.rhs)) found.insert(ConflictSet(atoms.begin(), atoms.end()));
    });
  }
  std::vector<ConflictSet> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<ConflictSet> minimal;
  for (const auto& c : sorted) {
    bool subsumed = std::any_of(minimal.begin(), minimal.end(), [&](const ConflictSet& m) {
      return std::includes(c.begin(), c.end(), m.begin(), m.end());
    });
    if (!subsumed) minimal.push_back(c);
  }
  return minimal;
}

bool satisfies_egds(const DatabaseInstance& d, const std::vector<Egd>& egds, const Assignment& keep) {
  std::vector<bool> present(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) present[i] = keep[i];
  bool ok = true;
  for (const auto& egd : egds) {
    for_each_match(d, egd, present, [&](const std::vector<std::size_t>&, const Binding& b) {
      if (b.at(egd.lhs) != b.at(egd.rhs)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

CnfFormula minimal_hitting_set_encoding(int n, const std::vector<std::set<int>>& edges, bool complement) {
  auto in = [&](int v) { return complement ? Literal::neg(v) : Literal::pos(v); };
  CnfFormula f(n);
  int next = n + 1;
  std::vector<Clause> witnesses(static_cast<std::size_t>(n) + 1);
  for (const auto& e : edges) {
    Clause hit;
    for (int v : e) hit.push_back(in(v));
    f.add_clause(hit);
    for (int v : e) {
      const Literal t = Literal::pos(next++);
      for (int u : e)
        if (u != v) f.add_clause({~t, ~in(u)});
      witnesses[static_cast<std::size_t>(v)].push_back(t);
    }
  }
  // Every selected vertex needs an edge it alone hits.
  for (int v = 1; v <= n; ++v) {
    Clause c = witnesses[static_cast<std::size_t>(v)];
    c.push_back(~in(v));
    f.add_clause(c);
  }
  f.num_vars = std::max(f.num_vars, next - 1);
  return f;
}

StreamPtr<Assignment> repair_enum(const DatabaseInstance& d, const std::vector<Egd>& egds) {
  const int n = static_cast<int>(d.size());
  std::vector<std::set<int>> edges;
  for (const auto& c : ground_egds(d, egds)) {
    std::set<int> e;
    for (auto i : c) e.insert(static_cast<int>(i) + 1);
    edges.push_back(std::move(e));
  }
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  return flasher(std::make_shared<SatExtension>(minimal_hitting_set_encoding(n, edges, true), vars));
}

}  // namespace enumkit
