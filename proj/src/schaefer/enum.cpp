#include "enumkit/schaefer/enum.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"

namespace enumkit {

CnfFormula gamma_to_cnf(const GammaFormula& f) {
  f.validate();
  CnfFormula out(f.num_vars);
  for (const auto& c : f.constraints) {
    const auto& r = f.relation(c.relation);
    for (std::uint32_t t = 0; t < (1U << r.arity()); ++t) {
      if (r.contains(t)) continue;
      Clause cl;
      for (int i = 0; i < r.arity(); ++i) cl.push_back({c.vars[static_cast<std::size_t>(i)], !r.coordinate(t, i)});
      out.add_clause(cl);
    }
  }
  out.num_vars = f.num_vars;
  return out;
}

std::optional<SchaeferKind> gamma_enum_kind(const GammaFormula& f) {
  return select_schaefer_kind(classify_language(f.language));
}

StreamPtr<Assignment> enum_sat_gamma(const GammaFormula& f) {
  f.validate();
  if (auto kind = gamma_enum_kind(f)) return flasher(std::make_shared<SchaeferExtension>(f, *kind));
  return flasher(std::make_shared<SatExtension>(gamma_to_cnf(f)));
}

namespace {

// Model set of a constraint over m variables as a mask over the 2^m
// assignments; assignment index has variable 1 as the most significant bit.
std::uint32_t constraint_mask(const BoolRelation& r, const std::vector<int>& vars, int m) {
  std::uint32_t mask = 0;
  for (std::uint32_t a = 0; a < (1U << m); ++a) {
    std::uint32_t t = 0;
    for (int v : vars) t = (t << 1) | ((a >> (m - v)) & 1U);
    if (r.contains(t)) mask |= 1U << a;
  }
  return mask;
}

bool mask_is_gadget(std::uint32_t mask, int m) {
  if (std::popcount(mask) != 3) return false;
  int seen[4] = {0, 0, 0, 0};
  for (std::uint32_t a = 0; a < (1U << m); ++a)
    if ((mask >> a) & 1U) ++seen[a >> (m - 2)];
  return seen[0] == 1 && seen[1] == 1 && seen[2] == 0 && seen[3] == 1;
}

}  // namespace

bool is_imp_gadget(const GammaFormula& g) {
  g.validate();
  if (g.num_vars < 2 || g.num_vars > 16) return false;
  int seen[4] = {0, 0, 0, 0};
  Assignment x(static_cast<std::size_t>(g.num_vars));
  for (std::uint32_t a = 0; a < (1U << g.num_vars); ++a) {
    for (int i = 0; i < g.num_vars; ++i) x.set(static_cast<std::size_t>(i), (a >> (g.num_vars - 1 - i)) & 1U);
    if (g.evaluate(x)) ++seen[a >> (g.num_vars - 2)];
  }
  return seen[0] == 1 && seen[1] == 1 && seen[2] == 0 && seen[3] == 1;
}

std::optional<GammaFormula> imp_gadget_search(const ConstraintLanguage& gamma, int max_aux) {
  if (max_aux < 0 || max_aux > 2) throw ResourceLimit("gadget search allows at most 2 auxiliary variables");
  for (const auto& [name, r] : gamma)
    if (r.arity() > 4) throw ResourceLimit("gadget search is limited to relations of arity 4");

  for (int aux = 0; aux <= max_aux; ++aux) {
    const int m = 2 + aux;
    const std::uint32_t full = static_cast<std::uint32_t>((1ULL << (1U << m)) - 1);
    std::vector<Constraint> candidates;
    std::vector<std::uint32_t> masks;
    for (const auto& [name, r] : gamma) {
      const int k = r.arity();
      std::vector<int> vars(static_cast<std::size_t>(k), 1);
      while (true) {
        const auto mask = constraint_mask(r, vars, m);
        if (mask != full && std::find(masks.begin(), masks.end(), mask) == masks.end()) {
          candidates.push_back({name, vars});
          masks.push_back(mask);
        }
        int i = k - 1;
        while (i >= 0 && vars[static_cast<std::size_t>(i)] == m) vars[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++vars[static_cast<std::size_t>(i)];
      }
    }
    // parent[mask] = (previous mask, candidate index)
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::size_t>> parent;
    std::deque<std::uint32_t> frontier{full};
    parent[full] = {full, candidates.size()};
    while (!frontier.empty()) {
      const auto cur = frontier.front();
      frontier.pop_front();
      if (mask_is_gadget(cur, m)) {
        GammaFormula g;
        g.language = gamma;
        g.num_vars = m;
        for (auto at = cur; at != full; at = parent[at].first) g.constraints.push_back(candidates[parent[at].second]);
        std::reverse(g.constraints.begin(), g.constraints.end());
        return g;
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto nxt = cur & masks[i];
        if (parent.emplace(nxt, std::make_pair(cur, i)).second) frontier.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

bool is_constant_true(const BoolRelation& r) { return r.arity() == 1 && r.tuples() == std::set<std::uint32_t>{1}; }
bool is_constant_false(const BoolRelation& r) { return r.arity() == 1 && r.tuples() == std::set<std::uint32_t>{0}; }

namespace {

struct ConstantSplit {
  std::vector<int> renumber;  // original var -> new var, 0 if forced
  std::vector<std::int8_t> forced;  // -1 free, 0, 1, 2 = both
  int remaining = 0;
};

ConstantSplit split_constants(const GammaFormula& f) {
  ConstantSplit s;
  const auto n = static_cast<std::size_t>(f.num_vars);
  s.forced.assign(n + 1, -1);
  s.renumber.assign(n + 1, 0);
  for (const auto& c : f.constraints) {
    const auto& r = f.relation(c.relation);
    const bool t = is_constant_true(r), fl = is_constant_false(r);
    if (!t && !fl) continue;
    auto& slot = s.forced[static_cast<std::size_t>(c.vars[0])];
    const std::int8_t want = t ? 1 : 0;
    slot = (slot < 0 || slot == want) ? want : 2;
  }
  for (std::size_t v = 1; v <= n; ++v)
    if (s.forced[v] < 0) s.renumber[v] = ++s.remaining;
  return s;
}

std::string fresh_name(const GammaFormula& f, const std::string& base) {
  std::string name = base;
  while (f.language.count(name) && !(f.language.at(name) == BoolRelation::from_strings({"00", "01", "11"}))) name += "_";
  return name;
}

}  // namespace

GammaReduction constants_elimination() {
  GammaReduction red;
  red.sigma = [](const GammaFormula& f) {
    f.validate();
    const auto s = split_constants(f);
    const int m = s.remaining;
    const int fv = m + 1, tv = m + 2;
    GammaFormula out;
    const std::string imp = fresh_name(f, "IMP");
    for (const auto& [name, r] : f.language)
      if (!is_constant_true(r) && !is_constant_false(r)) out.language.emplace(name, r);
    out.language.emplace(imp, BoolRelation::from_strings({"00", "01", "11"}));
    out.num_vars = m + 2;
    bool contradictory = false;
    for (const auto& c : f.constraints) {
      const auto& r = f.relation(c.relation);
      if (is_constant_true(r) || is_constant_false(r)) continue;
      Constraint nc{c.relation, {}};
      for (int v : c.vars) {
        const auto forced = s.forced[static_cast<std::size_t>(v)];
        nc.vars.push_back(forced < 0 ? s.renumber[static_cast<std::size_t>(v)] : forced == 1 ? tv : fv);
      }
      out.constraints.push_back(std::move(nc));
    }
    for (std::size_t v = 1; v < s.forced.size(); ++v) contradictory |= s.forced[v] == 2;
    for (int x = 1; x <= m; ++x) {
      out.constraints.push_back({imp, {x, tv}});
      out.constraints.push_back({imp, {fv, x}});
    }
    // Implied by the pairs above whenever m > 0; without it f = 1, t = 0
    // would be a third spurious model when every variable is forced.
    out.constraints.push_back({imp, {fv, tv}});
    if (contradictory) out.constraints.push_back({imp, {tv, fv}});
    return out;
  };
  red.tau = [](const GammaFormula& f, const Assignment& y) -> StreamPtr<Assignment> {
    const auto s = split_constants(f);
    const auto m = static_cast<std::size_t>(s.remaining);
    if (y.size() != m + 2 || y[m] || !y[m + 1]) return make_vector_stream<Assignment>({});
    Assignment x(static_cast<std::size_t>(f.num_vars));
    for (std::size_t v = 1; v < s.forced.size(); ++v) {
      if (s.forced[v] == 2) return make_vector_stream<Assignment>({});
      x.set(v - 1, s.forced[v] < 0 ? y[static_cast<std::size_t>(s.renumber[v] - 1)] : s.forced[v] == 1);
    }
    return make_vector_stream<Assignment>({x});
  };
  red.bound = [](std::size_t) { return std::size_t{1}; };
  red.size = [](const GammaFormula& f) { return f.constraints.size() + static_cast<std::size_t>(f.num_vars); };
  return red;
}

}  // namespace enumkit
