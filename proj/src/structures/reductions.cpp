#include "enumkit/structures/reductions.hpp"

#include <string>

#include "enumkit/core/errors.hpp"

namespace enumkit {

TransDomReduction trans_to_dom() {
  TransDomReduction red;
  red.sigma = [](const Hypergraph& h) {
    const int n = h.num_vertices();
    const int m = static_cast<int>(h.edges().size());
    if (n < 1 || m < 1) throw InvalidInstance("hypergraph needs at least one vertex and one edge");
    Graph g(n + m + 1);
    const int apex = n + m + 1;
    for (int x = 1; x <= n; ++x) {
      for (int z = x + 1; z <= n; ++z) g.add_edge(x, z);
      g.add_edge(x, apex);
    }
    int e_index = 0;
    for (const auto& e : h.edges()) {
      const int ye = n + 1 + e_index++;
      for (int x : e) g.add_edge(x, ye);
      for (int yf = ye + 1; yf <= n + m; ++yf) g.add_edge(ye, yf);
    }
    return g;
  };
  red.tau = [](const Hypergraph& h, const Assignment& d) -> StreamPtr<Assignment> {
    const auto n = static_cast<std::size_t>(h.num_vertices());
    for (std::size_t i = n; i < d.size(); ++i)
      if (d[i]) return make_vector_stream<Assignment>({});
    std::vector<std::uint8_t> bits(d.bits().begin(), d.bits().begin() + static_cast<std::ptrdiff_t>(n));
    return make_vector_stream<Assignment>({Assignment(std::move(bits))});
  };
  red.bound = [](std::size_t) { return std::size_t{1}; };
  red.size = [](const Hypergraph& h) { return static_cast<std::size_t>(h.num_vertices()) + h.edges().size(); };
  return red;
}

ColourReduction threecol_to_fourcol() {
  ColourReduction red;
  red.sigma = [](const Graph& g) {
    const int n = g.num_vertices();
    Graph out(n + 1);
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 1; v <= n; ++v) out.add_edge(v, n + 1);
    return out;
  };
  red.tau = [](const Graph& g, const Colouring& c) -> StreamPtr<Colouring> {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    const auto apex = c.at(n);
    Colouring out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto& x : out) {
      if (x == apex) x = 3;
      else if (x == 3) x = apex;
    }
    return make_vector_stream<Colouring>({out});
  };
  red.bound = [](std::size_t) { return std::size_t{4}; };
  red.size = [](const Graph& g) { return static_cast<std::size_t>(g.num_vertices()) + g.edges().size(); };
  return red;
}

namespace {

struct PiShape {
  std::vector<int> x;
  std::vector<int> y;
  const DnfFormula* matrix = nullptr;
};

PiShape check_pi1(const QbfInstance& psi) {
  psi.validate();
  PiShape s;
  s.x = psi.free_vars;
  if (psi.blocks.size() > 1 || (psi.blocks.size() == 1 && psi.blocks[0].quantifier != Quantifier::forall))
    throw InvalidInstance("expected a single forall block");
  if (!psi.blocks.empty()) s.y = psi.blocks[0].vars;
  s.matrix = std::get_if<DnfFormula>(&psi.matrix);
  if (!s.matrix) throw InvalidInstance("matrix must be in DNF");
  if (s.x.empty()) throw InvalidInstance("at least one free variable is required");
  for (const auto& t : s.matrix->terms)
    if (t.empty() || t.size() > 3) throw InvalidInstance("every implicant must have at most 3 literals");
  return s;
}

Atom atom(std::string pred, std::vector<std::string> args) { return {std::move(pred), std::move(args)}; }

}  // namespace

DatabaseFile pi1sat_to_repair_sigma(const QbfInstance& psi) {
  const auto s = check_pi1(psi);
  const int k = static_cast<int>(s.x.size());
  const int l = static_cast<int>(s.y.size());
  auto p = [](int i) { return "p" + std::to_string(i); };

  DatabaseFile out;
  out.database = DatabaseInstance({"0", "1"});
  for (int i = 1; i <= k; ++i) {
    out.database.add_atom(atom(p(i), {"0", "1"}));
    out.database.add_atom(atom(p(i), {"1", "0"}));
  }
  out.database.add_atom(atom("q", {"0", "1"}));
  out.database.add_atom(atom("q", {"1", "0"}));
  for (int t = 0; t < 7; ++t)
    out.database.add_atom(atom("a", {std::to_string(t >> 2), std::to_string((t >> 1) & 1), std::to_string(t & 1)}));
  out.database.add_atom(atom("b0", {"0"}));
  out.database.add_atom(atom("b1", {"1"}));

  std::vector<Atom> chi{atom("b0", {"V0"}), atom("b1", {"V1"}), atom("q", {"V0", "V1"}), atom("q", {"V1", "V0"})};
  for (int t = 0; t < 7; ++t) {
    auto v = [&](int bit) { return bit ? std::string("V1") : std::string("V0"); };
    chi.push_back(atom("a", {v(t >> 2), v((t >> 1) & 1), v(t & 1)}));
  }
  std::vector<Atom> pi;
  for (int i = 1; i <= k; ++i) pi.push_back(atom(p(i), {"W" + std::to_string(i), "W" + std::to_string(i) + "p"}));

  auto prefix = chi;
  prefix.insert(prefix.end(), pi.begin(), pi.end());
  for (int i = 1; i <= k; ++i) {
    Egd c1{prefix, "X", "Xp"};
    c1.body.push_back(atom(p(i), {"X", "Xp"}));
    c1.body.push_back(atom(p(i), {"Xp", "X"}));
    out.egds.push_back(std::move(c1));
  }

  // Names of the EGD variables standing for z and its dual z'.
  auto name = [&](int var, bool positive) {
    for (int i = 0; i < k; ++i)
      if (s.x[static_cast<std::size_t>(i)] == var) return "X" + std::to_string(i + 1) + (positive ? "" : "p");
    for (int j = 0; j < l; ++j)
      if (s.y[static_cast<std::size_t>(j)] == var) return "Y" + std::to_string(j + 1) + (positive ? "" : "p");
    throw InvalidInstance("matrix variable is not quantified");
  };
  Egd c2{prefix, "X1", "X1p"};
  for (int i = 1; i <= k; ++i) c2.body.push_back(atom(p(i), {"X" + std::to_string(i), "X" + std::to_string(i) + "p"}));
  for (int j = 1; j <= l; ++j) c2.body.push_back(atom("q", {"Y" + std::to_string(j), "Y" + std::to_string(j) + "p"}));
  for (const auto& t : s.matrix->terms) {
    std::vector<std::string> args;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& lit = t[std::min(j, t.size() - 1)];
      args.push_back(name(lit.var, lit.positive));
    }
    c2.body.push_back(atom("a", std::move(args)));
  }
  out.egds.push_back(std::move(c2));
  return out;
}

RepairReduction pi1sat_to_repair() {
  RepairReduction red;
  red.sigma = [](const QbfInstance& psi) { return pi1sat_to_repair_sigma(psi); };
  red.tau = [](const QbfInstance& psi, const Assignment& keep) -> StreamPtr<Assignment> {
    const auto k = psi.free_vars.size();
    if (keep.size() != 2 * k + 11) return make_vector_stream<Assignment>({});
    Assignment x(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (keep[2 * i] == keep[2 * i + 1]) return make_vector_stream<Assignment>({});
      x.set(i, keep[2 * i + 1]);
    }
    for (std::size_t i = 2 * k; i < keep.size(); ++i)
      if (!keep[i]) return make_vector_stream<Assignment>({});
    return make_vector_stream<Assignment>({x});
  };
  red.bound = [](std::size_t) { return std::size_t{1}; };
  red.size = [](const QbfInstance& psi) { return matrix_size(psi.matrix) + static_cast<std::size_t>(psi.num_vars()); };
  return red;
}

}  // namespace enumkit
