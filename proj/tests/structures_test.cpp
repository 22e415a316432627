#include <gtest/gtest.h>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/brute_force.hpp"
#include "enumkit/structures/graphs.hpp"
#include "enumkit/structures/reductions.hpp"
#include "enumkit/structures/repairs.hpp"
#include "support/definitional.hpp"
#include "support/generators.hpp"
#include "support/truth_tables.hpp"

namespace enumkit {
namespace {

using namespace enumkit::testing;

std::vector<std::string> strings(const std::vector<Assignment>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

TEST(GroundEgds, Examples) {
  auto two = parse_database("r(0). r(1). egd: r(X), r(Y) -> X = Y.");
  EXPECT_EQ(ground_egds(two.database, two.egds), (std::vector<ConflictSet>{{0, 1}}));

  auto fine = parse_database("r(0). egd: r(X), r(Y) -> X = Y.");
  EXPECT_TRUE(ground_egds(fine.database, fine.egds).empty());

  auto key = parse_database("p(0,1). p(0,2). egd: p(X,Y), p(X,Z) -> Y = Z.");
  EXPECT_EQ(ground_egds(key.database, key.egds), (std::vector<ConflictSet>{{0, 1}}));
}

TEST(GroundEgds, ConflictFreeIffConsistent) {
  Rng rng(109);
  for (int i = 0; i < 100; ++i) {
    auto [d, egds] = random_database(rng, uniform(rng, 1, 10), uniform(rng, 1, 3));
    auto conflicts = ground_egds(d, egds);
    const int n = static_cast<int>(d.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      bool free = std::none_of(conflicts.begin(), conflicts.end(), [&](const ConflictSet& c) {
        return std::all_of(c.begin(), c.end(), [&](std::size_t a) { return bit_of(m, n, static_cast<int>(a) + 1); });
      });
      ASSERT_EQ(free, egd_consistent(d, egds, m));
      ASSERT_EQ(satisfies_egds(d, egds, mask_to_assignment(m, n)), free);
    }
  }
}

TEST(Repairs, Examples) {
  auto two = parse_database("r(0). r(1). egd: r(X), r(Y) -> X = Y.");
  EXPECT_EQ(strings(drain(*repair_enum(two.database, two.egds))), (std::vector<std::string>{"01", "10"}));

  auto fine = parse_database("r(0). s(1,2). egd: r(X), r(Y) -> X = Y.");
  EXPECT_EQ(strings(drain(*repair_enum(fine.database, fine.egds))), std::vector<std::string>{"11"});

  auto disjoint = parse_database("r(0,1). r(0,2). s(1,1). s(2,1). egd: r(X,Y), r(X,Z) -> Y = Z. egd: s(X,Y), s(Z,Y) -> X = Z.");
  EXPECT_EQ(drain(*repair_enum(disjoint.database, disjoint.egds)).size(), 4u);
}

TEST(Repairs, MatchesDefinitionalBruteForce) {
  Rng rng(113);
  for (int i = 0; i < 150; ++i) {
    auto [d, egds] = random_database(rng, uniform(rng, 1, 12), uniform(rng, 1, 3));
    auto out = drain(*repair_enum(d, egds));
    EXPECT_EQ(out, brute_repairs(d, egds));
    const int n = static_cast<int>(d.size());
    for (const auto& r : out) {
      const auto m = assignment_to_mask(r);
      EXPECT_TRUE(egd_consistent(d, egds, m));
      for (int a = 1; a <= n; ++a)
        EXPECT_TRUE(bit_of(m, n, a) || !egd_consistent(d, egds, m | (std::uint64_t{1} << (n - a))));
    }
  }
}

TEST(Transversals, Examples) {
  Hypergraph h(3);
  h.add_edge({1, 2});
  h.add_edge({2, 3});
  EXPECT_EQ(strings(drain(*transversal_enum(h))), (std::vector<std::string>{"010", "101"}));
  Hypergraph one(3);
  one.add_edge({1});
  EXPECT_EQ(strings(drain(*transversal_enum(one))), std::vector<std::string>{"100"});
  Graph path(3);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  EXPECT_EQ(strings(drain(*domset_enum(path))), (std::vector<std::string>{"010", "101"}));
}

TEST(Transversals, MatchBruteForce) {
  Rng rng(127);
  for (int i = 0; i < 150; ++i) {
    auto h = random_hypergraph(rng, uniform(rng, 1, 12), uniform(rng, 1, 8), 4);
    auto out = drain(*transversal_enum(h));
    EXPECT_EQ(out, brute_transversals(h));
    auto g = random_graph(rng, uniform(rng, 1, 12), 0.3);
    EXPECT_EQ(drain(*domset_enum(g)), brute_dominating(g));
  }
}

TEST(TransDom, Examples) {
  Hypergraph h(3);
  h.add_edge({1, 2});
  h.add_edge({2, 3});
  auto r = trans_to_dom();
  auto g = r.sigma(h);
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(as_set(strings(drain(*ereduce_execute(r, h, domset_enum(g))))), (std::set<std::string>{"010", "101"}));

  Hypergraph one(1);
  one.add_edge({1});
  EXPECT_EQ(strings(drain(*ereduce_execute(r, one, domset_enum(r.sigma(one))))), std::vector<std::string>{"1"});
  EXPECT_THROW(r.sigma(Hypergraph(2)), InvalidInstance);
}

TEST(TransDom, MatchesTransversalsWithinTauBounds) {
  Rng rng(131);
  for (int i = 0; i < 120; ++i) {
    const int n = uniform(rng, 1, 6);
    auto h = random_hypergraph(rng, n, uniform(rng, 1, 3), 3);
    const int m = static_cast<int>(h.edges().size());
    auto r = trans_to_dom();
    auto g = r.sigma(h);
    ASSERT_LE(g.num_vertices(), 10);
    auto s = ereduce_execute(r, h, domset_enum(g));
    auto out = drain(*s);
    EXPECT_FALSE(has_duplicates(out));
    EXPECT_EQ(as_set(out), as_set(brute_transversals(h)));
    // Census of the tau-empty minimal dominating sets by shape.
    int xy = 0, apex_y = 0, other = 0;
    for (const auto& d : brute_dominating(g)) {
      bool inside = true;
      for (int v = n + 1; v <= g.num_vertices(); ++v) inside = inside && !d.value_of(v);
      if (inside) continue;
      const bool apex = d.value_of(g.num_vertices());
      if (d.weight() == 2 && apex) ++apex_y;
      else if (d.weight() == 2) ++xy;
      else ++other;
    }
    EXPECT_EQ(other, 0);
    EXPECT_LE(xy, n * m);
    EXPECT_LE(apex_y, m);
    EXPECT_EQ(s->trace().tau_empty, static_cast<std::size_t>(xy + apex_y));
  }
}

TEST(ThreeColFourCol, Examples) {
  auto r = threecol_to_fourcol();
  Graph k3 = complete(3);
  auto s = ereduce_execute(r, k3, colouring_enum(r.sigma(k3), 4));
  EXPECT_EQ(drain(*s).size(), 6u);
  EXPECT_EQ(s->trace().inner_outputs, 24u);

  Graph single(1);
  auto one = drain(*ereduce_execute(r, single, colouring_enum(r.sigma(single), 4)));
  EXPECT_EQ(as_set(one), (std::set<Colouring>{{0}, {1}, {2}}));

  Graph k4 = complete(4);
  EXPECT_TRUE(drain(*colouring_enum(r.sigma(k4), 4)).empty());
  EXPECT_TRUE(drain(*ereduce_execute(r, k4, colouring_enum(r.sigma(k4), 4))).empty());
}

TEST(ThreeColFourCol, MatchesDirectColourings) {
  Rng rng(137);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, uniform(rng, 1, 7), 0.4);
    auto r = threecol_to_fourcol();
    auto s = ereduce_execute(r, g, colouring_enum(r.sigma(g), 4));
    auto out = drain(*s);
    auto direct = brute_colourings(g, 3);
    EXPECT_FALSE(has_duplicates(out));
    EXPECT_EQ(as_set(out), as_set(direct));
    EXPECT_EQ(drain(*colouring_enum(g, 3)), direct);
    EXPECT_EQ(s->trace().tau_empty, 0u);
    EXPECT_LE(s->trace().inner_outputs, 4 * direct.size());
  }
}

QbfInstance worked_pi1() {
  // forall y2 : (x1 and y2) or (x1 and -y2)
  QbfInstance q;
  q.free_vars = {1};
  q.blocks = {{Quantifier::forall, {2}}};
  DnfFormula d;
  d.add_term({Literal::pos(1), Literal::pos(2), Literal::pos(2)});
  d.add_term({Literal::pos(1), Literal::neg(2), Literal::neg(2)});
  q.matrix = d;
  return q;
}

void expect_structure(const DatabaseFile& db, int k) {
  std::map<std::string, int> count;
  for (const auto& a : db.database.atoms()) ++count[a.predicate.substr(0, 1) == "p" ? "p" : a.predicate];
  EXPECT_EQ(count["p"], 2 * k);
  EXPECT_EQ(count["q"], 2);
  EXPECT_EQ(count["a"], 7);
  EXPECT_EQ(count["b0"] + count["b1"], 2);
  for (const auto& a : db.database.atoms())
    EXPECT_FALSE(a.predicate == "a" && a.args == (std::vector<std::string>{"1", "1", "1"}));
  EXPECT_EQ(db.egds.size(), static_cast<std::size_t>(k + 1));
}

TEST(Pi1SatRepair, WorkedExample) {
  auto q = worked_pi1();
  auto r = pi1sat_to_repair();
  auto db = r.sigma(q);
  EXPECT_EQ(db.database.size(), 13u);
  expect_structure(db, 1);
  auto s = ereduce_execute(r, q, repair_enum(db.database, db.egds));
  EXPECT_EQ(strings(drain(*s)), std::vector<std::string>{"1"});
  EXPECT_LE(s->trace().tau_empty, 12u);
  EXPECT_EQ(drain(*repair_enum(db.database, db.egds)), brute_repairs(db.database, db.egds));
}

TEST(Pi1SatRepair, NoModels) {
  QbfInstance q;
  q.free_vars = {1};
  q.blocks = {{Quantifier::forall, {2}}};
  DnfFormula d;
  d.add_term({Literal::pos(1), Literal::pos(2), Literal::pos(2)});
  q.matrix = d;
  auto r = pi1sat_to_repair();
  auto db = r.sigma(q);
  auto s = ereduce_execute(r, q, repair_enum(db.database, db.egds));
  EXPECT_TRUE(drain(*s).empty());
  EXPECT_EQ(s->trace().tau_empty, s->trace().inner_outputs);
}

TEST(Pi1SatRepair, RejectsBadShapes) {
  auto r = pi1sat_to_repair();
  auto wide = worked_pi1();
  std::get<DnfFormula>(wide.matrix).add_term({Literal::pos(1), Literal::pos(2), Literal::neg(2), Literal::neg(1)});
  EXPECT_THROW(r.sigma(wide), InvalidInstance);
  auto cnf = worked_pi1();
  cnf.matrix = CnfFormula(2);
  EXPECT_THROW(r.sigma(cnf), InvalidInstance);
  auto exists = worked_pi1();
  exists.blocks[0].quantifier = Quantifier::exists;
  EXPECT_THROW(r.sigma(exists), InvalidInstance);
}

TEST(Pi1SatRepair, MatchesExhaustiveEvaluationWithinBound) {
  Rng rng(139);
  for (int i = 0; i < 100; ++i) {
    const int k = uniform(rng, 1, 3);
    const int l = uniform(rng, 0, 5 - k);
    std::vector<std::pair<Quantifier, int>> prefix;
    if (l > 0) prefix.push_back({Quantifier::forall, l});
    auto q = random_qbf(rng, k, prefix, true, uniform(rng, 1, 6));
    auto r = pi1sat_to_repair();
    auto db = r.sigma(q);
    expect_structure(db, k);
    auto s = ereduce_execute(r, q, repair_enum(db.database, db.egds));
    auto out = drain(*s);
    EXPECT_FALSE(has_duplicates(out));
    EXPECT_EQ(as_set(out), as_set(qbf_models(q)));
    EXPECT_LE(s->trace().tau_empty, static_cast<std::size_t>(k + 11));
  }
}

}  // namespace
}  // namespace enumkit
