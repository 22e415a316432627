#include <gtest/gtest.h>

#include <json.hpp>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/blocking.hpp"
#include "enumkit/engine/brute_force.hpp"
#include "enumkit/engine/delay_profile.hpp"
#include "enumkit/engine/ereduction.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"
#include "enumkit/structures/graphs.hpp"
#include "enumkit/structures/reductions.hpp"
#include "support/generators.hpp"
#include "support/truth_tables.hpp"

namespace enumkit {
namespace {

using namespace enumkit::testing;

CnfFormula or12() {
  CnfFormula f(2);
  f.add_clause({Literal::pos(1), Literal::pos(2)});
  return f;
}

std::vector<std::string> strings(const std::vector<Assignment>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

std::vector<int> iota_vars(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

TEST(Flasher, OrOfTwo) {
  auto s = flasher(std::make_shared<SatExtension>(or12()));
  EXPECT_EQ(strings(drain(*s)), (std::vector<std::string>{"01", "10", "11"}));
  EXPECT_FALSE(s->next().has_value());
}

TEST(Flasher, ConstantFalseIsEmpty) {
  auto s = flasher(std::make_shared<FunctionExtension>(3, [](const PartialAssignment&) { return false; }));
  EXPECT_FALSE(s->next().has_value());
  EXPECT_FALSE(s->next().has_value());
}

TEST(Flasher, SingleOne) {
  auto s = flasher(std::make_shared<FunctionExtension>(
      1, [](const PartialAssignment& p) { return p.prefix_len() == 0 || p[0]; }));
  EXPECT_EQ(strings(drain(*s)), std::vector<std::string>{"1"});
}

TEST(Flasher, ZeroLengthHasOneSolution) {
  auto s = flasher(std::make_shared<FunctionExtension>(0, [](const PartialAssignment&) { return true; }));
  auto out = drain(*s);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].empty());
}

TEST(Flasher, PrefixesNeverExceedLength) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const int n = uniform(rng, 1, 8);
    auto f = random_cnf(rng, n, uniform(rng, 0, 2 * n));
    auto inner = std::make_shared<SatExtension>(f);
    std::size_t longest = 0;
    auto ext = std::make_shared<FunctionExtension>(static_cast<std::size_t>(n), [&](const PartialAssignment& p) {
      longest = std::max(longest, p.prefix_len());
      return inner->extends(p);
    });
    drain(*flasher(ext));
    EXPECT_LE(longest, static_cast<std::size_t>(n));
  }
}

TEST(Blocking, OrOfTwo) {
  BlockingEnumerator b(or12());
  auto out = drain(b);
  EXPECT_EQ(as_set(strings(out)), (std::set<std::string>{"01", "10", "11"}));
  EXPECT_EQ(b.oracle().stats().calls, 4u);
  EXPECT_EQ(b.blocking_clauses().size(), 3u);
}

TEST(Blocking, UnsatIsOneCall) {
  CnfFormula f(1);
  f.add_clause({Literal::pos(1)});
  f.add_clause({Literal::neg(1)});
  BlockingEnumerator b(f);
  EXPECT_FALSE(b.next().has_value());
  EXPECT_EQ(b.oracle().stats().calls, 1u);
}

TEST(Blocking, ProjectionSuppressesDuplicates) {
  CnfFormula f = or12();
  f.add_clause({Literal::pos(3), Literal::neg(3)});
  f.num_vars = 3;
  auto out = drain(*blocking_enumerate(f, {1, 2}));
  EXPECT_EQ(out.size(), 3u);
  EXPECT_EQ(as_set(strings(out)), (std::set<std::string>{"01", "10", "11"}));
}

TEST(Blocking, ProjectionMatchesTruthTable) {
  Rng rng(9);
  for (int i = 0; i < 150; ++i) {
    const int n = uniform(rng, 2, 9);
    auto f = random_cnf(rng, n, uniform(rng, 0, 3 * n));
    std::vector<int> proj;
    for (int v = 1; v <= n; ++v)
      if (coin(rng)) proj.push_back(v);
    std::set<std::string> expected;
    for (const auto& m : cnf_models(f, n)) {
      std::string s;
      for (int v : proj) s += m.value_of(v) ? '1' : '0';
      expected.insert(s);
    }
    auto out = strings(drain(*blocking_enumerate(f, proj)));
    EXPECT_FALSE(has_duplicates(out));
    EXPECT_EQ(as_set(out), expected);
  }
}

TEST(Engines, FlasherBlockingBruteAgree) {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = uniform(rng, 1, 12);
    auto f = random_cnf(rng, n, uniform(rng, 0, 4 * n));
    auto brute = brute_force_solutions(static_cast<std::size_t>(n), [&](const Assignment& a) { return f.evaluate(a); });
    auto lex = drain(*flasher(std::make_shared<SatExtension>(f)));
    auto blk = drain(*blocking_enumerate(f, iota_vars(n)));
    EXPECT_EQ(lex, brute);
    EXPECT_TRUE(strictly_increasing(lex));
    EXPECT_FALSE(has_duplicates(blk));
    EXPECT_EQ(as_set(blk), as_set(brute));
  }
}

TEST(Engines, OracleInputSignatures) {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const int n = uniform(rng, 2, 10);
    auto f = random_cnf(rng, n, uniform(rng, 1, 2 * n));
    Flasher fl(std::make_shared<SatExtension>(f));
    auto [sols, fp] = delay_profile(fl);
    EXPECT_LE(fp.max_oracle_input, f.size() + static_cast<std::size_t>(n));
    EXPECT_LE(fp.max_calls_per_gap(), static_cast<std::uint64_t>(2 * n + 1));

    BlockingEnumerator b(f);
    auto [bsols, bp] = delay_profile(b);
    ASSERT_EQ(bp.max_input_after_gap.size(), bsols.size() + 1);
    for (std::size_t g = 0; g < bp.max_input_after_gap.size(); ++g)
      EXPECT_EQ(bp.max_input_after_gap[g], f.size() + g * static_cast<std::size_t>(n + 1));
  }
}

TEST(DelayProfile, BlockingOneCallPerGap) {
  BlockingEnumerator b(or12());
  auto [sols, p] = delay_profile(b);
  EXPECT_EQ(sols.size(), 3u);
  EXPECT_EQ(p.oracle_calls, (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(DelayProfile, FlasherWithinBound) {
  Flasher fl(std::make_shared<SatExtension>(or12()));
  auto [sols, p] = delay_profile(fl);
  EXPECT_EQ(p.oracle_calls.size(), sols.size() + 1);
  for (auto c : p.oracle_calls) EXPECT_LE(c, 12u);
}

TEST(DelayProfile, EmptyStream) {
  VectorStream<Assignment> s({});
  auto [sols, p] = delay_profile(s);
  EXPECT_TRUE(sols.empty());
  EXPECT_EQ(p.steps.size(), 1u);
  EXPECT_EQ(p.oracle_calls.size(), 1u);
}

TEST(DelayProfile, Json) {
  BlockingEnumerator b(or12());
  auto p = delay_profile(b).second;
  auto j = nlohmann::json::parse(p.to_json());
  EXPECT_EQ(j["outputs"], 3);
  EXPECT_EQ(j["gaps"].size(), 4u);
  EXPECT_EQ(j["oracle_calls"].size(), 4u);
  EXPECT_EQ(j["max_oracle_input"], p.max_oracle_input);
}

TEST(BruteForce, Examples) {
  auto f = or12();
  auto check = [&](const Assignment& a) { return f.evaluate(a); };
  EXPECT_EQ(strings(brute_force_solutions(2, check, BruteFilter::subset_minimal)),
            (std::vector<std::string>{"01", "10"}));
  CnfFormula g(3);
  g.add_clause({Literal::pos(1), Literal::pos(2)});
  g.add_clause({Literal::pos(2), Literal::pos(3)});
  EXPECT_EQ(strings(brute_force_solutions(3, [&](const Assignment& a) { return g.evaluate(a); },
                                          BruteFilter::card_minimal)),
            std::vector<std::string>{"010"});
  EXPECT_EQ(strings(brute_force_solutions(2, [](const Assignment&) { return true; }, BruteFilter::card_maximal)),
            std::vector<std::string>{"11"});
  EXPECT_THROW(brute_force_solutions(25, [](const Assignment&) { return true; }), ResourceLimit);
}

TEST(BruteForce, FiltersMatchMaskDefinitions) {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = uniform(rng, 1, 9);
    auto f = random_cnf(rng, n, uniform(rng, 0, 2 * n));
    std::vector<std::uint64_t> masks;
    for (const auto& m : cnf_models(f, n)) masks.push_back(assignment_to_mask(m));
    auto check = [&](const Assignment& a) { return f.evaluate(a); };
    const auto N = static_cast<std::size_t>(n);
    EXPECT_EQ(brute_force_solutions(N, check, BruteFilter::subset_minimal), to_assignments(subset_minimal(masks), n));
    EXPECT_EQ(brute_force_solutions(N, check, BruteFilter::subset_maximal), to_assignments(subset_maximal(masks), n));
    EXPECT_EQ(brute_force_solutions(N, check, BruteFilter::card_minimal), to_assignments(extremal_weight(masks, true), n));
    EXPECT_EQ(brute_force_solutions(N, check, BruteFilter::card_maximal),
              to_assignments(extremal_weight(masks, false), n));
  }
}

using AssignmentReduction = EReduction<int, Assignment, int, Assignment>;

TEST(EReduce, IdentityPreservesStream) {
  Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    const int n = uniform(rng, 1, 8);
    auto f = random_cnf(rng, n, uniform(rng, 0, 2 * n));
    auto direct = drain(*flasher(std::make_shared<SatExtension>(f)));
    auto r = identity_reduction<int, Assignment>();
    auto s = ereduce_execute(r, 0, flasher(std::make_shared<SatExtension>(f)));
    EXPECT_EQ(drain(*s), direct);
    auto rr = ereduce_compose(r, r);
    auto s2 = ereduce_execute(rr, 0, flasher(std::make_shared<SatExtension>(f)));
    EXPECT_EQ(as_set(drain(*s2)), as_set(direct));
  }
}

TEST(EReduce, EmptyTauGivesEmptyStream) {
  AssignmentReduction r = identity_reduction<int, Assignment>();
  r.tau = [](const int&, const Assignment&) { return make_vector_stream(std::vector<Assignment>{}); };
  auto s = ereduce_execute(r, 0, make_vector_stream(std::vector<Assignment>(5, Assignment::from_string("1"))));
  EXPECT_FALSE(s->next().has_value());
  EXPECT_EQ(s->trace().tau_empty, 5u);
}

// tau(y) = the k-bit prefix of y; bound 2^(n-k).
AssignmentReduction prefix_reduction(int n, int k) {
  AssignmentReduction r;
  r.sigma = [](const int& x) { return x; };
  r.tau = [k](const int&, const Assignment& y) {
    Assignment p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p.set(static_cast<std::size_t>(i), y[static_cast<std::size_t>(i)]);
    return make_vector_stream(std::vector<Assignment>{p});
  };
  r.bound = [n, k](std::size_t) { return std::size_t{1} << (n - k); };
  r.size = [](const int&) { return std::size_t{0}; };
  return r;
}

TEST(EReduce, UnionOfTauAndQueueDiscipline) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = uniform(rng, 2, 9);
    const int k = uniform(rng, 1, n);
    auto f = random_cnf(rng, n, uniform(rng, 0, 2 * n));
    std::set<Assignment> expected;
    for (const auto& m : cnf_models(f, n)) {
      Assignment p(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) p.set(static_cast<std::size_t>(j), m[static_cast<std::size_t>(j)]);
      expected.insert(p);
    }
    auto s = ereduce_execute(prefix_reduction(n, k), 0, flasher(std::make_shared<SatExtension>(f)));
    std::vector<Assignment> out;
    while (auto z = s->next()) {
      // The element just emitted is the queue entry at index emitted() - 1.
      ASSERT_EQ(s->queue()[s->emitted() - 1], *z);
      out.push_back(*z);
    }
    EXPECT_FALSE(has_duplicates(out));
    EXPECT_EQ(as_set(out), expected);
    EXPECT_EQ(s->emitted(), s->queue().size());
    EXPECT_EQ(s->trace().tau_elements, s->trace().inner_outputs);
  }
}

TEST(EReduce, ThreeColViaFourColOnTriangle) {
  Graph k3(3);
  k3.add_edge(1, 2);
  k3.add_edge(1, 3);
  k3.add_edge(2, 3);
  auto r = threecol_to_fourcol();
  auto inner = colouring_enum(r.sigma(k3), 4);
  auto s = ereduce_execute(r, k3, std::move(inner));
  auto out = drain(*s);
  EXPECT_EQ(out.size(), 6u);
  EXPECT_FALSE(has_duplicates(out));
  EXPECT_EQ(s->trace().inner_outputs, 24u);
  for (const auto& c : out) EXPECT_TRUE(is_proper_colouring(k3, c, 3));
}

TEST(EReduce, ComposeWithRelabelling) {
  Graph k3(3);
  k3.add_edge(1, 2);
  k3.add_edge(1, 3);
  k3.add_edge(2, 3);
  // Four-colourings to four-colourings under the colour permutation 0->2->1->3->0.
  ColourReduction relabel;
  relabel.sigma = [](const Graph& g) { return g; };
  relabel.tau = [](const Graph&, const Colouring& c) {
    static const std::uint8_t perm[4] = {2, 3, 1, 0};
    Colouring d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = perm[c[i]];
    return make_vector_stream(std::vector<Colouring>{d});
  };
  relabel.bound = [](std::size_t) { return std::size_t{1}; };
  relabel.size = [](const Graph& g) { return static_cast<std::size_t>(g.num_vertices()); };
  auto composed = ereduce_compose(threecol_to_fourcol(), relabel);
  auto s = ereduce_execute(composed, k3, colouring_enum(composed.sigma(k3), 4));
  auto out = drain(*s);
  auto direct = drain(*colouring_enum(k3, 3));
  EXPECT_EQ(as_set(out), as_set(direct));
  EXPECT_FALSE(has_duplicates(out));
}

}  // namespace
}  // namespace enumkit
