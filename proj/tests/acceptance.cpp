// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "enumkit/core/io.hpp"
#include "enumkit/engine/blocking.hpp"
#include "enumkit/engine/delay_profile.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"
#include "enumkit/kr/abduction.hpp"
#include "enumkit/kr/diagnosis.hpp"
#include "enumkit/logic/allsat.hpp"
#include "enumkit/logic/minimal.hpp"
#include "enumkit/logic/qbf.hpp"
#include "enumkit/oracles/sat_oracle.hpp"
#include "enumkit/oracles/sigma2.hpp"
#include "enumkit/schaefer/enum.hpp"
#include "enumkit/structures/graphs.hpp"
#include "enumkit/structures/reductions.hpp"
#include "enumkit/structures/repairs.hpp"
#include "support/definitional.hpp"

using namespace enumkit;
using namespace enumkit::testing;

namespace {

// Collects violations; the first few are kept for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string violations() const {
    std::string s = std::to_string(failures_) + " violations";
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome finish(const Tally& t, const std::string& summary) { return {t.ok(), summary + ", " + t.violations()}; }

std::string tag(const char* kind, std::size_t i) { return std::string(kind) + " #" + std::to_string(i); }

// The CNF corpus shared by criteria 2-4: bundled files plus seeded random
// instances.
std::vector<CnfFormula> cnf_corpus() {
  std::vector<CnfFormula> out;
  for (const auto& entry : std::filesystem::directory_iterator(ENUMKIT_CORPUS_DIR)) {
    if (entry.path().extension() != ".cnf") continue;
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    out.push_back(parse_dimacs(text.str()));
  }
  Rng rng(20240601);
  for (int i = 0; i < 300; ++i) {
    const int n = uniform(rng, 1, 12);
    out.push_back(random_cnf(rng, n, uniform(rng, 0, 4 * n)));
  }
  return out;
}

Outcome oracle_soundness() {
  Tally t;
  Rng rng(1001);
  for (std::size_t i = 0; i < 1000; ++i) {
    const int n = uniform(rng, 1, 14);
    auto f = random_cnf(rng, n, uniform(rng, 0, 60));
    auto r = sat_decide(f, {}, true);
    t.check(r.sat() == cnf_satisfiable_with(f, n, {}), tag("cnf", i));
    if (r.sat()) t.check(r.model && f.evaluate(*r.model), tag("model", i));
  }
  for (std::size_t i = 0; i < 300; ++i) {
    const int nf = uniform(rng, 0, 3);
    const int e = uniform(rng, 1, 6);
    const int a = uniform(rng, 1, std::min(6, 14 - nf - e));
    auto q = random_qbf(rng, nf, {{Quantifier::exists, e}, {Quantifier::forall, a}}, coin(rng), uniform(rng, 1, 14));
    const int n = q.num_vars();
    Sigma2Options opts;
    if (i % 2) opts.exhaustive_forall_limit = 0;  // CEGAR checks through the SAT oracle
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << nf); ++x) {
      std::vector<Literal> fix;
      std::uint64_t mask = 0;
      for (int j = 0; j < nf; ++j) {
        const bool v = (x >> j) & 1U;
        fix.push_back({q.free_vars[static_cast<std::size_t>(j)], v});
        if (v) mask |= std::uint64_t{1} << (n - q.free_vars[static_cast<std::size_t>(j)]);
      }
      t.check(sigma2_decide(q.blocks[0].vars, q.blocks[1].vars, q.matrix, fix, nullptr, opts) == qbf_holds(q, mask),
              tag("exists-forall", i));
    }
  }
  return finish(t, "1000 CNF + 300 exists-forall instances");
}

Outcome engine_equivalence(const std::vector<CnfFormula>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    auto lex = drain(*allsat(f, AllSatMode::lex));
    auto blocking = drain(*allsat(f, AllSatMode::blocking));
    auto brute = brute_force_solutions(static_cast<std::size_t>(f.num_vars), [&](const Assignment& a) { return f.evaluate(a); });
    t.check(as_set(lex) == as_set(brute) && as_set(blocking) == as_set(brute), tag("sets", i));
    t.check(strictly_increasing(lex), tag("lex order", i));
    t.check(!has_duplicates(lex) && !has_duplicates(blocking), tag("duplicates", i));
  }
  return finish(t, std::to_string(corpus.size()) + " corpus CNFs");
}

Outcome class_signatures(const std::vector<CnfFormula>& corpus) {
  Tally t;
  std::size_t growing = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    const auto n = static_cast<std::size_t>(f.num_vars);
    Flasher fl(std::make_shared<SatExtension>(f));
    auto [sols, p] = delay_profile(fl);
    t.check(p.max_oracle_input <= f.size() + n, tag("flasher input", i));
    BlockingEnumerator b(f);
    auto [bsols, bp] = delay_profile(b);
    if (bsols.size() < 3) continue;
    ++growing;
    for (std::size_t g = 1; g < bp.max_input_after_gap.size(); ++g)
      t.check(bp.max_input_after_gap[g] > bp.max_input_after_gap[g - 1], tag("blocking growth", i));
  }
  return finish(t, std::to_string(corpus.size()) + " flasher runs, " + std::to_string(growing) + " blocking runs with >= 3 outputs");
}

Outcome flasher_delay(const std::vector<CnfFormula>& corpus) {
  Tally t;
  std::uint64_t worst = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    const auto n = static_cast<std::uint64_t>(f.num_vars);
    Flasher fl(std::make_shared<SatExtension>(f));
    auto [sols, p] = delay_profile(fl);
    worst = std::max(worst, p.max_calls_per_gap());
    t.check(p.max_calls_per_gap() <= 4 * n + 4, tag("gap calls", i));
    OracleStats stats;
    auto m = model_via_decisions(f, &stats);
    t.check(stats.calls <= 2 * n + 1, tag("decision calls", i));
    t.check(m.has_value() == !sols.empty() && (!m || *m == sols.front()), tag("decision model", i));
  }
  return finish(t, std::to_string(corpus.size()) + " corpus CNFs, worst gap " + std::to_string(worst) + " calls");
}

Outcome circumscription() {
  Tally t;
  Rng rng(1005);
  for (std::size_t i = 0; i < 300; ++i) {
    const int n = uniform(rng, 1, 12);
    auto f = random_cnf(rng, n, uniform(rng, 0, 3 * n));
    CircumscriptionStream s(f);
    auto out = drain(s);
    auto brute = brute_force_solutions(static_cast<std::size_t>(n), [&](const Assignment& a) { return f.evaluate(a); },
                                       BruteFilter::subset_minimal);
    t.check(as_set(out) == as_set(brute) && !has_duplicates(out), tag("set", i));
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = 0; b < out.size(); ++b) {
        const auto ma = assignment_to_mask(out[a]), mb = assignment_to_mask(out[b]);
        t.check(a == b || (ma & mb) != ma, tag("antichain", i));
      }
    SatOracle requery(f);
    for (const auto& c : s.blocking_clauses()) requery.add_clause(c);
    for (const auto& m : out) {
      std::vector<Literal> fix;
      for (int v = 1; v <= n; ++v) fix.push_back({v, m.value_of(v)});
      t.check(!requery.solve(fix).sat(), tag("re-admitted", i));
    }
  }
  return finish(t, "300 CNFs");
}

Outcome cardmin_and_diagnosis() {
  Tally t;
  Rng rng(1006);
  for (std::size_t i = 0; i < 200; ++i) {
    const int n = uniform(rng, 1, 12);
    auto f = random_cnf(rng, n, uniform(rng, 1, 3 * n));
    auto out = drain(*cardmin_enum(f));
    auto brute = brute_force_solutions(static_cast<std::size_t>(n), [&](const Assignment& a) { return f.evaluate(a); },
                                       BruteFilter::card_minimal);
    t.check(out == brute, tag("cardmin", i));
    for (const auto& m : out) t.check(m.weight() == out.front().weight(), tag("cardmin weight", i));
  }
  for (std::size_t i = 0; i < 200; ++i) {
    auto d = random_diagnosis(rng, 10);
    DiagnosisStream s(d);
    auto out = drain(s);
    t.check(out == brute_diagnoses(d), tag("diagnosis", i));
    t.check(strictly_increasing(out), tag("diagnosis order", i));
    for (const auto& r : out) t.check(static_cast<int>(r.weight()) == s.max_retained(), tag("diagnosis weight", i));
  }
  return finish(t, "200 CNFs + 200 diagnosis instances");
}

Outcome abduction() {
  Tally t;
  Rng rng(1007);
  for (std::size_t i = 0; i < 200; ++i) {
    auto a = random_abduction(rng, 10);
    auto out = drain(*abduction_enum(a));
    t.check(out == brute_explanations(a), tag("set", i));
    SatOracle independent(a.gamma);
    for (const auto& e : out) {
      std::vector<Literal> lits;
      for (std::size_t j = 0; j < a.hypotheses.size(); ++j)
        if (e[j]) lits.push_back(a.hypotheses[j]);
      t.check(independent.solve(lits).sat(), tag("consistency", i));
      lits.push_back(Literal::neg(a.q));
      t.check(!independent.solve(lits).sat(), tag("entailment", i));
    }
  }
  return finish(t, "200 instances, |H| <= 10");
}

Outcome schaefer_dichotomy() {
  Tally t;
  Rng rng(1008);
  for (std::size_t i = 0; i < 200; ++i) {
    auto f = random_gamma_over(rng, random_language(rng, true), uniform(rng, 1, 10), uniform(rng, 0, 8));
    auto s = enum_sat_gamma(f);
    t.check(drain(*s) == gamma_models(f), tag("schaefer set", i));
    t.check(s->counters().np_calls == 0, tag("np calls", i));
  }
  const std::map<std::string, BoolRelation> one_in_three{{"ONE3", BoolRelation::from_strings({"100", "010", "001"})}};
  for (std::size_t i = 0; i < 100; ++i) {
    auto f = random_gamma_over(rng, one_in_three, uniform(rng, 1, 10), uniform(rng, 1, 6));
    auto s = enum_sat_gamma(f);
    t.check(drain(*s) == gamma_models(f), tag("1-in-3 set", i));
    t.check(!gamma_enum_kind(f) && s->counters().np_calls > 0, tag("1-in-3 path", i));
  }
  std::size_t relations = 0;
  for (int arity = 1; arity <= 4; ++arity) {
    const std::uint32_t size = 1U << arity;
    for (std::uint32_t members = 1; members < (1U << size); ++members) {
      std::set<std::uint32_t> tuples;
      for (std::uint32_t x = 0; x < size; ++x)
        if ((members >> x) & 1U) tuples.insert(x);
      auto got = classify_relation(BoolRelation(arity, tuples));
      auto want = closure_of(members, arity);
      ++relations;
      t.check(got.horn == want.and_ && got.dualhorn == want.or_ && got.bijunctive == want.maj && got.affine == want.xr &&
                  got.zero_valid == ((members & 1U) != 0) && got.one_valid == (((members >> (size - 1)) & 1U) != 0),
              "relation " + std::to_string(arity) + "/" + std::to_string(members));
    }
  }
  return finish(t, "200 Schaefer + 100 1-in-3 formulas, " + std::to_string(relations) + " relations classified");
}

Outcome reduction_fidelity() {
  Tally t;
  Rng rng(1009);
  for (std::size_t i = 0; i < 100; ++i) {
    auto g = random_graph(rng, uniform(rng, 1, 9), 0.35);
    auto r = threecol_to_fourcol();
    auto s = ereduce_execute(r, g, colouring_enum(r.sigma(g), 4));
    auto out = drain(*s);
    auto direct = brute_colourings(g, 3);
    t.check(as_set(out) == as_set(direct) && !has_duplicates(out), tag("3col-4col", i));
    t.check(s->trace().tau_empty == 0 && s->trace().inner_outputs == 4 * direct.size(), tag("3col-4col tau", i));
  }
  for (std::size_t i = 0; i < 100; ++i) {
    const int n = uniform(rng, 1, 5);
    auto h = random_hypergraph(rng, n, uniform(rng, 1, 3), 3);
    const auto m = h.edges().size();
    auto r = trans_to_dom();
    auto g = r.sigma(h);
    auto s = ereduce_execute(r, h, domset_enum(g));
    auto out = drain(*s);
    t.check(g.num_vertices() <= 9, tag("trans-dom size", i));
    t.check(as_set(out) == as_set(brute_transversals(h)) && !has_duplicates(out), tag("trans-dom", i));
    t.check(s->trace().tau_empty <= static_cast<std::size_t>(n) * m + m, tag("trans-dom tau", i));
  }
  for (std::size_t i = 0; i < 100;) {
    const int n = uniform(rng, 1, 8);
    auto f = random_cnf(rng, n, uniform(rng, 1, 2 * n));
    if (f.evaluate(Assignment(static_cast<std::size_t>(n)))) continue;
    auto r = cardmin_to_mbd();
    auto s = ereduce_execute(r, f, diagnosis_enum(r.sigma(f)));
    auto out = drain(*s);
    auto brute = brute_force_solutions(static_cast<std::size_t>(n), [&](const Assignment& a) { return f.evaluate(a); },
                                       BruteFilter::card_minimal);
    t.check(as_set(out) == as_set(brute), tag("cardmin-mbd", i));
    t.check(s->trace().tau_empty <= (brute.empty() ? 1U : 0U), tag("cardmin-mbd tau", i));
    ++i;
  }
  for (std::size_t i = 0; i < 100; ++i) {
    ConstraintLanguage lang{{"A", random_relation(rng, uniform(rng, 1, 3))}};
    if (coin(rng)) lang["B"] = BoolRelation::from_strings({"100", "010", "001"});
    const int n = uniform(rng, 1, 9);
    auto f = random_gamma_over(rng, with_constants(lang, n).language, n, uniform(rng, 0, 6));
    auto r = constants_elimination();
    auto s = ereduce_execute(r, f, enum_sat_gamma(r.sigma(f)));
    auto out = drain(*s);
    t.check(as_set(out) == as_set(gamma_models(f)) && !has_duplicates(out), tag("const-elim", i));
    t.check(s->trace().tau_empty <= 2, tag("const-elim tau", i));
  }
  for (std::size_t i = 0; i < 100; ++i) {
    const int k = uniform(rng, 1, 3);
    const int l = uniform(rng, 0, 5 - k);
    std::vector<std::pair<Quantifier, int>> prefix;
    if (l > 0) prefix.push_back({Quantifier::forall, l});
    auto q = random_qbf(rng, k, prefix, true, uniform(rng, 1, 6));
    auto r = pi1sat_to_repair();
    auto db = r.sigma(q);
    auto s = ereduce_execute(r, q, repair_enum(db.database, db.egds));
    auto out = drain(*s);
    t.check(as_set(out) == as_set(qbf_models(q)) && !has_duplicates(out), tag("pi1sat-repair", i));
    t.check(s->trace().tau_empty <= static_cast<std::size_t>(k + 11), tag("pi1sat-repair tau", i));
  }
  return finish(t, "5 reductions x 100 instances");
}

Outcome repair_semantics() {
  Tally t;
  Rng rng(1010);
  for (std::size_t i = 0; i < 200; ++i) {
    auto [d, egds] = random_database(rng, uniform(rng, 1, 12), uniform(rng, 1, 3));
    auto out = drain(*repair_enum(d, egds));
    t.check(out == brute_repairs(d, egds), tag("repairs", i));
    const auto all = (std::uint64_t{1} << d.size()) - 1;
    if (egd_consistent(d, egds, all)) t.check(out == std::vector<Assignment>{Assignment(d.size(), true)}, tag("D |= C", i));
  }
  return finish(t, "200 databases");
}

Outcome pi_to_sigma() {
  Tally t;
  Rng rng(1011);
  for (std::size_t i = 0; i < 100; ++i) {
    std::vector<std::pair<Quantifier, int>> prefix;
    switch (i % 4) {
      case 1: prefix = {{Quantifier::exists, uniform(rng, 1, 4)}}; break;
      case 2: prefix = {{Quantifier::forall, uniform(rng, 1, 4)}}; break;
      case 3: prefix = {{Quantifier::exists, uniform(rng, 1, 4)}, {Quantifier::forall, uniform(rng, 1, 4)}}; break;
      default: break;
    }
    auto q = random_qbf(rng, uniform(rng, 1, 5), prefix, coin(rng), uniform(rng, 1, 10));
    PiToSigmaStream s(q);
    auto out = drain(s);
    auto ref = drain(*qbf_enum(q));
    t.check(as_set(out) == as_set(ref) && !has_duplicates(out), tag("set", i));
    const auto& sizes = s.round_input_sizes();
    t.check(sizes.size() == out.size() + 1, tag("rounds", i));
    for (std::size_t r = 1; r < sizes.size(); ++r) t.check(sizes[r] - sizes[r - 1] == s.free_width() + 1, tag("growth", i));
  }
  return finish(t, "100 instances of depth <= 2");
}

}  // namespace

int main() {
  const auto corpus = cnf_corpus();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oracle soundness", oracle_soundness},
      {"engine equivalence", [&] { return engine_equivalence(corpus); }},
      {"class-signature instrumentation", [&] { return class_signatures(corpus); }},
      {"flasher delay budget", [&] { return flasher_delay(corpus); }},
      {"circumscription", circumscription},
      {"cardmin and diagnosis", cardmin_and_diagnosis},
      {"abduction", abduction},
      {"schaefer dichotomy", schaefer_dichotomy},
      {"reduction fidelity", reduction_fidelity},
      {"repair semantics", repair_semantics},
      {"pi-to-sigma blocking loop", pi_to_sigma},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
