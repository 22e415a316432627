#include "enumkit/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumkit/core/errors.hpp"
#include "enumkit/core/io.hpp"
#include "enumkit/engine/brute_force.hpp"
#include "enumkit/engine/delay_profile.hpp"
#include "enumkit/engine/ereduction.hpp"
#include "enumkit/kr/abduction.hpp"
#include "enumkit/kr/diagnosis.hpp"
#include "enumkit/logic/allsat.hpp"
#include "enumkit/logic/minimal.hpp"
#include "enumkit/logic/qbf.hpp"
#include "enumkit/oracles/sat_oracle.hpp"
#include "enumkit/schaefer/classify.hpp"
#include "enumkit/schaefer/enum.hpp"
#include "enumkit/structures/graphs.hpp"
#include "enumkit/structures/reductions.hpp"
#include "enumkit/structures/repairs.hpp"

namespace enumkit::cli {

std::string CrosscheckReport::summary() const {
  std::ostringstream s;
  s << (ok() ? "EQUAL" : "MISMATCH") << " engine=" << engine_outputs << " brute=" << brute_outputs
    << " sets=" << (equal ? "equal" : "differ") << " duplicates=" << duplicates << " order=" << (order_ok ? "ok" : "violated")
    << " budget=" << (budget_ok ? "ok" : "exceeded");
  return s.str();
}

CrosscheckReport compare_runs(const std::vector<std::string>& engine, const std::vector<std::string>& brute,
                              bool lex_expected, const std::vector<std::uint64_t>& gap_calls,
                              std::optional<std::uint64_t> budget, bool skip_first_gap) {
  CrosscheckReport r;
  r.engine_outputs = engine.size();
  r.brute_outputs = brute.size();
  std::set<std::string> e(engine.begin(), engine.end());
  std::set<std::string> b(brute.begin(), brute.end());
  r.duplicates = engine.size() - e.size();
  r.equal = e == b;
  if (lex_expected)
    for (std::size_t i = 1; i < engine.size(); ++i) r.order_ok = r.order_ok && engine[i - 1] < engine[i];
  if (budget)
    for (std::size_t i = skip_first_gap ? 1 : 0; i < gap_calls.size(); ++i) r.budget_ok = r.budget_ok && gap_calls[i] <= *budget;
  return r;
}

namespace {

// A running enumeration with rendered output lines.
struct Job {
  std::function<std::optional<std::string>()> next;
  std::function<StreamCounters()> counters;
  std::function<nlohmann::json()> extra;  // optional additions to --stats
};

template <class T>
Job make_job(std::shared_ptr<SolutionStream<T>> s, std::function<std::string(const T&)> render) {
  Job j;
  j.next = [s, render]() -> std::optional<std::string> {
    auto v = s->next();
    if (!v) return std::nullopt;
    return render(*v);
  };
  j.counters = [s] { return s->counters(); };
  return j;
}

std::string bits(const Assignment& a) { return a.to_string(); }

std::string colours(const Colouring& c) {
  std::string s;
  for (auto v : c) s.push_back(static_cast<char>('0' + v));
  return s;
}

Job bit_job(StreamPtr<Assignment> s) {
  return make_job<Assignment>(std::shared_ptr<SolutionStream<Assignment>>(std::move(s)), bits);
}

// One problem instance, ready to run along either path.
struct Prepared {
  std::string legend;
  std::function<Job()> engine;
  std::function<std::vector<std::string>()> brute;
  bool native_lex = true;
  std::optional<std::uint64_t> gap_budget;
  bool budget_skips_first_gap = false;
};

std::string numbered(const char* prefix, int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += (i > 1 ? " " : "") + std::string(prefix) + std::to_string(i);
  return s;
}

std::vector<std::string> render_all(const std::vector<Assignment>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

std::uint64_t flasher_budget(std::size_t n) { return 4 * static_cast<std::uint64_t>(n) + 4; }

SatOptions sat_options(const RunConfig& cfg) { return SatOptions{cfg.conflict_budget}; }

Sigma2Options sigma2_options(const RunConfig& cfg) {
  Sigma2Options o;
  o.sat = sat_options(cfg);
  return o;
}

void expect_mode(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.mode.empty()) return;
  for (const char* m : allowed)
    if (cfg.mode == m) return;
  throw InvalidInstance("unknown --mode '" + cfg.mode + "' for " + cfg.subcommand);
}

Prepared prepare_cnf(const std::string& sub, const CnfFormula& f, const RunConfig& cfg) {
  Prepared p;
  const auto n = static_cast<std::size_t>(f.num_vars);
  p.legend = numbered("x", f.num_vars);
  auto opts = sat_options(cfg);
  if (sub == "sat-all") {
    expect_mode(cfg, {"lex", "blocking"});
    const bool blocking = cfg.mode == "blocking" || (cfg.mode.empty() && cfg.order == Order::discovery);
    p.native_lex = !blocking;
    p.gap_budget = blocking ? 1 : flasher_budget(n);
    p.engine = [f, blocking, opts] { return bit_job(allsat(f, blocking ? AllSatMode::blocking : AllSatMode::lex, opts)); };
    p.brute = [f, n] { return render_all(brute_force_solutions(n, [&](const Assignment& a) { return f.evaluate(a); })); };
  } else if (sub == "circ") {
    expect_mode(cfg, {});
    p.native_lex = false;
    p.engine = [f, opts] { return bit_job(circumscription_enum(f, opts)); };
    p.brute = [f, n] {
      return render_all(
          brute_force_solutions(n, [&](const Assignment& a) { return f.evaluate(a); }, BruteFilter::subset_minimal));
    };
  } else {
    expect_mode(cfg, {});
    p.gap_budget = flasher_budget(n);
    p.budget_skips_first_gap = true;
    p.engine = [f, opts] { return bit_job(cardmin_enum(f, opts)); };
    p.brute = [f, n] {
      return render_all(
          brute_force_solutions(n, [&](const Assignment& a) { return f.evaluate(a); }, BruteFilter::card_minimal));
    };
  }
  return p;
}

std::vector<std::string> qbf_brute(const QbfInstance& q) {
  return render_all(brute_force_solutions(q.free_vars.size(), [&](const Assignment& a) { return qbf_evaluate(q, a); }));
}

std::string free_legend(const QbfInstance& q) {
  std::string s;
  for (int v : q.free_vars) s += (s.empty() ? "x" : " x") + std::to_string(v);
  return s;
}

Prepared prepare_qbf(const std::string& sub, const QbfInstance& q, const RunConfig& cfg) {
  Prepared p;
  p.legend = free_legend(q);
  auto opts = sigma2_options(cfg);
  p.brute = [q] { return qbf_brute(q); };
  if (sub == "qbf-enum") {
    expect_mode(cfg, {"auto", "oracle", "exhaustive"});
    auto mode = cfg.mode == "oracle" ? QbfMode::oracle : cfg.mode == "exhaustive" ? QbfMode::exhaustive : QbfMode::automatic;
    if (mode != QbfMode::exhaustive && qbf_oracle_supported(q)) p.gap_budget = flasher_budget(q.free_vars.size());
    p.engine = [q, mode, opts] { return bit_job(qbf_enum(q, mode, opts)); };
  } else {
    expect_mode(cfg, {});
    p.native_lex = false;
    p.engine = [q, opts] {
      auto s = std::make_shared<PiToSigmaStream>(q, opts);
      Job j = make_job<Assignment>(s, bits);
      j.extra = [s] {
        nlohmann::json e;
        e["round_input_sizes"] = s->round_input_sizes();
        return e;
      };
      return j;
    };
  }
  return p;
}

std::vector<std::string> colour_brute(const Graph& g, int k) {
  const int n = g.num_vertices();
  std::vector<std::string> out;
  Colouring c(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (is_proper_colouring(g, c, k)) out.push_back(colours(c));
      return;
    }
    for (int col = 0; col < k; ++col) {
      c[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(col);
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::string> transversal_brute(int n, const std::vector<std::set<int>>& edges) {
  return render_all(brute_force_solutions(
      static_cast<std::size_t>(n),
      [&](const Assignment& a) {
        return std::all_of(edges.begin(), edges.end(), [&](const std::set<int>& e) {
          return std::any_of(e.begin(), e.end(), [&](int v) { return a.value_of(v); });
        });
      },
      BruteFilter::subset_minimal));
}

std::string repair_line(const DatabaseInstance& d, const Assignment& keep) {
  std::string s = keep.to_string();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (keep[i]) s += " " + d.atom(i).to_string();
  return s;
}

Prepared prepare_repair(const DatabaseFile& db) {
  Prepared p;
  for (const auto& a : db.database.atoms()) p.legend += (p.legend.empty() ? "" : " ") + a.to_string();
  p.gap_budget = flasher_budget(db.database.size());
  p.engine = [db] {
    std::shared_ptr<SolutionStream<Assignment>> s(repair_enum(db.database, db.egds));
    return make_job<Assignment>(s, [d = db.database](const Assignment& k) { return repair_line(d, k); });
  };
  p.brute = [db] {
    std::vector<std::string> out;
    for (const auto& k : brute_force_solutions(
             db.database.size(), [&](const Assignment& a) { return satisfies_egds(db.database, db.egds, a); },
             BruteFilter::subset_maximal))
      out.push_back(repair_line(db.database, k));
    return out;
  };
  return p;
}

Prepared prepare_diagnosis(const DiagnosisInstance& d, const RunConfig& cfg) {
  Prepared p;
  const auto n = d.components.size();
  p.legend = numbered("b", static_cast<int>(n));
  p.gap_budget = flasher_budget(n);
  p.budget_skips_first_gap = true;
  auto opts = sat_options(cfg);
  p.engine = [d, opts] { return bit_job(diagnosis_enum(d, opts)); };
  p.brute = [d, n] {
    validate_diagnosis(d);
    return render_all(brute_force_solutions(
        n,
        [&](const Assignment& keep) {
          SatOracle o(d.mu);
          for (std::size_t i = 0; i < n; ++i)
            if (keep[i]) o.add_formula(d.components[i]);
          return o.solve().sat();
        },
        BruteFilter::card_maximal));
  };
  return p;
}

Prepared prepare_abduction(const AbductionInstance& a, const RunConfig& cfg) {
  expect_mode(cfg, {"cegar", "exhaustive"});
  Prepared p;
  for (const auto& h : a.hypotheses)
    p.legend += (p.legend.empty() ? "" : " ") + std::string(h.positive ? "" : "-") + "x" + std::to_string(h.var);
  AbductionOptions opts;
  opts.sat = sat_options(cfg);
  if (cfg.mode == "exhaustive") opts.mode = AbductionMode::exhaustive;
  p.gap_budget = flasher_budget(a.hypotheses.size());
  p.engine = [a, opts] { return bit_job(abduction_enum(a, opts)); };
  p.brute = [a] {
    validate_abduction(a);
    return render_all(
        brute_force_solutions(a.hypotheses.size(), [&](const Assignment& e) { return is_explanation(a, e); }));
  };
  return p;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const std::set<std::string> kProblems = {"sat-all", "qbf-enum",   "pi-sigma", "circ",      "cardmin", "schaefer-enum",
                                         "diagnose", "abduce",    "repair",   "transversal", "domset", "color3"};

Prepared prepare(const std::string& sub, const std::string& text, const RunConfig& cfg) {
  if (sub == "sat-all" || sub == "circ" || sub == "cardmin") return prepare_cnf(sub, parse_dimacs(text), cfg);
  if (sub == "qbf-enum" || sub == "pi-sigma") return prepare_qbf(sub, parse_ecnf(text), cfg);
  if (sub == "diagnose") return prepare_diagnosis(parse_diagnosis(text), cfg);
  if (sub == "abduce") return prepare_abduction(parse_abduction(text), cfg);
  if (sub == "repair") return prepare_repair(parse_database(text));
  Prepared p;
  if (sub == "schaefer-enum") {
    auto f = parse_gamma(text);
    f.validate();
    p.legend = numbered("x", f.num_vars);
    p.gap_budget = flasher_budget(static_cast<std::size_t>(f.num_vars));
    p.engine = [f] { return bit_job(enum_sat_gamma(f)); };
    p.brute = [f] {
      return render_all(brute_force_solutions(static_cast<std::size_t>(f.num_vars),
                                              [&](const Assignment& a) { return f.evaluate(a); }));
    };
  } else if (sub == "transversal") {
    auto h = parse_hypergraph(text);
    p.legend = numbered("v", h.num_vertices());
    p.gap_budget = flasher_budget(static_cast<std::size_t>(h.num_vertices()));
    p.engine = [h] { return bit_job(transversal_enum(h)); };
    p.brute = [h] {
      return transversal_brute(h.num_vertices(), std::vector<std::set<int>>(h.edges().begin(), h.edges().end()));
    };
  } else if (sub == "domset") {
    auto g = parse_graph(text);
    p.legend = numbered("v", g.num_vertices());
    p.gap_budget = flasher_budget(static_cast<std::size_t>(g.num_vertices()));
    p.engine = [g] { return bit_job(domset_enum(g)); };
    p.brute = [g] { return transversal_brute(g.num_vertices(), closed_neighbourhoods(g)); };
  } else if (sub == "color3") {
    auto g = parse_graph(text);
    p.legend = numbered("v", g.num_vertices());
    p.gap_budget = flasher_budget(2 * static_cast<std::size_t>(g.num_vertices()));
    p.engine = [g] {
      std::shared_ptr<SolutionStream<Colouring>> s(colouring_enum(g, 3));
      return make_job<Colouring>(s, colours);
    };
    p.brute = [g] { return colour_brute(g, 3); };
  } else {
    throw InvalidInstance("unknown problem '" + sub + "'");
  }
  return p;
}

// Reductions: the source problem's solutions obtained through the target.
template <class I1, class I2, class S2>
Job reduction_job(const EReduction<I1, Assignment, I2, S2>& r, const I1& x, StreamPtr<S2> inner) {
  std::shared_ptr<ReductionStream<I1, Assignment, I2, S2>> s(ereduce_execute(r, x, std::move(inner)));
  Job j = make_job<Assignment>(s, bits);
  j.extra = [s] {
    const auto& t = s->trace();
    nlohmann::json e;
    e["trace"] = {{"inner_outputs", t.inner_outputs},
                  {"tau_empty", t.tau_empty},
                  {"tau_elements", t.tau_elements},
                  {"duplicates", t.duplicates}};
    return e;
  };
  return j;
}

struct ReductionRun {
  std::string legend;
  std::string sigma_text;
  std::function<Job()> job;
};

ReductionRun prepare_reduction(const std::string& kind, const std::string& text) {
  ReductionRun rr;
  if (kind == "trans-dom") {
    auto h = parse_hypergraph(text);
    auto r = trans_to_dom();
    auto g = r.sigma(h);
    rr.legend = numbered("v", h.num_vertices());
    rr.sigma_text = write_graph(g);
    rr.job = [r, h, g] { return reduction_job(r, h, domset_enum(g)); };
  } else if (kind == "3col-4col") {
    auto g = parse_graph(text);
    auto r = threecol_to_fourcol();
    auto g4 = r.sigma(g);
    rr.legend = numbered("v", g.num_vertices());
    rr.sigma_text = write_graph(g4);
    rr.job = [r, g, g4] {
      std::shared_ptr<ReductionStream<Graph, Colouring, Graph, Colouring>> s(
          ereduce_execute(r, g, colouring_enum(g4, 4)));
      Job j = make_job<Colouring>(s, colours);
      j.extra = [s] {
        nlohmann::json e;
        e["trace"] = {{"inner_outputs", s->trace().inner_outputs}, {"tau_empty", s->trace().tau_empty}};
        return e;
      };
      return j;
    };
  } else if (kind == "cardmin-mbd") {
    auto f = parse_dimacs(text);
    auto r = cardmin_to_mbd();
    auto d = r.sigma(f);
    rr.legend = numbered("x", f.num_vars);
    rr.sigma_text = write_diagnosis(d);
    rr.job = [r, f, d] { return reduction_job(r, f, diagnosis_enum(d)); };
  } else if (kind == "pi1sat-repair") {
    auto q = parse_ecnf(text);
    auto r = pi1sat_to_repair();
    auto db = r.sigma(q);
    rr.legend = free_legend(q);
    rr.sigma_text = write_database(db.database, db.egds);
    rr.job = [r, q, db] { return reduction_job(r, q, repair_enum(db.database, db.egds)); };
  } else if (kind == "const-elim") {
    auto f = parse_gamma(text);
    f.validate();
    auto r = constants_elimination();
    auto g = r.sigma(f);
    rr.legend = numbered("x", f.num_vars);
    rr.sigma_text = write_gamma(g);
    rr.job = [r, f, g] { return reduction_job(r, f, enum_sat_gamma(g)); };
  } else {
    throw InvalidInstance("unknown reduction '" + kind + "'");
  }
  return rr;
}

// Streams a job to out, honouring --order, --limit and --stats.
void stream_job(Job job, bool native_lex, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool buffer = cfg.order == Order::lex && !native_lex;
  std::vector<std::string> lines;
  DelayProfile profile;
  auto before = job.counters();
  while (true) {
    if (!buffer && cfg.limit && profile.outputs >= *cfg.limit) break;
    auto line = job.next();
    auto after = job.counters();
    detail::record_gap(profile, before, after);
    before = after;
    if (!line) break;
    ++profile.outputs;
    if (buffer) {
      lines.push_back(std::move(*line));
    } else {
      out << *line << '\n';
      out.flush();
    }
  }
  if (buffer) {
    std::sort(lines.begin(), lines.end());
    if (cfg.limit && lines.size() > *cfg.limit) lines.resize(*cfg.limit);
    for (const auto& l : lines) out << l << '\n';
    out.flush();
  }
  if (cfg.stats) {
    auto j = nlohmann::json::parse(profile.to_json());
    j["np_calls"] = profile.np_calls;
    if (job.extra) j.update(job.extra());
    err << j.dump() << '\n';
  }
}

// Seeded random instances for crosscheck --random, as input text.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::string cnf() {
    const int n = uniform(1, 10);
    CnfFormula f(n);
    for (int m = uniform(0, 3 * n); m > 0; --m) {
      Clause c;
      for (int w = uniform(1, 3); w > 0; --w) c.push_back({uniform(1, n), coin()});
      f.add_clause(c);
    }
    f.num_vars = n;
    return write_dimacs(f);
  }

  std::string gamma() {
    GammaFormula f;
    for (int r = uniform(1, 3); r > 0; --r) {
      const int arity = uniform(1, 3);
      std::set<std::uint32_t> tuples;
      for (std::uint32_t t = 0; t < (1U << arity); ++t)
        if (coin(0.6)) tuples.insert(t);
      if (tuples.empty()) tuples.insert(0);
      f.language.emplace("R" + std::to_string(r), BoolRelation(arity, tuples));
    }
    f.num_vars = uniform(1, 8);
    for (int c = uniform(1, 6); c > 0; --c) {
      auto it = std::next(f.language.begin(), uniform(0, static_cast<int>(f.language.size()) - 1));
      Constraint con{it->first, {}};
      for (int i = 0; i < it->second.arity(); ++i) con.vars.push_back(uniform(1, f.num_vars));
      f.constraints.push_back(con);
    }
    return write_gamma(f);
  }

  std::string hypergraph() {
    const int n = uniform(1, 10);
    Hypergraph h(n);
    for (int m = uniform(1, 6); m > 0; --m) {
      std::set<int> e;
      for (int w = uniform(1, 3); w > 0; --w) e.insert(uniform(1, n));
      h.add_edge(e);
    }
    return write_hypergraph(h);
  }

  std::string graph(int max_n) {
    const int n = uniform(1, max_n);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(0.35)) g.add_edge(u, v);
    return write_graph(g);
  }

  std::string instance(const std::string& sub) {
    if (sub == "sat-all" || sub == "circ" || sub == "cardmin") return cnf();
    if (sub == "schaefer-enum") return gamma();
    if (sub == "transversal") return hypergraph();
    if (sub == "domset") return graph(10);
    if (sub == "color3") return graph(7);
    throw InvalidInstance("--random is not available for " + sub);
  }

 private:
  std::mt19937_64 rng_;
};

CrosscheckReport crosscheck_text(const std::string& sub, const std::string& text, const RunConfig& cfg) {
  auto p = prepare(sub, text, cfg);
  auto job = p.engine();
  std::vector<std::string> lines;
  DelayProfile profile;
  auto before = job.counters();
  while (true) {
    auto line = job.next();
    auto after = job.counters();
    detail::record_gap(profile, before, after);
    before = after;
    if (!line) break;
    lines.push_back(std::move(*line));
  }
  return compare_runs(lines, p.brute(), p.native_lex, profile.oracle_calls, p.gap_budget, p.budget_skips_first_gap);
}

int run_crosscheck(const std::string& sub, std::size_t random, const RunConfig& cfg, std::ostream& out) {
  if (!kProblems.count(sub)) throw InvalidInstance("crosscheck: unknown problem '" + sub + "'");
  if (random == 0) {
    auto r = crosscheck_text(sub, read_input(cfg.input), cfg);
    out << r.summary() << '\n';
    return r.ok() ? kExitOk : kExitMismatch;
  }
  RandomSource src(cfg.seed);
  std::size_t good = 0;
  for (std::size_t i = 0; i < random; ++i) {
    auto text = src.instance(sub);
    auto r = crosscheck_text(sub, text, cfg);
    if (r.ok()) {
      ++good;
    } else {
      out << "# instance " << i << ": " << r.summary() << '\n' << "# " << text;
    }
  }
  out << (good == random ? "EQUAL " : "MISMATCH ") << good << "/" << random << '\n';
  return good == random ? kExitOk : kExitMismatch;
}

void schaefer_classify(const std::string& text, std::ostream& out) {
  auto f = parse_gamma(text);
  auto flags = [](const SchaeferClass& c) {
    return nlohmann::json{{"horn", c.horn},
                          {"dualhorn", c.dualhorn},
                          {"bijunctive", c.bijunctive},
                          {"affine", c.affine},
                          {"zero_valid", c.zero_valid},
                          {"one_valid", c.one_valid},
                          {"schaefer", c.is_schaefer()}};
  };
  out << "# one object per relation, then the language\n";
  for (const auto& [name, rel] : f.language) {
    auto j = flags(classify_relation(rel));
    j["relation"] = name;
    j["arity"] = rel.arity();
    out << j.dump() << '\n';
  }
  auto lang = flags(classify_language(f.language));
  auto kind = gamma_enum_kind(f);
  lang["relation"] = "*";
  lang["enum_path"] = kind ? to_string(*kind) : "sat";
  out << lang.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"enumkit: enumeration with SAT-style oracles"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunConfig cfg;
  std::string order = "native";
  std::size_t limit = 0;
  std::string target;
  std::string reduction;
  std::size_t random = 0;
  bool emit_sigma = false;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", cfg.input, "input file, - for stdin");
    if (needs_input) in->required();
    sub->add_option("--mode", cfg.mode, "engine variant");
    sub->add_option("--order", order, "lex or discovery")->check(CLI::IsMember({"native", "lex", "discovery"}));
    sub->add_option("--limit", limit, "stop after this many outputs")->check(CLI::PositiveNumber);
    sub->add_flag("--stats", cfg.stats, "delay profile as JSON on stderr");
    sub->add_option("--seed", cfg.seed, "seed for randomized runs");
    sub->add_option("--conflict-budget", cfg.conflict_budget, "SAT conflicts allowed per oracle call");
  };

  for (const auto& name : kProblems) common(app.add_subcommand(name, "enumerate " + name + " solutions"), true);
  common(app.add_subcommand("schaefer-classify", "closure flags of a constraint language"), true);
  auto* reduce = app.add_subcommand("reduce", "run a problem through an enumeration reduction");
  reduce->add_option("reduction", reduction, "reduction name")
      ->required()
      ->check(CLI::IsMember({"trans-dom", "3col-4col", "cardmin-mbd", "pi1sat-repair", "const-elim"}));
  common(reduce, true);
  reduce->add_flag("--emit-sigma", emit_sigma, "print the reduced instance and stop");
  auto* cross = app.add_subcommand("crosscheck", "compare the engine with brute force");
  cross->add_option("problem", target, "problem subcommand")->required();
  common(cross, false);
  cross->add_option("--random", random, "check this many seeded random instances");
  auto* brute = app.add_subcommand("brute", "brute-force solutions in lex order");
  brute->add_option("problem", target, "problem subcommand")->required();
  common(brute, true);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.order = order == "lex" ? Order::lex : order == "discovery" ? Order::discovery : Order::native;
  if (limit > 0) cfg.limit = limit;

  try {
    const auto& sub = cfg.subcommand;
    if (sub == "crosscheck") {
      if (random == 0 && cfg.input.empty()) throw InvalidInstance("crosscheck needs an input file or --random N");
      return run_crosscheck(target, random, cfg, out);
    }
    if (sub == "schaefer-classify") {
      schaefer_classify(read_input(cfg.input), out);
      return kExitOk;
    }
    if (sub == "reduce") {
      auto rr = prepare_reduction(reduction, read_input(cfg.input));
      if (emit_sigma) {
        out << rr.sigma_text;
        return kExitOk;
      }
      out << "# " << rr.legend << '\n';
      stream_job(rr.job(), false, cfg, out, err);
      return kExitOk;
    }
    if (sub == "brute") {
      if (!kProblems.count(target)) throw InvalidInstance("brute: unknown problem '" + target + "'");
      auto p = prepare(target, read_input(cfg.input), cfg);
      out << "# " << p.legend << '\n';
      auto lines = p.brute();
      std::sort(lines.begin(), lines.end());
      if (cfg.limit && lines.size() > *cfg.limit) lines.resize(*cfg.limit);
      for (const auto& l : lines) out << l << '\n';
      return kExitOk;
    }
    auto p = prepare(sub, read_input(cfg.input), cfg);
    out << "# " << p.legend << '\n';
    out.flush();
    stream_job(p.engine(), p.native_lex, cfg, out, err);
    return kExitOk;
  } catch (const ResourceLimit& e) {
    err << "enumkit: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "enumkit: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidInstance& e) {
    err << "enumkit: invalid instance: " << e.what() << '\n';
    return kExitInput;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace enumkit::cli
