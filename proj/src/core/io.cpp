#include "enumkit/core/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "enumkit/core/errors.hpp"

namespace enumkit {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto raw = text.substr(0, end);
    lines.push_back({number++, trim(raw)});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return value;
}

bool starts_with_word(std::string_view line, std::string_view word) {
  if (line.substr(0, word.size()) != word) return false;
  return line.size() == word.size() || std::isspace(static_cast<unsigned char>(line[word.size()]));
}

// Reads zero-terminated literal lists from tokens; `pending` carries an
// unfinished list across lines.
void consume_literals(const std::vector<std::string_view>& toks, std::size_t first, std::size_t line, int num_vars,
                      std::vector<Literal>& pending, std::vector<std::vector<Literal>>& done) {
  for (std::size_t i = first; i < toks.size(); ++i) {
    long code = parse_int(toks[i], line);
    if (code == 0) {
      done.push_back(std::move(pending));
      pending.clear();
      continue;
    }
    long var = code < 0 ? -code : code;
    if (var > num_vars)
      throw ParseError("variable " + std::to_string(var) + " exceeds header count " + std::to_string(num_vars), line);
    pending.push_back(Literal::from_dimacs(static_cast<int>(code)));
  }
}

std::vector<int> parse_var_list(const std::vector<std::string_view>& toks, std::size_t line, int num_vars) {
  std::vector<int> vars;
  if (toks.size() < 2 || toks.back() != "0") throw ParseError("variable list must end with 0", line);
  for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
    long v = parse_int(toks[i], line);
    if (v < 1 || v > num_vars) throw ParseError("variable " + std::to_string(v) + " out of range", line);
    vars.push_back(static_cast<int>(v));
  }
  return vars;
}

std::string literals_line(const std::vector<Literal>& lits) {
  std::string s;
  for (const auto& l : lits) s += std::to_string(l.to_dimacs()) + " ";
  return s + "0\n";
}

}  // namespace

// ---------------------------------------------------------------- DIMACS

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  long declared_clauses = -1;
  std::vector<Literal> pending;
  std::vector<std::vector<Literal>> raw;
  std::size_t last_line = 0;
  for (const auto& [number, line] : split_lines(text)) {
    last_line = number;
    if (line.empty() || line.front() == 'c') continue;
    if (line == "%") break;
    auto toks = split_ws(line);
    if (toks.front() == "p") {
      if (declared_clauses >= 0) throw ParseError("duplicate header", number);
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError("malformed header, expected 'p cnf V C'", number);
      long v = parse_int(toks[2], number);
      declared_clauses = parse_int(toks[3], number);
      if (v < 0 || declared_clauses < 0) throw ParseError("negative header count", number);
      f.num_vars = static_cast<int>(v);
      continue;
    }
    if (declared_clauses < 0) throw ParseError("clause before 'p cnf' header", number);
    consume_literals(toks, 0, number, f.num_vars, pending, raw);
  }
  if (declared_clauses < 0) throw ParseError("missing 'p cnf' header", last_line);
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", last_line);
  if (static_cast<long>(raw.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, body has " +
                         std::to_string(raw.size()),
                     last_line);
  const int declared_vars = f.num_vars;
  for (const auto& c : raw) f.add_clause(c);
  f.num_vars = declared_vars;
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::string s = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) s += literals_line(c);
  return s;
}

// ---------------------------------------------------------------- ECNF

QbfInstance parse_ecnf(std::string_view text) {
  int num_vars = -1;
  long declared_rows = -1;
  bool dnf = false;
  bool saw_rows = false;
  bool saw_free = false;
  std::vector<int> free_vars;
  std::vector<QuantifierBlock> blocks;
  std::vector<Literal> pending;
  std::vector<std::vector<Literal>> rows;
  std::size_t last_line = 0;

  for (const auto& [number, line] : split_lines(text)) {
    last_line = number;
    if (line.empty() || line.front() == 'c') continue;
    auto toks = split_ws(line);
    const auto head = toks.front();
    if (head == "p") {
      if (num_vars >= 0) throw ParseError("duplicate header", number);
      if (toks.size() != 4 || toks[1] != "ecnf") throw ParseError("malformed header, expected 'p ecnf V C'", number);
      num_vars = static_cast<int>(parse_int(toks[2], number));
      declared_rows = parse_int(toks[3], number);
      if (num_vars < 0 || declared_rows < 0) throw ParseError("negative header count", number);
      continue;
    }
    if (num_vars < 0) throw ParseError("content before 'p ecnf' header", number);
    if (head == "m") {
      if (saw_rows || saw_free) throw ParseError("matrix form flag must precede the prefix", number);
      if (toks.size() != 2 || (toks[1] != "dnf" && toks[1] != "cnf"))
        throw ParseError("expected 'm dnf' or 'm cnf'", number);
      dnf = toks[1] == "dnf";
      continue;
    }
    if (head == "f") {
      if (saw_free || !blocks.empty() || saw_rows) throw ParseError("free block must come first and once", number);
      saw_free = true;
      free_vars = parse_var_list(toks, number, num_vars);
      continue;
    }
    if (head == "a" || head == "e") {
      if (saw_rows) throw ParseError("quantifier block after matrix rows", number);
      auto q = head == "a" ? Quantifier::forall : Quantifier::exists;
      if (!blocks.empty() && blocks.back().quantifier == q)
        throw ParseError("quantifier blocks must alternate", number);
      blocks.push_back({q, parse_var_list(toks, number, num_vars)});
      continue;
    }
    saw_rows = true;
    consume_literals(toks, 0, number, num_vars, pending, rows);
  }
  if (num_vars < 0) throw ParseError("missing 'p ecnf' header", last_line);
  if (!pending.empty()) throw ParseError("last row is not terminated by 0", last_line);
  if (static_cast<long>(rows.size()) != declared_rows)
    throw ParseError("header declares " + std::to_string(declared_rows) + " rows, body has " +
                         std::to_string(rows.size()),
                     last_line);

  QbfInstance q;
  q.free_vars = std::move(free_vars);
  q.blocks = std::move(blocks);
  if (dnf) {
    DnfFormula m;
    for (const auto& r : rows) m.add_term(r);
    m.num_vars = num_vars;
    q.matrix = std::move(m);
  } else {
    CnfFormula m;
    for (const auto& r : rows) m.add_clause(r);
    m.num_vars = num_vars;
    q.matrix = std::move(m);
  }
  try {
    q.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what(), last_line);
  }
  return q;
}

std::string write_ecnf(const QbfInstance& q) {
  const auto* cnf = std::get_if<CnfFormula>(&q.matrix);
  const auto& rows = cnf ? cnf->clauses : std::get<DnfFormula>(q.matrix).terms;
  std::string s = "p ecnf " + std::to_string(q.num_vars()) + " " + std::to_string(rows.size()) + "\n";
  if (!cnf) s += "m dnf\n";
  s += "f";
  for (int v : q.free_vars) s += " " + std::to_string(v);
  s += " 0\n";
  for (const auto& b : q.blocks) {
    s += b.quantifier == Quantifier::forall ? "a" : "e";
    for (int v : b.vars) s += " " + std::to_string(v);
    s += " 0\n";
  }
  for (const auto& r : rows) s += literals_line(r);
  return s;
}

// ---------------------------------------------------------------- Gamma

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

}  // namespace

GammaFormula parse_gamma(std::string_view text) {
  GammaFormula f;
  int declared_vars = -1;
  int max_var = 0;
  for (const auto& [number, line] : split_lines(text)) {
    if (line.empty() || line.front() == '#') continue;
    if (starts_with_word(line, "c") && line.find('(') == std::string_view::npos) continue;
    if (starts_with_word(line, "rel")) {
      auto open = line.find('{');
      auto close = line.rfind('}');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("relation definition needs a {tuple,...} list", number);
      auto toks = split_ws(line.substr(0, open));
      if (toks.size() != 3) throw ParseError("expected 'rel NAME ARITY {...}'", number);
      std::string name(toks[1]);
      if (!std::all_of(name.begin(), name.end(), name_char)) throw ParseError("bad relation name '" + name + "'", number);
      long arity = parse_int(toks[2], number);
      if (arity < 1 || arity > kMaxRelationArity)
        throw ParseError("arity must be in 1.." + std::to_string(kMaxRelationArity), number);
      std::vector<std::string> tuples;
      auto body = line.substr(open + 1, close - open - 1);
      while (!body.empty()) {
        auto comma = body.find(',');
        auto tok = trim(body.substr(0, comma));
        if (!tok.empty()) tuples.emplace_back(tok);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      if (tuples.empty()) throw ParseError("relation '" + name + "' is empty", number);
      if (f.language.count(name)) throw ParseError("relation '" + name + "' defined twice", number);
      try {
        auto r = BoolRelation::from_strings(tuples);
        if (r.arity() != arity) throw ParseError("tuple length differs from declared arity", number);
        f.language.emplace(name, std::move(r));
      } catch (const InvalidInstance& e) {
        throw ParseError(e.what(), number);
      }
      continue;
    }
    if (starts_with_word(line, "vars")) {
      auto toks = split_ws(line);
      if (toks.size() != 2) throw ParseError("expected 'vars N'", number);
      declared_vars = static_cast<int>(parse_int(toks[1], number));
      if (declared_vars < 0) throw ParseError("negative variable count", number);
      continue;
    }
    // One or more NAME(i,j,...) applications.
    std::string_view rest = line;
    while (true) {
      rest = trim(rest);
      while (!rest.empty() && (rest.front() == '&' || rest.front() == ',')) rest = trim(rest.substr(1));
      if (rest.empty()) break;
      auto open = rest.find('(');
      auto close = rest.find(')');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("expected a constraint NAME(i,j,...)", number);
      std::string name(trim(rest.substr(0, open)));
      if (!f.language.count(name)) throw ParseError("undefined relation '" + name + "'", number);
      Constraint c{name, {}};
      auto args = rest.substr(open + 1, close - open - 1);
      while (true) {
        auto comma = args.find(',');
        auto tok = trim(args.substr(0, comma));
        if (tok.empty()) throw ParseError("empty constraint argument", number);
        long v = parse_int(tok, number);
        if (v < 1) throw ParseError("variables are 1-based", number);
        c.vars.push_back(static_cast<int>(v));
        max_var = std::max(max_var, static_cast<int>(v));
        if (comma == std::string_view::npos) break;
        args.remove_prefix(comma + 1);
      }
      const int arity = f.language.at(name).arity();
      if (static_cast<int>(c.vars.size()) != arity)
        throw ParseError("arity mismatch: " + name + " takes " + std::to_string(arity) + " arguments, got " +
                             std::to_string(c.vars.size()),
                         number);
      if (declared_vars >= 0 && max_var > declared_vars)
        throw ParseError("variable " + std::to_string(max_var) + " exceeds 'vars' count", number);
      f.constraints.push_back(std::move(c));
      rest = rest.substr(close + 1);
    }
  }
  f.num_vars = declared_vars >= 0 ? declared_vars : max_var;
  if (max_var > f.num_vars) throw ParseError("constraint variable exceeds 'vars' count", 0);
  return f;
}

std::string write_gamma(const GammaFormula& f) {
  std::string s;
  for (const auto& [name, r] : f.language) {
    s += "rel " + name + " " + std::to_string(r.arity()) + " {";
    bool first = true;
    for (auto t : r.tuples()) {
      if (!first) s += ",";
      first = false;
      s += r.tuple_string(t);
    }
    s += "}\n";
  }
  s += "vars " + std::to_string(f.num_vars) + "\n";
  for (const auto& c : f.constraints) {
    s += c.relation + "(";
    for (std::size_t i = 0; i < c.vars.size(); ++i) s += (i ? "," : "") + std::to_string(c.vars[i]);
    s += ")\n";
  }
  return s;
}

// ---------------------------------------------------------------- graphs

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph h;
  int declared = -1;
  std::vector<std::pair<std::size_t, std::set<int>>> edges;
  int max_vertex = 0;
  for (const auto& [number, line] : split_lines(text)) {
    if (line.empty() || line.front() == '#' || line.front() == 'c') continue;
    auto toks = split_ws(line);
    if (toks.front() == "v") {
      if (toks.size() != 2) throw ParseError("expected 'v N'", number);
      declared = static_cast<int>(parse_int(toks[1], number));
      if (declared < 0) throw ParseError("negative vertex count", number);
      continue;
    }
    std::set<int> e;
    for (auto t : toks) {
      long v = parse_int(t, number);
      if (v < 1) throw ParseError("vertices are 1-based", number);
      e.insert(static_cast<int>(v));
      max_vertex = std::max(max_vertex, static_cast<int>(v));
    }
    edges.emplace_back(number, std::move(e));
  }
  if (declared >= 0 && max_vertex > declared) throw ParseError("hyperedge vertex exceeds 'v' count", 0);
  h = Hypergraph(declared >= 0 ? declared : max_vertex);
  for (auto& [number, e] : edges) h.add_edge(std::move(e));
  return h;
}

std::string write_hypergraph(const Hypergraph& h) {
  std::string s = "v " + std::to_string(h.num_vertices()) + "\n";
  for (const auto& e : h.edges()) {
    bool first = true;
    for (int v : e) {
      s += (first ? "" : " ") + std::to_string(v);
      first = false;
    }
    s += "\n";
  }
  return s;
}

Graph parse_graph(std::string_view text) {
  Graph g;
  bool header = false;
  for (const auto& [number, line] : split_lines(text)) {
    if (line.empty() || line.front() == '#' || line.front() == 'c') continue;
    auto toks = split_ws(line);
    if (toks.front() == "v") {
      if (header) throw ParseError("duplicate 'v' line", number);
      if (toks.size() != 2) throw ParseError("expected 'v N'", number);
      long n = parse_int(toks[1], number);
      if (n < 0) throw ParseError("negative vertex count", number);
      g = Graph(static_cast<int>(n));
      header = true;
      continue;
    }
    if (!header) throw ParseError("edge before 'v N' line", number);
    if (toks.size() != 2) throw ParseError("expected an edge 'i j'", number);
    try {
      g.add_edge(static_cast<int>(parse_int(toks[0], number)), static_cast<int>(parse_int(toks[1], number)));
    } catch (const InvalidInstance& e) {
      throw ParseError(e.what(), number);
    }
  }
  if (!header) throw ParseError("missing 'v N' line", 0);
  return g;
}

std::string write_graph(const Graph& g) {
  std::string s = "v " + std::to_string(g.num_vertices()) + "\n";
  for (const auto& [a, b] : g.edges()) s += std::to_string(a) + " " + std::to_string(b) + "\n";
  return s;
}

// ---------------------------------------------------------------- database

namespace {

bool token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Atom parse_atom(std::string_view s, std::size_t line) {
  s = trim(s);
  auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')') throw ParseError("malformed atom '" + std::string(s) + "'", line);
  Atom a;
  a.predicate = std::string(trim(s.substr(0, open)));
  if (a.predicate.empty() || !std::all_of(a.predicate.begin(), a.predicate.end(), token_char))
    throw ParseError("bad predicate symbol in '" + std::string(s) + "'", line);
  auto args = s.substr(open + 1, s.size() - open - 2);
  if (!trim(args).empty()) {
    while (true) {
      auto comma = args.find(',');
      auto tok = trim(args.substr(0, comma));
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), token_char))
        throw ParseError("bad argument in '" + std::string(s) + "'", line);
      a.args.emplace_back(tok);
      if (comma == std::string_view::npos) break;
      args.remove_prefix(comma + 1);
    }
  }
  return a;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

DatabaseFile parse_database(std::string_view text) {
  DatabaseFile out;
  std::vector<std::string> domain;
  std::vector<std::pair<std::size_t, Atom>> atoms;
  std::vector<std::pair<std::size_t, Egd>> egds;

  std::string statement;
  std::size_t statement_line = 0;
  int depth = 0;
  auto finish_statement = [&](std::size_t line) {
    auto s = trim(statement);
    if (s.empty()) return;
    if (s.substr(0, 4) == "egd:") {
      auto body_and_eq = s.substr(4);
      auto arrow = body_and_eq.find("->");
      if (arrow == std::string_view::npos) throw ParseError("EGD without '->'", line);
      Egd e;
      for (auto part : split_top_level(body_and_eq.substr(0, arrow), ',')) e.body.push_back(parse_atom(part, line));
      auto eq = body_and_eq.substr(arrow + 2);
      auto sign = eq.find('=');
      if (sign == std::string_view::npos) throw ParseError("malformed equation in EGD", line);
      e.lhs = std::string(trim(eq.substr(0, sign)));
      e.rhs = std::string(trim(eq.substr(sign + 1)));
      try {
        e.validate();
      } catch (const InvalidInstance& err) {
        throw ParseError(err.what(), line);
      }
      egds.emplace_back(line, std::move(e));
    } else {
      auto a = parse_atom(s, line);
      if (!a.ground()) throw ParseError("database atom " + a.to_string() + " contains a variable", line);
      atoms.emplace_back(line, std::move(a));
    }
    statement.clear();
  };

  for (const auto& [number, line] : split_lines(text)) {
    std::string_view l = line;
    if (auto hash = l.find_first_of("#%"); hash != std::string_view::npos) l = trim(l.substr(0, hash));
    if (l.empty()) continue;
    if (trim(statement).empty() && starts_with_word(l, "dom")) {
      auto rest = l.substr(3);
      if (!rest.empty() && rest.back() == '.') rest.remove_suffix(1);
      for (auto tok : split_ws(rest)) {
        if (!std::all_of(tok.begin(), tok.end(), token_char) || is_variable_token(std::string(tok)))
          throw ParseError("bad domain constant '" + std::string(tok) + "'", number);
        domain.emplace_back(tok);
      }
      continue;
    }
    for (char c : l) {
      if (trim(statement).empty()) statement_line = number;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced ')'", number);
      if (c == '.' && depth == 0) {
        finish_statement(statement_line);
        continue;
      }
      statement.push_back(c);
    }
    statement.push_back(' ');
  }
  if (!trim(statement).empty()) throw ParseError("statement not terminated by '.'", statement_line);

  if (!domain.empty()) {
    auto check = [&](const std::string& c, std::size_t line) {
      if (!is_variable_token(c) && std::find(domain.begin(), domain.end(), c) == domain.end())
        throw ParseError("constant '" + c + "' is not in the declared domain", line);
    };
    for (const auto& [line, a] : atoms)
      for (const auto& c : a.args) check(c, line);
    for (const auto& [line, e] : egds)
      for (const auto& a : e.body)
        for (const auto& c : a.args) check(c, line);
  }
  out.database = DatabaseInstance(std::move(domain));
  for (auto& [line, a] : atoms) out.database.add_atom(std::move(a));
  for (auto& [line, e] : egds) out.egds.push_back(std::move(e));
  return out;
}

std::string write_database(const DatabaseInstance& d, const std::vector<Egd>& egds) {
  std::string s;
  if (!d.domain().empty()) {
    s += "dom";
    for (const auto& c : d.domain()) s += " " + c;
    s += "\n";
  }
  for (const auto& a : d.atoms()) s += a.to_string() + ".\n";
  for (const auto& e : egds) s += e.to_string() + "\n";
  return s;
}

// ---------------------------------------------------------------- diagnosis

DiagnosisInstance parse_diagnosis(std::string_view text) {
  int num_vars = -1;
  long num_components = -1;
  DiagnosisInstance d;
  std::size_t last_line = 0;
  for (const auto& [number, line] : split_lines(text)) {
    last_line = number;
    if (line.empty() || line.front() == 'c') continue;
    auto toks = split_ws(line);
    if (toks.front() == "p") {
      if (num_vars >= 0) throw ParseError("duplicate header", number);
      if (toks.size() != 4 || toks[1] != "diag") throw ParseError("expected 'p diag V N'", number);
      num_vars = static_cast<int>(parse_int(toks[2], number));
      num_components = parse_int(toks[3], number);
      if (num_vars < 0 || num_components < 0) throw ParseError("negative header count", number);
      d.components.assign(static_cast<std::size_t>(num_components), CnfFormula(num_vars));
      d.mu = CnfFormula(num_vars);
      continue;
    }
    if (num_vars < 0) throw ParseError("content before 'p diag' header", number);
    CnfFormula* target = nullptr;
    if (toks.front() == "m") {
      target = &d.mu;
    } else if (toks.front().size() > 1 && toks.front().front() == 'b') {
      long i = parse_int(toks.front().substr(1), number);
      if (i < 1 || i > num_components) throw ParseError("component index out of range", number);
      target = &d.components[static_cast<std::size_t>(i - 1)];
    } else {
      throw ParseError("expected a 'b<i>' or 'm' clause line", number);
    }
    std::vector<Literal> pending;
    std::vector<std::vector<Literal>> done;
    consume_literals(toks, 1, number, num_vars, pending, done);
    if (!pending.empty() || done.size() != 1) throw ParseError("expected exactly one zero-terminated clause", number);
    target->add_clause(done.front());
    target->num_vars = num_vars;
  }
  if (num_vars < 0) throw ParseError("missing 'p diag' header", last_line);
  return d;
}

std::string write_diagnosis(const DiagnosisInstance& d) {
  std::string s =
      "p diag " + std::to_string(d.num_vars()) + " " + std::to_string(d.components.size()) + "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (const auto& c : d.components[i].clauses) s += "b" + std::to_string(i + 1) + " " + literals_line(c);
  for (const auto& c : d.mu.clauses) s += "m " + literals_line(c);
  return s;
}

// ---------------------------------------------------------------- abduction

AbductionInstance parse_abduction(std::string_view text) {
  int num_vars = -1;
  bool saw_q = false;
  AbductionInstance a;
  std::vector<Literal> pending;
  std::vector<std::vector<Literal>> clauses;
  std::size_t last_line = 0;
  for (const auto& [number, line] : split_lines(text)) {
    last_line = number;
    if (line.empty() || line.front() == 'c') continue;
    auto toks = split_ws(line);
    if (toks.front() == "p") {
      if (num_vars >= 0) throw ParseError("duplicate header", number);
      if (toks.size() != 3 || toks[1] != "abd") throw ParseError("expected 'p abd V'", number);
      num_vars = static_cast<int>(parse_int(toks[2], number));
      if (num_vars < 0) throw ParseError("negative variable count", number);
      continue;
    }
    if (num_vars < 0) throw ParseError("content before 'p abd' header", number);
    if (toks.front() == "h") {
      std::vector<Literal> lits;
      std::vector<std::vector<Literal>> done;
      consume_literals(toks, 1, number, num_vars, lits, done);
      if (!lits.empty() || done.size() != 1) throw ParseError("hypothesis line must end with 0", number);
      for (const auto& l : done.front()) a.hypotheses.push_back(l);
      continue;
    }
    if (toks.front() == "q") {
      if (saw_q || toks.size() != 2) throw ParseError("expected a single 'q v' line", number);
      long q = parse_int(toks[1], number);
      if (q < 1 || q > num_vars) throw ParseError("manifestation variable out of range", number);
      a.q = static_cast<int>(q);
      saw_q = true;
      continue;
    }
    consume_literals(toks, 0, number, num_vars, pending, clauses);
  }
  if (num_vars < 0) throw ParseError("missing 'p abd' header", last_line);
  if (!saw_q) throw ParseError("missing 'q v' line", last_line);
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", last_line);
  for (const auto& h : a.hypotheses)
    if (h.var == a.q) throw ParseError("manifestation variable occurs in the hypotheses", last_line);
  a.gamma = CnfFormula(num_vars);
  for (const auto& c : clauses) a.gamma.add_clause(c);
  a.gamma.num_vars = num_vars;
  return a;
}

std::string write_abduction(const AbductionInstance& a) {
  std::string s = "p abd " + std::to_string(a.num_vars()) + "\n";
  s += "h " + literals_line(a.hypotheses);
  s += "q " + std::to_string(a.q) + "\n";
  for (const auto& c : a.gamma.clauses) s += literals_line(c);
  return s;
}

}  // namespace enumkit
