#pragma once

// Text formats. Every parser throws ParseError with a 1-based line number;
// every serializer emits text its parser accepts.
//
//   DIMACS      c comments, "p cnf V C", zero-terminated clauses
//   ECNF        "p ecnf V C", optional "m dnf"/"m cnf", "f ... 0", then
//               alternating "a ... 0" / "e ... 0", then clauses or terms
//   Gamma       "rel NAME ARITY {t,t,...}", "vars N", "NAME(i,j,...)"
//   Hypergraph  optional "v N", one edge per line as vertex integers
//   Graph       "v N", then "i j" edge lines
//   Database    "dom c1 c2 ...", "pred(c,...).", "egd: a, b -> X = Y."
//   Diagnosis   "p diag V N", "b<i> lits 0" component clauses, "m lits 0"
//   Abduction   "p abd V", "h lits 0", "q v", then clause lines

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumkit/core/database.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"
#include "enumkit/core/graph.hpp"
#include "enumkit/core/instances.hpp"

namespace enumkit {

CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

QbfInstance parse_ecnf(std::string_view text);
std::string write_ecnf(const QbfInstance& q);

GammaFormula parse_gamma(std::string_view text);
std::string write_gamma(const GammaFormula& f);

Hypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

struct DatabaseFile {
  DatabaseInstance database;
  std::vector<Egd> egds;

  friend bool operator==(const DatabaseFile&, const DatabaseFile&) = default;
};

DatabaseFile parse_database(std::string_view text);
std::string write_database(const DatabaseInstance& d, const std::vector<Egd>& egds);

DiagnosisInstance parse_diagnosis(std::string_view text);
std::string write_diagnosis(const DiagnosisInstance& d);

AbductionInstance parse_abduction(std::string_view text);
std::string write_abduction(const AbductionInstance& a);

}  // namespace enumkit
