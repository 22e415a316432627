#pragma once

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/core/graph.hpp"
#include "enumkit/core/io.hpp"
#include "enumkit/engine/ereduction.hpp"

namespace enumkit {

/// Hypergraph H on 1..n with edges e_1..e_m (set order) to the graph on
/// 1..n, y_e = n+1..n+m and an apex n+m+1: cliques on V(H) and on the
/// y-vertices, x ~ y_e iff x in e, apex ~ every x. tau keeps a minimal
/// dominating set iff it lies inside V(H); the sets {x, y_e} and
/// {apex, y_e} map to nothing. Throws InvalidInstance for an instance with
/// no vertex or no edge.
using TransDomReduction = EReduction<Hypergraph, Assignment, Graph, Assignment>;
TransDomReduction trans_to_dom();

/// G to G plus an apex adjacent to everything. tau swaps the apex colour
/// with colour 3 and drops the apex. Up to 4 four-colourings give the same
/// three-colouring.
using ColourReduction = EReduction<Graph, Colouring, Graph, Colouring>;
ColourReduction threecol_to_fourcol();

/// forall y . phi(x, y) with phi in 3-DNF to a database with EGDs whose
/// repairs are the models of psi plus at most k + 11 others. Atoms are
/// ordered p1(0,1), p1(1,0), ..., pk(1,0), q(0,1), q(1,0), the seven a-atoms
/// other than a(1,1,1), b0(0), b1(1). Terms with fewer than 3 literals are
/// padded by repeating their last literal. tau keeps a repair that deletes
/// exactly one p-atom per i and nothing else, reading x_i from pi(1,0).
using RepairReduction = EReduction<QbfInstance, Assignment, DatabaseFile, Assignment>;
RepairReduction pi1sat_to_repair();

/// Just sigma, with the same validation.
DatabaseFile pi1sat_to_repair_sigma(const QbfInstance& psi);

}  // namespace enumkit
