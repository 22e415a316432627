#pragma once

#include <map>
#include <optional>
#include <string>

#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"
#include "enumkit/engine/ereduction.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/schaefer/classify.hpp"

namespace enumkit {

/// Each constraint becomes the clauses excluding the tuples outside its
/// relation (one clause per missing tuple). No auxiliary variables.
CnfFormula gamma_to_cnf(const GammaFormula& f);

/// The decider enum_sat_gamma will use; nullopt means the SAT path.
std::optional<SchaeferKind> gamma_enum_kind(const GammaFormula& f);

/// Models of f in lex order. If the whole declared language shares a
/// Schaefer flag, a flasher over the matching polynomial decider (no SAT
/// calls); otherwise a flasher over gamma_to_cnf(f) with the SAT oracle.
StreamPtr<Assignment> enum_sat_gamma(const GammaFormula& f);

using ConstraintLanguage = std::map<std::string, BoolRelation>;

/// Searches for a conjunction of language constraints over x = 1, y = 2 and
/// up to max_aux auxiliaries 3, 4 whose models project onto (x, y) as
/// {00, 01, 11} with exactly one auxiliary extension each. Breadth-first, so
/// the returned gadget has the fewest auxiliaries, then the fewest
/// constraints. Throws ResourceLimit if a relation has arity above 4 or
/// max_aux exceeds 2.
std::optional<GammaFormula> imp_gadget_search(const ConstraintLanguage& gamma, int max_aux = 2);

/// Checks the gadget postconditions exhaustively.
bool is_imp_gadget(const GammaFormula& g);

/// Unary constant relations recognised by constants_elimination.
bool is_constant_true(const BoolRelation& r);
bool is_constant_false(const BoolRelation& r);

/// Rewrites a formula with unary T = {1} / F = {0} constraints into one over
/// the remaining relations plus IMP = {00, 01, 11}: variables forced false
/// become a fresh f, those forced true a fresh t, the others are renumbered
/// in order, and Imp(x, t), Imp(f, x) are added for every remaining x, plus
/// Imp(f, t). A variable forced both ways adds Imp(t, f). tau keeps models
/// with f = 0 and t = 1, restoring the forced variables; the all-zero and
/// all-one models of the rewritten formula map to nothing.
using GammaReduction = EReduction<GammaFormula, Assignment, GammaFormula, Assignment>;
GammaReduction constants_elimination();

}  // namespace enumkit
