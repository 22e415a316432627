#pragma once

#include <vector>

#include "enumkit/core/formula.hpp"

namespace enumkit {

enum class CardinalitySense { at_most, at_least, exactly };

struct CardinalityConstraint {
  std::vector<int> vars;
  int bound = 0;
  CardinalitySense sense = CardinalitySense::at_most;
};

/// Sequential counter. Auxiliary s(i,j) <=> "at least j of vars[0..i]" is
/// introduced from fresh_var_base upwards, fully defined in both directions
/// so every assignment of vars has exactly one extension. Counter cells that
/// are constant (j = 0, j > i) are folded away. Throws InvalidInstance when
/// the bound is out of range or vars repeat.
CnfFormula encode_cardinality(const CardinalityConstraint& c, int fresh_var_base);

/// Appends the encoding to f using variables above f.num_vars.
void add_cardinality(CnfFormula& f, const CardinalityConstraint& c);

}  // namespace enumkit
