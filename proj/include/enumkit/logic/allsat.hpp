#pragma once

#include "enumkit/core/formula.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

enum class AllSatMode { blocking, lex };

/// All models of f over 1..num_vars. blocking: solve-and-block in discovery
/// order; lex: flasher with assumption-based extension checks.
StreamPtr<Assignment> allsat(const CnfFormula& f, AllSatMode mode, SatOptions options = {});

}  // namespace enumkit
