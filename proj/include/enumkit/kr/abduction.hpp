#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/instances.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

/// Throws InvalidInstance if q occurs among the hypotheses or gamma is
/// unsatisfiable.
void validate_abduction(const AbductionInstance& inst, SatOptions options = {});

/// E (a selection over H) explains q iff gamma and E is satisfiable and
/// gamma and E entail q.
bool is_explanation(const AbductionInstance& inst, const Assignment& selection, SatOptions options = {});

enum class AbductionMode { cegar, exhaustive };

struct AbductionOptions {
  AbductionMode mode = AbductionMode::cegar;
  std::size_t max_iterations = 10000;
  std::size_t exhaustive_limit = 12;  // undecided hypotheses
  SatOptions sat;
};

/// Extension check for explanations. In CEGAR mode a candidate E comes from
/// a SAT call over gamma, the selector links (-s_j or h_j) and the
/// countermodel clauses; E is verified by asking whether gamma, E and -q is
/// satisfiable. A model m of that query adds the clause "E contains some
/// hypothesis m falsifies", which every explanation satisfies, so these
/// clauses are kept across calls. Exhaustive mode tries every completion of
/// the prefix.
class AbductionOracle final : public ExtensionOracle {
 public:
  explicit AbductionOracle(AbductionInstance inst, AbductionOptions options = {});

  bool extends(const PartialAssignment& prefix) override;
  std::size_t length() const override { return inst_.hypotheses.size(); }
  const OracleStats& stats() const override { return stats_; }
  std::uint64_t np_calls() const override { return np_calls_; }

  std::size_t countermodels() const noexcept { return countermodels_; }

 private:
  bool extends_cegar(const PartialAssignment& prefix);
  bool extends_exhaustive(const PartialAssignment& prefix);
  Literal selector(std::size_t j) const { return Literal::pos(base_ + 1 + static_cast<int>(j)); }

  AbductionInstance inst_;
  AbductionOptions options_;
  int base_ = 0;
  SatOracle candidates_;
  SatOracle verifier_;  // gamma and -q
  SatOracle consistency_;  // gamma
  OracleStats stats_;
  std::uint64_t np_calls_ = 0;
  std::size_t countermodels_ = 0;
};

bool abduction_extsol(const AbductionInstance& inst, const PartialAssignment& decided, AbductionOptions options = {});

/// All explanations (not only minimal ones) as selection vectors over H, lex.
StreamPtr<Assignment> abduction_enum(const AbductionInstance& inst, AbductionOptions options = {});

}  // namespace enumkit
