#pragma once

#include <vector>

#include "enumkit/core/formula.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

/// Solve, emit the projection of the model, append the clause that forbids
/// that projection, repeat. One model-returning call per output plus one
/// final call. The oracle input grows by |projection| + 1 per output.
class BlockingEnumerator final : public SolutionStream<Assignment> {
 public:
  /// Projects onto 1..num_vars.
  explicit BlockingEnumerator(const CnfFormula& f, SatOptions options = {});
  BlockingEnumerator(const CnfFormula& f, std::vector<int> projection, SatOptions options = {});

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  const SatOracle& oracle() const noexcept { return oracle_; }
  const std::vector<Clause>& blocking_clauses() const noexcept { return blocked_; }

 private:
  SatOracle oracle_;
  std::vector<int> projection_;
  std::vector<Clause> blocked_;
  bool done_ = false;
  std::uint64_t steps_ = 0;
};

StreamPtr<Assignment> blocking_enumerate(const CnfFormula& f, std::vector<int> projection, SatOptions options = {});

}  // namespace enumkit
