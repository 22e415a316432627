#pragma once

#include <cstddef>
#include <vector>

#include "enumkit/core/formula.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/oracles/sigma2.hpp"

namespace enumkit {

enum class QbfMode { automatic, oracle, exhaustive };

inline constexpr std::size_t kQbfExhaustiveMaxDepth = 4;
inline constexpr int kQbfExhaustiveMaxVars = 20;

/// Truth of psi under a free-variable assignment (positions follow
/// inst.free_vars), by expanding every block.
bool qbf_evaluate(const QbfInstance& inst, const Assignment& free_values);

/// All free-variable assignments (in free_vars order) making psi true.
///
/// The oracle path covers the prefixes (), (E), (A) and (E, A): a CNF matrix
/// under at most an exists block goes to the SAT oracle, everything else to
/// the exists-forall oracle. Other prefixes use exhaustive evaluation, which
/// is limited to depth 4 and 20 variables. Output is lex over free_vars.
StreamPtr<Assignment> qbf_enum(const QbfInstance& inst, QbfMode mode = QbfMode::automatic,
                               Sigma2Options options = {});

/// True when the oracle path handles this prefix.
bool qbf_oracle_supported(const QbfInstance& inst);

/// The blocking loop that turns a stream for psi' = forall y1 . phi(x, y0, y1)
/// into the solutions of exists y0 forall y1 . phi: fetch one (x, y0)
/// solution, emit x, append the clause (x != emitted) to the oracle input,
/// repeat until none is left. Accepts the prefixes (), (E), (A), (E, A);
/// output is in discovery order.
class PiToSigmaStream final : public SolutionStream<Assignment> {
 public:
  explicit PiToSigmaStream(const QbfInstance& inst, Sigma2Options options = {});

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  /// Oracle input size at the start of each round (before its call).
  const std::vector<std::size_t>& round_input_sizes() const noexcept { return round_sizes_; }
  std::size_t free_width() const noexcept { return free_.size(); }

 private:
  std::vector<int> free_;
  bool use_sat_ = false;
  std::unique_ptr<SatOracle> sat_;
  std::unique_ptr<Sigma2Oracle> sigma2_;
  std::vector<std::size_t> round_sizes_;
  bool done_ = false;
  std::uint64_t steps_ = 0;
};

StreamPtr<Assignment> pi_to_sigma_blocking(const QbfInstance& inst, Sigma2Options options = {});

}  // namespace enumkit
