#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"
#include "enumkit/oracles/oracle_stats.hpp"
#include "enumkit/oracles/sat_oracle.hpp"
#include "enumkit/oracles/schaefer_decider.hpp"
#include "enumkit/oracles/sigma2.hpp"

namespace enumkit {

/// Answers "does this prefix extend to a solution?" for solutions of a fixed
/// length.
class ExtensionOracle {
 public:
  virtual ~ExtensionOracle() = default;
  virtual bool extends(const PartialAssignment& prefix) = 0;
  virtual std::size_t length() const = 0;
  virtual const OracleStats& stats() const = 0;
  /// Propositional SAT calls spent so far (0 for polynomial deciders).
  virtual std::uint64_t np_calls() const = 0;
};

/// Prefix position i becomes an assumption on decision_vars[i]; without an
/// explicit list the decision variables are 1..num_vars.
class SatExtension final : public ExtensionOracle {
 public:
  explicit SatExtension(const CnfFormula& f, SatOptions options = {});
  SatExtension(const CnfFormula& f, std::vector<int> decision_vars, SatOptions options = {});

  bool extends(const PartialAssignment& prefix) override;
  std::size_t length() const override { return decision_vars_.size(); }
  const OracleStats& stats() const override { return oracle_.stats(); }
  std::uint64_t np_calls() const override { return oracle_.stats().calls; }

  SatOracle& oracle() noexcept { return oracle_; }
  const std::vector<int>& decision_vars() const noexcept { return decision_vars_; }

 private:
  SatOracle oracle_;
  std::vector<int> decision_vars_;
};

class Sigma2Extension final : public ExtensionOracle {
 public:
  Sigma2Extension(std::shared_ptr<Sigma2Oracle> oracle, std::vector<int> decision_vars)
      : oracle_(std::move(oracle)), decision_vars_(std::move(decision_vars)) {}

  bool extends(const PartialAssignment& prefix) override;
  std::size_t length() const override { return decision_vars_.size(); }
  const OracleStats& stats() const override { return oracle_->stats(); }
  std::uint64_t np_calls() const override { return oracle_->np_calls(); }

 private:
  std::shared_ptr<Sigma2Oracle> oracle_;
  std::vector<int> decision_vars_;
};

class SchaeferExtension final : public ExtensionOracle {
 public:
  SchaeferExtension(const GammaFormula& f, SchaeferKind kind) : decider_(f, kind) {}

  bool extends(const PartialAssignment& prefix) override { return decider_.decide(prefix); }
  std::size_t length() const override { return static_cast<std::size_t>(decider_.num_vars()); }
  const OracleStats& stats() const override { return decider_.stats(); }
  std::uint64_t np_calls() const override { return 0; }

 private:
  SchaeferDecider decider_;
};

/// Wraps a predicate. Input size of a call defaults to the prefix length.
class FunctionExtension final : public ExtensionOracle {
 public:
  using Predicate = std::function<bool(const PartialAssignment&)>;

  FunctionExtension(std::size_t length, Predicate pred, std::size_t base_size = 0)
      : length_(length), pred_(std::move(pred)), base_size_(base_size) {}

  bool extends(const PartialAssignment& prefix) override {
    stats_.record(base_size_ + prefix.prefix_len());
    return pred_(prefix);
  }
  std::size_t length() const override { return length_; }
  const OracleStats& stats() const override { return stats_; }
  std::uint64_t np_calls() const override { return 0; }

 private:
  std::size_t length_;
  Predicate pred_;
  std::size_t base_size_;
  OracleStats stats_;
};

}  // namespace enumkit
