#pragma once

#include <memory>

#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/stream.hpp"

namespace enumkit {

/// Backtracking over prefixes, 0-branch first, so solutions come out in
/// lexicographic order. If the 0-child of an extendable prefix is rejected,
/// the 1-child is taken without asking. Between two outputs at most 2n + 1
/// extension calls are made.
class Flasher final : public SolutionStream<Assignment> {
 public:
  explicit Flasher(std::shared_ptr<ExtensionOracle> ext);

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  const ExtensionOracle& extension() const noexcept { return *ext_; }

 private:
  bool ask();
  bool descend();

  std::shared_ptr<ExtensionOracle> ext_;
  PartialAssignment cursor_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t steps_ = 0;
  std::uint64_t calls_ = 0;
};

inline StreamPtr<Assignment> flasher(std::shared_ptr<ExtensionOracle> ext) {
  return std::make_unique<Flasher>(std::move(ext));
}

}  // namespace enumkit
