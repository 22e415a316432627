#include "enumkit/engine/flasher.hpp"

#include <stdexcept>

namespace enumkit {

Flasher::Flasher(std::shared_ptr<ExtensionOracle> ext) : ext_(std::move(ext)) {
  if (!ext_) throw std::invalid_argument("flasher needs an extension oracle");
  cursor_ = PartialAssignment(ext_->length());
}

bool Flasher::ask() {
  ++calls_;
  ++steps_;
  return ext_->extends(cursor_);
}

// Extends the (extendable) cursor to a full solution.
bool Flasher::descend() {
  while (!cursor_.complete()) {
    ++steps_;
    cursor_.push(false);
    if (ask()) continue;
    cursor_.pop();
    cursor_.push(true);
  }
  return true;
}

std::optional<Assignment> Flasher::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!ask()) {
      done_ = true;
      return std::nullopt;
    }
    descend();
    return cursor_.to_assignment();
  }
  while (true) {
    ++steps_;
    if (cursor_.prefix_len() == 0) {
      done_ = true;
      return std::nullopt;
    }
    const bool last = cursor_.back();
    cursor_.pop();
    if (last) continue;
    cursor_.push(true);
    if (ask()) break;
    cursor_.pop();
  }
  descend();
  return cursor_.to_assignment();
}

StreamCounters Flasher::counters() const {
  return {steps_, calls_, ext_->np_calls(), ext_->stats().max_input_size};
}

}  // namespace enumkit
