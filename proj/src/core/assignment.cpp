#include "enumkit/core/assignment.hpp"

#include <stdexcept>

namespace enumkit {

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Assignment Assignment::from_string(std::string_view bits) {
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string contains non-binary character");
    out.push_back(c == '1' ? 1 : 0);
  }
  return Assignment(std::move(out));
}

std::size_t Assignment::weight() const noexcept {
  std::size_t w = 0;
  for (auto b : bits_) w += b;
  return w;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::strong_ordering lex_compare(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_compare: length mismatch");
  return a <=> b;
}

PartialAssignment::PartialAssignment(std::size_t num_vars, std::vector<std::uint8_t> prefix)
    : num_vars_(num_vars), bits_(std::move(prefix)) {
  if (bits_.size() > num_vars_) throw std::invalid_argument("prefix longer than variable count");
  for (auto& b : bits_) b = b ? 1 : 0;
}

void PartialAssignment::push(bool value) {
  if (bits_.size() == num_vars_) throw std::out_of_range("prefix already complete");
  bits_.push_back(value ? 1 : 0);
}

Assignment PartialAssignment::to_assignment() const {
  if (!complete()) throw std::logic_error("partial assignment is not complete");
  return Assignment(bits_);
}

std::string PartialAssignment::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  s.append(num_vars_ - bits_.size(), '*');
  return s;
}

}  // namespace enumkit
