#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace enumkit {

/// Total truth assignment over variables 1..n, stored as one byte per bit.
///
/// Ordering is lexicographic from variable 1 with 0 before 1, which equals
/// the integer order when variable 1 is read as the most significant bit.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  static Assignment from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  // 0-based position access.
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

  // 1-based variable access.
  bool value_of(int var) const { return bits_[static_cast<std::size_t>(var - 1)] != 0; }

  std::size_t weight() const noexcept;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Lexicographic comparison; throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_compare(const Assignment& a, const Assignment& b);

/// First prefix_len() positions decided, the rest free.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t num_vars) : num_vars_(num_vars) {}
  PartialAssignment(std::size_t num_vars, std::vector<std::uint8_t> prefix);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t prefix_len() const noexcept { return bits_.size(); }
  bool complete() const noexcept { return bits_.size() == num_vars_; }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push(bool value);
  void pop() { bits_.pop_back(); }
  bool back() const { return bits_.back() != 0; }

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  Assignment to_assignment() const;
  std::string to_string() const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace enumkit
