#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "enumkit/core/assignment.hpp"

namespace enumkit {

inline constexpr int kMaxRelationArity = 8;

/// Extensional Boolean relation. Tuples are bit masks where coordinate i
/// (0-based) is bit (arity - 1 - i), so "011" has coordinate 0 false.
class BoolRelation {
 public:
  BoolRelation() = default;
  BoolRelation(int arity, std::set<std::uint32_t> tuples);

  static BoolRelation from_strings(const std::vector<std::string>& tuples);

  int arity() const noexcept { return arity_; }
  const std::set<std::uint32_t>& tuples() const noexcept { return tuples_; }
  bool contains(std::uint32_t tuple) const { return tuples_.count(tuple) != 0; }
  bool coordinate(std::uint32_t tuple, int i) const { return (tuple >> (arity_ - 1 - i)) & 1U; }
  std::string tuple_string(std::uint32_t tuple) const;

  friend bool operator==(const BoolRelation&, const BoolRelation&) = default;

 private:
  int arity_ = 0;
  std::set<std::uint32_t> tuples_;
};

struct Constraint {
  std::string relation;
  std::vector<int> vars;  // 1-based, length == arity

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Conjunction of relation applications over variables 1..num_vars.
struct GammaFormula {
  std::map<std::string, BoolRelation> language;
  std::vector<Constraint> constraints;
  int num_vars = 0;

  const BoolRelation& relation(const std::string& name) const;
  bool evaluate(const Assignment& a) const;
  /// Throws InvalidInstance on unknown relations, arity or range errors.
  void validate() const;

  friend bool operator==(const GammaFormula&, const GammaFormula&) = default;
};

}  // namespace enumkit
