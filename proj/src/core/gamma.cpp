#include "enumkit/core/gamma.hpp"

#include <stdexcept>

#include "enumkit/core/errors.hpp"

namespace enumkit {

BoolRelation::BoolRelation(int arity, std::set<std::uint32_t> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ < 1 || arity_ > kMaxRelationArity)
    throw InvalidInstance("relation arity must be in 1.." + std::to_string(kMaxRelationArity));
  if (tuples_.empty()) throw InvalidInstance("relation must have at least one tuple");
  for (auto t : tuples_)
    if (t >> arity_) throw InvalidInstance("tuple exceeds relation arity");
}

BoolRelation BoolRelation::from_strings(const std::vector<std::string>& tuples) {
  if (tuples.empty()) throw InvalidInstance("relation must have at least one tuple");
  const int arity = static_cast<int>(tuples.front().size());
  std::set<std::uint32_t> set;
  for (const auto& s : tuples) {
    if (static_cast<int>(s.size()) != arity) throw InvalidInstance("tuple '" + s + "' has wrong length");
    std::uint32_t t = 0;
    for (char c : s) {
      if (c != '0' && c != '1') throw InvalidInstance("tuple '" + s + "' is not a bit string");
      t = (t << 1) | static_cast<std::uint32_t>(c == '1');
    }
    set.insert(t);
  }
  return BoolRelation(arity, std::move(set));
}

std::string BoolRelation::tuple_string(std::uint32_t tuple) const {
  std::string s;
  for (int i = 0; i < arity_; ++i) s.push_back(coordinate(tuple, i) ? '1' : '0');
  return s;
}

const BoolRelation& GammaFormula::relation(const std::string& name) const {
  auto it = language.find(name);
  if (it == language.end()) throw InvalidInstance("undefined relation '" + name + "'");
  return it->second;
}

bool GammaFormula::evaluate(const Assignment& a) const {
  for (const auto& c : constraints) {
    const auto& r = relation(c.relation);
    std::uint32_t t = 0;
    for (int v : c.vars) t = (t << 1) | static_cast<std::uint32_t>(a.value_of(v));
    if (!r.contains(t)) return false;
  }
  return true;
}

void GammaFormula::validate() const {
  for (const auto& c : constraints) {
    const auto& r = relation(c.relation);
    if (static_cast<int>(c.vars.size()) != r.arity())
      throw InvalidInstance("constraint " + c.relation + " has " + std::to_string(c.vars.size()) +
                            " arguments, relation arity is " + std::to_string(r.arity()));
    for (int v : c.vars)
      if (v < 1 || v > num_vars) throw InvalidInstance("constraint variable " + std::to_string(v) + " out of range");
  }
}

}  // namespace enumkit
