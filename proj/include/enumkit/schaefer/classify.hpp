#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"

namespace enumkit {

struct SchaeferClass {
  bool horn = false;
  bool dualhorn = false;
  bool bijunctive = false;
  bool affine = false;
  bool zero_valid = false;
  bool one_valid = false;

  bool is_schaefer() const noexcept { return horn || dualhorn || bijunctive || affine; }
  friend bool operator==(const SchaeferClass&, const SchaeferClass&) = default;
};

/// Closure tests: AND (horn), OR (dualhorn), majority of triples
/// (bijunctive), XOR of triples (affine).
SchaeferClass classify_relation(const BoolRelation& r);

/// Flags that hold for every relation in the language (conjunction).
SchaeferClass classify_language(const std::map<std::string, BoolRelation>& language);

enum class SchaeferKind { horn, dualhorn, bijunctive, affine };

const char* to_string(SchaeferKind k);

/// First flag shared by the whole language in the order
/// horn > dualhorn > bijunctive > affine.
std::optional<SchaeferKind> select_schaefer_kind(const SchaeferClass& c);

/// x_{positions[0]} xor ... = rhs, positions 1-based.
struct LinearEquation {
  std::vector<int> positions;
  bool rhs = false;

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

/// A relation rewritten as clauses or GF(2) equations over its coordinate
/// positions 1..arity. Exactly one of the two lists is used.
struct CompiledRelation {
  SchaeferKind kind = SchaeferKind::horn;
  std::vector<Clause> clauses;
  std::vector<LinearEquation> equations;
};

/// Throws InvalidInstance when the relation lacks the requested closure
/// property, and std::logic_error if the compiled form's model set differs
/// from the relation (a classifier bug).
CompiledRelation relation_to_clausal_form(const BoolRelation& r, SchaeferKind target);

/// Model set of a compiled relation as tuple masks (same bit layout as
/// BoolRelation).
std::vector<std::uint32_t> compiled_models(const CompiledRelation& c, int arity);

}  // namespace enumkit
