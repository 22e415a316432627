#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace enumkit {

/// Tokens starting with an uppercase letter are variables; everything else
/// is a constant.
bool is_variable_token(const std::string& token);

struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  bool ground() const;
  std::string to_string() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Equality-generating dependency: body -> lhs = rhs, all variables
/// universally quantified.
struct Egd {
  std::vector<Atom> body;
  std::string lhs;
  std::string rhs;

  std::string to_string() const;
  /// Throws InvalidInstance if an equated variable is missing from the body.
  void validate() const;

  friend bool operator==(const Egd&, const Egd&) = default;
};

/// Set of ground atoms numbered A1..AN by insertion order.
class DatabaseInstance {
 public:
  DatabaseInstance() = default;
  explicit DatabaseInstance(std::vector<std::string> domain) : domain_(std::move(domain)) {}

  /// Appends a ground atom; duplicates are ignored. Returns false for a duplicate.
  bool add_atom(Atom atom);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }

  /// Empty means "constants of the atoms".
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  std::vector<std::string> effective_domain() const;

  friend bool operator==(const DatabaseInstance&, const DatabaseInstance&) = default;

 private:
  std::vector<std::string> domain_;
  std::vector<Atom> atoms_;
};

}  // namespace enumkit
