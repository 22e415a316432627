#include "enumkit/core/database.hpp"

#include <algorithm>
#include <cctype>

#include "enumkit/core/errors.hpp"

namespace enumkit {

bool is_variable_token(const std::string& token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token.front()));
}

bool Atom::ground() const {
  return std::none_of(args.begin(), args.end(), is_variable_token);
}

std::string Atom::to_string() const {
  std::string s = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i];
  }
  return s + ")";
}

std::string Egd::to_string() const {
  std::string s = "egd: ";
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) s += ", ";
    s += body[i].to_string();
  }
  return s + " -> " + lhs + " = " + rhs + ".";
}

void Egd::validate() const {
  if (body.empty()) throw InvalidInstance("EGD with empty body");
  for (const auto* var : {&lhs, &rhs}) {
    if (!is_variable_token(*var)) throw InvalidInstance("EGD equation side '" + *var + "' is not a variable");
    bool found = false;
    for (const auto& a : body)
      if (std::find(a.args.begin(), a.args.end(), *var) != a.args.end()) found = true;
    if (!found) throw InvalidInstance("EGD equation variable '" + *var + "' does not occur in the body");
  }
}

bool DatabaseInstance::add_atom(Atom atom) {
  if (!atom.ground()) throw InvalidInstance("database atom " + atom.to_string() + " is not ground");
  if (std::find(atoms_.begin(), atoms_.end(), atom) != atoms_.end()) return false;
  atoms_.push_back(std::move(atom));
  return true;
}

std::vector<std::string> DatabaseInstance::effective_domain() const {
  if (!domain_.empty()) return domain_;
  std::vector<std::string> out;
  for (const auto& a : atoms_)
    for (const auto& c : a.args)
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

}  // namespace enumkit
