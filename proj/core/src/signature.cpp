#include "sepsub/signature.hpp"

#include <set>

#include "sepsub/errors.hpp"

namespace sepsub {

std::optional<int> Signature::relation_arity(const std::string& name) const {
  for (const auto& [n, a] : relations)
    if (n == name) return a;
  return std::nullopt;
}

std::optional<int> Signature::function_arity(const std::string& name) const {
  for (const auto& [n, a] : functions)
    if (n == name) return a;
  return std::nullopt;
}

bool Signature::has_constant(const std::string& name) const {
  for (const auto& c : constants)
    if (c == name) return true;
  return false;
}

bool Signature::has_symbol(const std::string& name) const {
  return relation_arity(name).has_value() || has_constant(name) ||
         function_arity(name).has_value();
}

void Signature::validate() const {
  std::set<std::string> seen;
  auto check = [&seen](const std::string& n) {
    if (n.empty()) throw ValidationError("empty symbol name");
    if (!seen.insert(n).second)
      throw ValidationError("duplicate symbol name '" + n + "'");
  };
  for (const auto& [n, a] : relations) {
    check(n);
    if (a < 0) throw ValidationError("negative arity for relation '" + n + "'");
  }
  for (const auto& c : constants) check(c);
  for (const auto& [n, a] : functions) {
    check(n);
    if (a < 1)
      throw ValidationError("function '" + n + "' must have arity >= 1");
  }
}

}  // namespace sepsub
