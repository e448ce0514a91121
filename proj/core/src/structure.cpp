#include "sepsub/structure.hpp"

#include "sepsub/errors.hpp"

namespace sepsub {

FiniteStructure::FiniteStructure(Signature sig, int size)
    : sig_(std::move(sig)), size_(size) {
  sig_.validate();
  if (size < 1) throw ValidationError("universe must be non-empty");
  for (const auto& [name, arity] : sig_.relations) {
    (void)arity;
    relations_[name];
  }
}

void FiniteStructure::add_tuple(const std::string& relation,
                                std::vector<int> tuple) {
  auto arity = sig_.relation_arity(relation);
  if (!arity) throw ValidationError("undeclared relation '" + relation + "'");
  if (static_cast<int>(tuple.size()) != *arity)
    throw ValidationError("tuple arity mismatch for relation '" + relation +
                          "'");
  for (int e : tuple)
    if (e < 0 || e >= size_)
      throw ValidationError("tuple component out of range in relation '" +
                            relation + "'");
  relations_[relation].insert(std::move(tuple));
}

void FiniteStructure::set_relation(const std::string& relation,
                                   std::set<std::vector<int>> tuples) {
  relations_[relation].clear();
  for (auto& t : tuples) add_tuple(relation, t);
}

void FiniteStructure::set_constant(const std::string& name, int element) {
  if (!sig_.has_constant(name))
    throw ValidationError("undeclared constant '" + name + "'");
  if (element < 0 || element >= size_)
    throw ValidationError("constant '" + name + "' out of range");
  constants_[name] = element;
}

void FiniteStructure::set_function_entry(const std::string& name,
                                         std::vector<int> args, int value) {
  auto arity = sig_.function_arity(name);
  if (!arity) throw ValidationError("undeclared function '" + name + "'");
  if (static_cast<int>(args.size()) != *arity)
    throw ValidationError("argument arity mismatch for function '" + name +
                          "'");
  for (int e : args)
    if (e < 0 || e >= size_)
      throw ValidationError("function argument out of range");
  if (value < 0 || value >= size_)
    throw ValidationError("function value out of range");
  functions_[name][std::move(args)] = value;
}

bool FiniteStructure::holds(const std::string& relation,
                            const std::vector<int>& tuple) const {
  auto it = relations_.find(relation);
  if (it == relations_.end())
    throw ValidationError("undeclared relation '" + relation + "'");
  return it->second.count(tuple) > 0;
}

const std::set<std::vector<int>>& FiniteStructure::tuples(
    const std::string& relation) const {
  auto it = relations_.find(relation);
  if (it == relations_.end())
    throw ValidationError("undeclared relation '" + relation + "'");
  return it->second;
}

int FiniteStructure::constant_value(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end())
    throw ValidationError("constant '" + name + "' is not set");
  return it->second;
}

int FiniteStructure::apply(const std::string& function,
                           const std::vector<int>& args) const {
  auto it = functions_.find(function);
  if (it == functions_.end())
    throw ValidationError("function '" + function + "' is not set");
  auto jt = it->second.find(args);
  if (jt == it->second.end())
    throw ValidationError("function '" + function +
                          "' undefined on an argument tuple");
  return jt->second;
}

namespace {
// Enumerates all arity-length tuples over 0..n-1 in lexicographic order.
bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}
}  // namespace

void FiniteStructure::validate() const {
  for (const auto& c : sig_.constants)
    if (!constants_.count(c))
      throw ValidationError("constant '" + c + "' is not interpreted");
  for (const auto& [name, arity] : sig_.functions) {
    auto it = functions_.find(name);
    std::vector<int> args(arity, 0);
    do {
      if (it == functions_.end() || !it->second.count(args))
        throw ValidationError("function '" + name +
                              "' is not total on the universe");
    } while (next_tuple(args, size_));
  }
}

}  // namespace sepsub
