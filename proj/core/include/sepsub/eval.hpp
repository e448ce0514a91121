#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepsub/ast.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

/// A partial map from variable names to universe elements.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, int>> init)
      : map_(init) {}

  std::optional<int> lookup(const std::string& var) const {
    auto it = map_.find(var);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void bind(const std::string& var, int element) { map_[var] = element; }
  void unbind(const std::string& var) { map_.erase(var); }

 private:
  std::map<std::string, int> map_;
};

/// Interpretations of the monadic predicates C_1..C_K as element sets.
using MonadicSets = std::vector<std::set<int>>;

int eval_term(const FiniteStructure& a, const Assignment& v, const Term& t);

/// Tarskian truth value of `f` in `a` under `v`. Monadic atoms C_k(t) are
/// interpreted by `mon` when supplied: C_k(t) holds iff eval(t) is in
/// mon[k-1]. Throws EvalError for an unbound free variable or a monadic
/// index beyond the supplied sets.
bool eval_formula(const FiniteStructure& a, const Assignment& v,
                  const Formula& f, const MonadicSets* mon = nullptr);

/// As above with a predicate view of the monadic interpretation;
/// contains(k, e) answers "is element e in S_k". Used where materialising
/// set objects would be wasteful.
bool eval_formula(const FiniteStructure& a, const Assignment& v,
                  const Formula& f,
                  const std::function<bool(int, int)>& contains,
                  int mon_count);

}  // namespace sepsub
