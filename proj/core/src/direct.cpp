#include "sepsub/direct.hpp"

#include <cstdint>

#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"

namespace sepsub {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::In:
      return "in";
    case Verdict::Out:
      return "out";
    case Verdict::SuperclassViolation:
      return "superclass-violation";
  }
  return "?";
}

namespace {

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

// Checks one conjunct forall ys (gamma -> psi) under a fixed monadic
// interpretation.
bool conjunct_holds(const FiniteStructure& a, const ClosureConjunct& c,
                    const MonadicSets& mon) {
  const int n = a.size();
  std::vector<int> tuple(c.vars.size(), 0);
  while (true) {
    Assignment v;
    for (std::size_t m = 0; m < c.vars.size(); ++m) v.bind(c.vars[m], tuple[m]);
    if (eval_formula(a, v, c.gamma) && !eval_formula(a, v, c.psi, &mon))
      return false;
    if (tuple.empty() || !next_tuple(tuple, n)) break;
  }
  return true;
}

}  // namespace

bool eval_rule_direct(const FiniteStructure& a, const SeparationRule& rule,
                      int max_index, const DirectOptions& opts) {
  if (rule.order() == 0) return eval_formula(a, Assignment{}, rule.sentence());

  const int n = a.size();
  const int k = rule.order();
  if (n > opts.size_cap)
    throw CapExceeded("universe size " + std::to_string(n) +
                      " exceeds the direct-check cap of " +
                      std::to_string(opts.size_cap));

  auto conjuncts = rule.tau().truncate(max_index);

  // All monadic interpretations, one bit per (k, element).
  const std::uint64_t subset_count = std::uint64_t{1} << (k * n);

  std::vector<int> witness(rule.vars().size(), 0);
  while (true) {
    Assignment v;
    for (std::size_t m = 0; m < rule.vars().size(); ++m)
      v.bind(rule.vars()[m], witness[m]);
    if (eval_formula(a, v, rule.mu())) {
      bool found = false;
      for (std::uint64_t bits = 0; bits < subset_count && !found; ++bits) {
        MonadicSets mon(k);
        for (int kk = 0; kk < k; ++kk)
          for (int e = 0; e < n; ++e)
            if (bits >> (kk * n + e) & 1) mon[kk].insert(e);
        if (!eval_formula(a, v, rule.eta(), &mon)) continue;
        found = true;
        for (const auto& c : conjuncts)
          if (!conjunct_holds(a, c, mon)) {
            found = false;
            break;
          }
      }
      if (!found) return false;
    }
    if (witness.empty() || !next_tuple(witness, n)) break;
  }
  return true;
}

Verdict check_membership_direct(const FiniteStructure& a,
                                const SeparationScheme& scheme, int max_index,
                                const DirectOptions& opts) {
  for (const auto& axiom : scheme.superclass)
    if (!eval_formula(a, Assignment{}, axiom))
      return Verdict::SuperclassViolation;
  for (const auto& rule : scheme.rules)
    if (!eval_rule_direct(a, rule, max_index, opts)) return Verdict::Out;
  return Verdict::In;
}

}  // namespace sepsub
