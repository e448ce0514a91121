#include "sepsub/pseudo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"
#include "sepsub/subst.hpp"

namespace sepsub {

namespace {

// C_k(t) -> R_k(xs..., t). Quantifier-free inputs only, which eta and psi
// are by construction.
Formula relationalize(const Formula& f, const std::vector<std::string>& xs,
                      const std::vector<std::string>& fresh_names) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Mon: {
      std::vector<Term> args;
      for (const auto& x : xs) args.push_back(Term::var(x));
      args.push_back(f.terms()[0]);
      return Formula::rel(fresh_names[f.mon_index() - 1], std::move(args));
    }
    case K::Not:
      return Formula::negation(relationalize(f.child(0), xs, fresh_names));
    case K::And:
    case K::Or: {
      std::vector<Formula> cs;
      for (const auto& c : f.children())
        cs.push_back(relationalize(c, xs, fresh_names));
      return f.kind() == K::And ? Formula::conj(std::move(cs))
                                : Formula::disj(std::move(cs));
    }
    case K::Implies:
      return Formula::implies(relationalize(f.child(0), xs, fresh_names),
                              relationalize(f.child(1), xs, fresh_names));
    default:
      return f;
  }
}

std::string fresh_symbol(const Signature& sig, std::set<std::string>& taken,
                         int rule_index, int k) {
  std::string base = "R" + std::to_string(rule_index) + "_" + std::to_string(k);
  std::string name = base;
  while (sig.has_symbol(name) || taken.count(name)) name += "_";
  taken.insert(name);
  return name;
}

// Conjunct variables clashing with the rule's round-0 variables would be
// captured by the inner quantifier; rename them away.
ClosureConjunct disjoint_conjunct(const ClosureConjunct& c,
                                  const std::vector<std::string>& xs) {
  std::map<std::string, std::string> ren;
  std::set<std::string> avoid(xs.begin(), xs.end());
  for (const auto& v : c.vars) avoid.insert(v);
  std::vector<std::string> vars = c.vars;
  for (auto& v : vars) {
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) continue;
    std::string fresh = v;
    while (avoid.count(fresh)) fresh += "_";
    avoid.insert(fresh);
    ren[v] = fresh;
    v = fresh;
  }
  if (ren.empty()) return c;
  return {vars, rename_free_variables(c.gamma, ren),
          rename_free_variables(c.psi, ren)};
}

}  // namespace

ExtendedTheory to_pseudoelementary(const SeparationScheme& scheme) {
  ExtendedTheory theory;
  theory.signature = scheme.signature;
  std::set<std::string> taken;

  for (std::size_t idx = 0; idx < scheme.rules.size(); ++idx) {
    const auto& rule = scheme.rules[idx];
    if (rule.order() == 0) {
      theory.sentences.push_back(rule.sentence());
      continue;
    }
    if (rule.tau().is_generated())
      throw ValidationError(
          "rule " + std::to_string(idx) +
          " has a generated closure rule; truncate the scheme first");

    const auto& xs = rule.vars();
    int fresh_arity = static_cast<int>(xs.size()) + 1;
    std::vector<std::string> names;
    for (int k = 1; k <= rule.order(); ++k) {
      names.push_back(fresh_symbol(scheme.signature, taken,
                                   static_cast<int>(idx), k));
      theory.signature.relations.emplace_back(names.back(), fresh_arity);
      theory.fresh_relations.push_back(names.back());
    }

    Formula eta_hat = relationalize(rule.eta(), xs, names);
    Formula main = Formula::implies(rule.mu(), std::move(eta_hat));
    theory.sentences.push_back(
        xs.empty() ? main : Formula::forall(xs, std::move(main)));

    if (!rule.tau().is_top()) {
      for (const auto& raw : rule.tau().conjuncts()) {
        ClosureConjunct c = disjoint_conjunct(raw, xs);
        Formula psi_hat = relationalize(c.psi, xs, names);
        Formula inner = Formula::implies(c.gamma, std::move(psi_hat));
        if (!c.vars.empty()) inner = Formula::forall(c.vars, std::move(inner));
        Formula sentence = Formula::implies(rule.mu(), std::move(inner));
        theory.sentences.push_back(
            xs.empty() ? sentence : Formula::forall(xs, std::move(sentence)));
      }
    }
  }
  return theory;
}

namespace {

struct RelationSlots {
  std::string name;
  int arity;
  std::vector<std::vector<int>> tuples;  // lexicographic
};

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

void collect_relations(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Rel) out.insert(f.rel_name());
  for (const auto& c : f.children()) collect_relations(c, out);
}

}  // namespace

bool check_pseudoelementary(const FiniteStructure& a, const ExtendedTheory& t,
                            const PseudoOptions& opts) {
  const std::set<std::string> fresh(t.fresh_relations.begin(),
                                    t.fresh_relations.end());

  // Group sentences by the fresh relations they mention; independent
  // groups are searched independently.
  struct Group {
    std::vector<std::string> relations;
    std::vector<const Formula*> sentences;
  };
  std::map<std::string, std::size_t> owner;
  std::vector<Group> groups;
  std::vector<const Formula*> ground;  // no fresh symbols at all

  for (const auto& s : t.sentences) {
    std::set<std::string> used;
    collect_relations(s, used);
    std::vector<std::string> mine;
    for (const auto& r : used)
      if (fresh.count(r)) mine.push_back(r);
    if (mine.empty()) {
      ground.push_back(&s);
      continue;
    }
    std::size_t slot = groups.size();
    for (const auto& r : mine)
      if (auto it = owner.find(r); it != owner.end()) slot = it->second;
    if (slot == groups.size()) groups.push_back({});
    for (const auto& r : mine) {
      if (auto it = owner.find(r); it != owner.end() && it->second != slot) {
        // merge the older group into this one
        auto& old = groups[it->second];
        auto& cur = groups[slot];
        cur.relations.insert(cur.relations.end(), old.relations.begin(),
                             old.relations.end());
        cur.sentences.insert(cur.sentences.end(), old.sentences.begin(),
                             old.sentences.end());
        for (const auto& moved : old.relations) owner[moved] = slot;
        old = {};
      }
      owner[r] = slot;
      if (std::find(groups[slot].relations.begin(),
                    groups[slot].relations.end(),
                    r) == groups[slot].relations.end())
        groups[slot].relations.push_back(r);
    }
    groups[slot].sentences.push_back(&s);
  }

  FiniteStructure expanded(t.signature, a.size());
  for (const auto& [name, arity] : a.signature().relations) {
    (void)arity;
    for (const auto& tuple : a.tuples(name)) expanded.add_tuple(name, tuple);
  }
  for (const auto& c : a.signature().constants)
    expanded.set_constant(c, a.constant_value(c));
  for (const auto& [name, arity] : a.signature().functions) {
    std::vector<int> args(arity, 0);
    do {
      expanded.set_function_entry(name, args, a.apply(name, args));
    } while (next_tuple(args, a.size()));
  }

  for (const auto& s : ground)
    if (!eval_formula(expanded, Assignment{}, *s)) return false;

  for (const auto& group : groups) {
    if (group.sentences.empty()) continue;

    std::vector<RelationSlots> slots;
    long long total_bits = 0;
    for (const auto& name : group.relations) {
      int arity = *t.signature.relation_arity(name);
      RelationSlots rs{name, arity, {}};
      std::vector<int> tuple(arity, 0);
      do {
        rs.tuples.push_back(tuple);
      } while (next_tuple(tuple, a.size()));
      total_bits += static_cast<long long>(rs.tuples.size());
      slots.push_back(std::move(rs));
    }
    if (total_bits > opts.interp_bits_cap)
      throw CapExceeded("interpretation search needs " +
                        std::to_string(total_bits) + " bits, cap is " +
                        std::to_string(opts.interp_bits_cap));

    bool found = false;
    for (std::uint64_t bits = 0;
         bits < (std::uint64_t{1} << total_bits) && !found; ++bits) {
      FiniteStructure candidate = expanded;
      int offset = 0;
      for (const auto& rs : slots) {
        for (std::size_t i = 0; i < rs.tuples.size(); ++i)
          if (bits >> (offset + i) & 1) candidate.add_tuple(rs.name, rs.tuples[i]);
        offset += static_cast<int>(rs.tuples.size());
      }
      found = true;
      for (const auto* s : group.sentences)
        if (!eval_formula(candidate, Assignment{}, *s)) {
          found = false;
          break;
        }
    }
    if (!found) return false;
  }
  return true;
}

std::string print_extended_theory(const ExtendedTheory& t) {
  std::string out = "(extended-theory\n  (signature";
  for (const auto& [name, arity] : t.signature.relations)
    out += " (rel " + name + " " + std::to_string(arity) + ")";
  for (const auto& name : t.signature.constants) out += " (const " + name + ")";
  for (const auto& [name, arity] : t.signature.functions)
    out += " (fn " + name + " " + std::to_string(arity) + ")";
  out += ")\n  (fresh";
  for (const auto& name : t.fresh_relations) out += " " + name;
  out += ")\n  (axioms";
  for (const auto& s : t.sentences) out += "\n    " + to_sexpr(s);
  out += "))\n";
  return out;
}

}  // namespace sepsub

