#include "sepsub/prenex.hpp"

#include <map>
#include <set>

#include "sepsub/errors.hpp"
#include "sepsub/subst.hpp"

namespace sepsub {

namespace {

struct PrefixEntry {
  bool universal;
  std::string var;
};

// Rectification: give every binder a name that is globally unique within
// the formula and distinct from all free variables.
class Rectifier {
 public:
  explicit Rectifier(const Formula& f) {
    for (const auto& v : f.free_variables()) used_.insert(v);
  }

  Formula run(const Formula& f) { return walk(f, {}); }

 private:
  std::string freshen(const std::string& base) {
    if (used_.insert(base).second) return base;
    for (int n = 1;; ++n) {
      std::string candidate = base + "~" + std::to_string(n);
      if (used_.insert(candidate).second) return candidate;
    }
  }

  Formula walk(const Formula& f, std::map<std::string, std::string> ren) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Verum:
      case K::Falsum:
      case K::Rel:
      case K::Eq:
      case K::Mon:
        return rename_free_variables(f, ren);
      case K::Not:
        return Formula::negation(walk(f.child(0), ren));
      case K::And:
      case K::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children()) cs.push_back(walk(c, ren));
        return f.kind() == K::And ? Formula::conj(std::move(cs))
                                  : Formula::disj(std::move(cs));
      }
      case K::Implies:
        return Formula::implies(walk(f.child(0), ren), walk(f.child(1), ren));
      case K::Forall:
      case K::Exists: {
        std::vector<std::string> vars;
        for (const auto& v : f.vars()) {
          std::string fresh = freshen(v);
          ren[v] = fresh;
          vars.push_back(fresh);
        }
        Formula body = walk(f.body(), std::move(ren));
        return f.kind() == K::Forall
                   ? Formula::forall(std::move(vars), std::move(body))
                   : Formula::exists(std::move(vars), std::move(body));
      }
    }
    throw Error("malformed formula");
  }

  std::set<std::string> used_;
};

struct PnfResult {
  std::vector<PrefixEntry> prefix;
  Formula matrix;
};

void flip(std::vector<PrefixEntry>& prefix) {
  for (auto& e : prefix) e.universal = !e.universal;
}

// After rectification all binder names are distinct, so prefixes from
// different subformulas can be concatenated freely.
PnfResult pull(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Verum:
    case K::Falsum:
    case K::Rel:
    case K::Eq:
    case K::Mon:
      return {{}, f};
    case K::Not: {
      auto sub = pull(f.child(0));
      flip(sub.prefix);
      return {std::move(sub.prefix), Formula::negation(sub.matrix)};
    }
    case K::And:
    case K::Or: {
      std::vector<PrefixEntry> prefix;
      std::vector<Formula> matrices;
      for (const auto& c : f.children()) {
        auto sub = pull(c);
        prefix.insert(prefix.end(), sub.prefix.begin(), sub.prefix.end());
        matrices.push_back(std::move(sub.matrix));
      }
      Formula matrix = f.kind() == K::And ? Formula::conj(std::move(matrices))
                                          : Formula::disj(std::move(matrices));
      return {std::move(prefix), std::move(matrix)};
    }
    case K::Implies: {
      auto lhs = pull(f.child(0));
      auto rhs = pull(f.child(1));
      flip(lhs.prefix);
      lhs.prefix.insert(lhs.prefix.end(), rhs.prefix.begin(),
                        rhs.prefix.end());
      return {std::move(lhs.prefix),
              Formula::implies(std::move(lhs.matrix), std::move(rhs.matrix))};
    }
    case K::Forall:
    case K::Exists: {
      auto sub = pull(f.body());
      std::vector<PrefixEntry> prefix;
      for (const auto& v : f.vars())
        prefix.push_back({f.kind() == K::Forall, v});
      prefix.insert(prefix.end(), sub.prefix.begin(), sub.prefix.end());
      return {std::move(prefix), std::move(sub.matrix)};
    }
  }
  throw Error("malformed formula");
}

}  // namespace

Formula prenex_normal_form(const Formula& f) {
  if (!f.is_pure())
    throw ValidationError(
        "prenex normal form requires a pure formula (monadic atoms must be "
        "translated away first)");
  auto [prefix, matrix] = pull(Rectifier(f).run(f));
  Formula out = std::move(matrix);
  // Rebuild innermost-first, grouping runs of the same quantifier.
  for (auto it = prefix.rbegin(); it != prefix.rend();) {
    bool universal = it->universal;
    std::vector<std::string> vars;
    while (it != prefix.rend() && it->universal == universal) {
      vars.insert(vars.begin(), it->var);
      ++it;
    }
    out = universal ? Formula::forall(std::move(vars), std::move(out))
                    : Formula::exists(std::move(vars), std::move(out));
  }
  return out;
}

bool is_universal(const Formula& f) {
  Formula pnf = prenex_normal_form(f);
  const Formula* cur = &pnf;
  while (cur->is_quantifier()) {
    if (cur->kind() == Formula::Kind::Exists) return false;
    cur = &cur->body();
  }
  return true;
}

}  // namespace sepsub
