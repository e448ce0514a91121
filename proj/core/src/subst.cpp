#include "sepsub/subst.hpp"

#include <set>

namespace sepsub {

namespace {

Term rename_term(const Term& t, const std::map<std::string, std::string>& ren) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = ren.find(t.name());
      return it == ren.end() ? t : Term::var(it->second);
    }
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(rename_term(a, ren));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

Formula rename_formula(const Formula& f,
                       std::map<std::string, std::string> ren) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Verum:
    case K::Falsum:
      return f;
    case K::Rel: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(rename_term(t, ren));
      return Formula::rel(f.rel_name(), std::move(ts));
    }
    case K::Eq:
      return Formula::eq(rename_term(f.terms()[0], ren),
                         rename_term(f.terms()[1], ren));
    case K::Mon:
      return Formula::mon(f.mon_index(), rename_term(f.terms()[0], ren));
    case K::Not:
      return Formula::negation(rename_formula(f.child(0), ren));
    case K::And:
    case K::Or: {
      std::vector<Formula> cs;
      for (const auto& c : f.children())
        cs.push_back(rename_formula(c, ren));
      return f.kind() == K::And ? Formula::conj(std::move(cs))
                                : Formula::disj(std::move(cs));
    }
    case K::Implies:
      return Formula::implies(rename_formula(f.child(0), ren),
                              rename_formula(f.child(1), ren));
    case K::Forall:
    case K::Exists: {
      // Bound occurrences are untouched; drop their entries. If a binder
      // collides with an incoming target name it would capture, so rename
      // the binder itself to something unused anywhere nearby.
      std::set<std::string> incoming;
      for (const auto& [from, to] : ren) {
        (void)from;
        incoming.insert(to);
      }
      std::set<std::string> avoid = incoming;
      for (const auto& [from, to] : ren) {
        (void)to;
        avoid.insert(from);
      }
      for (const auto& fv : f.body().free_variables()) avoid.insert(fv);
      std::vector<std::string> vars = f.vars();
      std::map<std::string, std::string> inner = ren;
      for (auto& var : vars) {
        inner.erase(var);
        if (incoming.count(var)) {
          std::string fresh;
          for (int n = 1;; ++n) {
            fresh = var + "~" + std::to_string(n);
            if (!avoid.count(fresh)) break;
          }
          inner[var] = fresh;
          avoid.insert(fresh);
          var = fresh;
        }
      }
      Formula body = rename_formula(f.body(), std::move(inner));
      return f.kind() == K::Forall
                 ? Formula::forall(std::move(vars), std::move(body))
                 : Formula::exists(std::move(vars), std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula rename_free_variables(const Formula& f,
                              const std::map<std::string, std::string>& ren) {
  return rename_formula(f, ren);
}

Term rename_free_variables(const Term& t,
                           const std::map<std::string, std::string>& ren) {
  return rename_term(t, ren);
}

}  // namespace sepsub
