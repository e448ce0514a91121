#include "sepsub/ast.hpp"

#include <algorithm>

#include "sepsub/errors.hpp"

namespace sepsub {

Term Term::var(std::string name) {
  return Term(std::make_shared<Node>(Node{Kind::Var, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<Node>(Node{Kind::Const, std::move(name), {}}));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  return Term(std::make_shared<Node>(
      Node{Kind::App, std::move(fn), std::move(args)}));
}

void Term::collect_variables(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Var:
      out.insert(name());
      break;
    case Kind::Const:
      break;
    case Kind::App:
      for (const auto& a : args()) a.collect_variables(out);
      break;
  }
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  return args() == other.args();
}

Formula Formula::make(Node n) {
  return Formula(std::make_shared<Node>(std::move(n)));
}

Formula Formula::verum() { return make(Node{Kind::Verum}); }
Formula Formula::falsum() { return make(Node{Kind::Falsum}); }

Formula Formula::rel(std::string name, std::vector<Term> terms) {
  Node n{Kind::Rel};
  n.name = std::move(name);
  n.terms = std::move(terms);
  return make(std::move(n));
}

Formula Formula::eq(Term lhs, Term rhs) {
  Node n{Kind::Eq};
  n.terms = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::mon(int k, Term t) {
  if (k < 1) throw ValidationError("monadic index must be >= 1");
  Node n{Kind::Mon};
  n.mon_index = k;
  n.terms = {std::move(t)};
  return make(std::move(n));
}

Formula Formula::negation(Formula f) {
  Node n{Kind::Not};
  n.children = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty()) return verum();
  if (fs.size() == 1) return fs[0];
  Node n{Kind::And};
  n.children = std::move(fs);
  return make(std::move(n));
}

Formula Formula::disj(std::vector<Formula> fs) {
  if (fs.empty()) return falsum();
  if (fs.size() == 1) return fs[0];
  Node n{Kind::Or};
  n.children = std::move(fs);
  return make(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  Node n{Kind::Implies};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw ValidationError("quantifier needs at least one variable");
  Node n{Kind::Forall};
  n.vars = std::move(vars);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) throw ValidationError("quantifier needs at least one variable");
  Node n{Kind::Exists};
  n.vars = std::move(vars);
  n.children = {std::move(body)};
  return make(std::move(n));
}

void Formula::collect_free(std::set<std::string>& acc,
                           std::vector<std::string>& bound) const {
  switch (kind()) {
    case Kind::Verum:
    case Kind::Falsum:
      break;
    case Kind::Rel:
    case Kind::Eq:
    case Kind::Mon: {
      std::set<std::string> vs;
      for (const auto& t : terms()) t.collect_variables(vs);
      for (const auto& v : vs)
        if (std::find(bound.begin(), bound.end(), v) == bound.end())
          acc.insert(v);
      break;
    }
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      for (const auto& c : children()) c.collect_free(acc, bound);
      break;
    case Kind::Forall:
    case Kind::Exists: {
      for (const auto& v : vars()) bound.push_back(v);
      body().collect_free(acc, bound);
      bound.resize(bound.size() - vars().size());
      break;
    }
  }
}

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> acc;
  std::vector<std::string> bound;
  collect_free(acc, bound);
  return acc;
}

bool Formula::is_pure() const {
  if (kind() == Kind::Mon) return false;
  for (const auto& c : children())
    if (!c.is_pure()) return false;
  return true;
}

bool Formula::is_quantifier_free() const {
  if (is_quantifier()) return false;
  for (const auto& c : children())
    if (!c.is_quantifier_free()) return false;
  return true;
}

int Formula::max_monadic_index() const {
  int best = kind() == Kind::Mon ? mon_index() : 0;
  for (const auto& c : children()) best = std::max(best, c.max_monadic_index());
  return best;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Verum:
    case Kind::Falsum:
      return true;
    case Kind::Rel:
      return rel_name() == other.rel_name() && terms() == other.terms();
    case Kind::Eq:
      return terms() == other.terms();
    case Kind::Mon:
      return mon_index() == other.mon_index() && terms() == other.terms();
    case Kind::Forall:
    case Kind::Exists:
      if (vars() != other.vars()) return false;
      [[fallthrough]];
    default:
      return children() == other.children();
  }
}

std::string to_sexpr(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name();
    case Term::Kind::Const:
      return "(const " + t.name() + ")";
    case Term::Kind::App: {
      std::string out = "(fn " + t.name();
      for (const auto& a : t.args()) out += " " + to_sexpr(a);
      return out + ")";
    }
  }
  return {};
}

std::string to_sexpr(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Verum:
      return "(true)";
    case K::Falsum:
      return "(false)";
    case K::Rel: {
      std::string out = "(rel " + f.rel_name();
      for (const auto& t : f.terms()) out += " " + to_sexpr(t);
      return out + ")";
    }
    case K::Eq:
      return "(= " + to_sexpr(f.terms()[0]) + " " + to_sexpr(f.terms()[1]) +
             ")";
    case K::Mon:
      return "(mon " + std::to_string(f.mon_index()) + " " +
             to_sexpr(f.terms()[0]) + ")";
    case K::Not:
      return "(not " + to_sexpr(f.child(0)) + ")";
    case K::And:
    case K::Or: {
      std::string out = f.kind() == K::And ? "(and" : "(or";
      for (const auto& c : f.children()) out += " " + to_sexpr(c);
      return out + ")";
    }
    case K::Implies:
      return "(implies " + to_sexpr(f.child(0)) + " " + to_sexpr(f.child(1)) +
             ")";
    case K::Forall:
    case K::Exists: {
      std::string out = f.kind() == K::Forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (i) out += ' ';
        out += f.vars()[i];
      }
      return out + ") " + to_sexpr(f.body()) + ")";
    }
  }
  return {};
}

void validate_against_signature(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (!sig.has_constant(t.name()))
        throw ValidationError("undeclared constant '" + t.name() + "'");
      return;
    case Term::Kind::App: {
      auto arity = sig.function_arity(t.name());
      if (!arity)
        throw ValidationError("undeclared function '" + t.name() + "'");
      if (static_cast<int>(t.args().size()) != *arity)
        throw ValidationError("function '" + t.name() + "' expects " +
                              std::to_string(*arity) + " arguments, got " +
                              std::to_string(t.args().size()));
      for (const auto& a : t.args()) validate_against_signature(a, sig);
      return;
    }
  }
}

void validate_against_signature(const Formula& f, const Signature& sig) {
  if (f.kind() == Formula::Kind::Rel) {
    auto arity = sig.relation_arity(f.rel_name());
    if (!arity)
      throw ValidationError("undeclared relation '" + f.rel_name() + "'");
    if (static_cast<int>(f.terms().size()) != *arity)
      throw ValidationError("relation '" + f.rel_name() + "' expects " +
                            std::to_string(*arity) + " arguments, got " +
                            std::to_string(f.terms().size()));
  }
  for (const auto& t : f.terms()) validate_against_signature(t, sig);
  for (const auto& c : f.children()) validate_against_signature(c, sig);
}

namespace {
bool shadow_walk(const Formula& f, std::vector<std::string>& scope) {
  if (f.is_quantifier()) {
    for (const auto& v : f.vars()) {
      if (std::count(scope.begin(), scope.end(), v)) return true;
      scope.push_back(v);
    }
    // a list binder like (forall (x x) ...) also shadows itself
    bool bad = shadow_walk(f.body(), scope);
    scope.resize(scope.size() - f.vars().size());
    return bad;
  }
  for (const auto& c : f.children())
    if (shadow_walk(c, scope)) return true;
  return false;
}
}  // namespace

bool has_shadowed_binding(const Formula& f) {
  std::vector<std::string> scope;
  return shadow_walk(f, scope);
}

}  // namespace sepsub
