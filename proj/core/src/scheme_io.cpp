#include "sepsub/scheme_io.hpp"

#include "sepsub/builtin_schemes.hpp"
#include "sepsub/errors.hpp"
#include "sepsub/parser.hpp"
#include "sepsub/sexpr.hpp"

namespace sepsub {

namespace {

[[noreturn]] void fail(const Sexpr& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

bool is_form(const Sexpr& e, const std::string& head) {
  return !e.is_atom && !e.items.empty() && e.items[0].is_atom &&
         e.items[0].atom == head;
}

int parse_arity(const Sexpr& e) {
  if (!e.is_atom) fail(e, "expected an arity");
  try {
    return std::stoi(e.atom);
  } catch (const std::logic_error&) {
    fail(e, "expected an arity");
  }
}

Signature parse_signature(const Sexpr& e) {
  Signature sig;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const Sexpr& decl = e.items[i];
    if (is_form(decl, "rel")) {
      if (decl.items.size() != 3 || !decl.items[1].is_atom)
        fail(decl, "expected (rel NAME ARITY)");
      sig.relations.emplace_back(decl.items[1].atom, parse_arity(decl.items[2]));
    } else if (is_form(decl, "const")) {
      if (decl.items.size() != 2 || !decl.items[1].is_atom)
        fail(decl, "expected (const NAME)");
      sig.constants.push_back(decl.items[1].atom);
    } else if (is_form(decl, "fn")) {
      if (decl.items.size() != 3 || !decl.items[1].is_atom)
        fail(decl, "expected (fn NAME ARITY)");
      sig.functions.emplace_back(decl.items[1].atom, parse_arity(decl.items[2]));
    } else {
      fail(decl, "expected a (rel ...), (const ...) or (fn ...) declaration");
    }
  }
  sig.validate();
  return sig;
}

std::vector<std::string> parse_vars(const Sexpr& e) {
  if (!is_form(e, "vars") || e.items.size() != 2 || e.items[1].is_atom)
    fail(e, "expected (vars (NAME+))");
  std::vector<std::string> vars;
  for (const auto& item : e.items[1].items) {
    if (!item.is_atom) fail(item, "expected a variable name");
    vars.push_back(item.atom);
  }
  return vars;
}

const Sexpr& named_item(const Sexpr& rule, std::size_t from,
                        const std::string& head) {
  for (std::size_t i = from; i < rule.items.size(); ++i)
    if (is_form(rule.items[i], head)) return rule.items[i];
  fail(rule, "rule is missing its (" + head + " ...) part");
}

ClosureRule parse_tau(const Sexpr& e, const Signature& sig) {
  if (e.items.size() != 2) fail(e, "expected (tau ...)");
  const Sexpr& body = e.items[1];
  if (body.is_atom) {
    if (body.atom == "top") return ClosureRule::top();
    fail(body, "expected top, (conjuncts ...) or (generated NAME)");
  }
  if (is_form(body, "generated")) {
    if (body.items.size() != 2 || !body.items[1].is_atom)
      fail(body, "expected (generated NAME)");
    const std::string& name = body.items[1].atom;
    auto gen = builtin_generator(name);
    if (!gen) fail(body.items[1], "unknown generated rule '" + name + "'");
    return ClosureRule::generated(name, *gen);
  }
  if (is_form(body, "conjuncts")) {
    std::vector<ClosureConjunct> conjuncts;
    for (std::size_t i = 1; i < body.items.size(); ++i) {
      const Sexpr& c = body.items[i];
      if (c.is_atom || c.items.size() != 3) fail(c, "expected ((vars (y+)) (gamma f) (psi f))");
      ClosureConjunct conjunct;
      conjunct.vars = parse_vars(c.items[0]);
      if (!is_form(c.items[1], "gamma") || c.items[1].items.size() != 2)
        fail(c.items[1], "expected (gamma f)");
      if (!is_form(c.items[2], "psi") || c.items[2].items.size() != 2)
        fail(c.items[2], "expected (psi f)");
      conjunct.gamma = formula_from_sexpr(c.items[1].items[1], sig);
      conjunct.psi = formula_from_sexpr(c.items[2].items[1], sig);
      conjuncts.push_back(std::move(conjunct));
    }
    if (conjuncts.empty()) fail(body, "conjunct list must be non-empty");
    return ClosureRule::explicit_list(std::move(conjuncts));
  }
  fail(body, "expected top, (conjuncts ...) or (generated NAME)");
}

SeparationRule parse_rule(const Sexpr& e, const Signature& sig) {
  if (e.items.size() < 2 || !is_form(e.items[1], "order") ||
      e.items[1].items.size() != 2)
    fail(e, "expected (rule (order N) ...)");
  int order = parse_arity(e.items[1].items[1]);
  if (order == 0) {
    if (e.items.size() != 3) fail(e, "expected (rule (order 0) formula)");
    return SeparationRule::order0(formula_from_sexpr(e.items[2], sig));
  }
  auto vars = parse_vars(named_item(e, 2, "vars"));
  const Sexpr& mu = named_item(e, 2, "mu");
  const Sexpr& eta = named_item(e, 2, "eta");
  if (mu.items.size() != 2) fail(mu, "expected (mu f)");
  if (eta.items.size() != 2) fail(eta, "expected (eta f)");
  ClosureRule tau = parse_tau(named_item(e, 2, "tau"), sig);
  return SeparationRule::positive(order, std::move(vars),
                                  formula_from_sexpr(mu.items[1], sig),
                                  formula_from_sexpr(eta.items[1], sig),
                                  std::move(tau));
}

}  // namespace

SeparationScheme parse_scheme(const std::string& text) {
  Sexpr root = parse_sexpr(text);
  if (!is_form(root, "scheme")) fail(root, "expected (scheme ...)");

  SeparationScheme scheme;
  bool have_signature = false;
  for (std::size_t i = 1; i < root.items.size(); ++i) {
    const Sexpr& part = root.items[i];
    if (is_form(part, "signature")) {
      scheme.signature = parse_signature(part);
      have_signature = true;
    } else if (is_form(part, "superclass")) {
      if (!have_signature) fail(part, "signature must come first");
      for (std::size_t j = 1; j < part.items.size(); ++j)
        scheme.superclass.push_back(
            formula_from_sexpr(part.items[j], scheme.signature));
    } else if (is_form(part, "rule")) {
      if (!have_signature) fail(part, "signature must come first");
      scheme.rules.push_back(parse_rule(part, scheme.signature));
    } else {
      fail(part, "expected (signature ...), (superclass ...) or (rule ...)");
    }
  }
  if (!have_signature) fail(root, "scheme has no signature");
  scheme.validate();
  return scheme;
}

namespace {

std::string print_vars(const std::vector<std::string>& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ' ';
    out += vars[i];
  }
  return out + ")";
}

}  // namespace

std::string print_scheme(const SeparationScheme& scheme) {
  std::string out = "(scheme\n  (signature";
  for (const auto& [name, arity] : scheme.signature.relations)
    out += " (rel " + name + " " + std::to_string(arity) + ")";
  for (const auto& name : scheme.signature.constants)
    out += " (const " + name + ")";
  for (const auto& [name, arity] : scheme.signature.functions)
    out += " (fn " + name + " " + std::to_string(arity) + ")";
  out += ")\n  (superclass";
  for (const auto& s : scheme.superclass) out += "\n    " + to_sexpr(s);
  out += ")\n";
  for (const auto& rule : scheme.rules) {
    if (rule.order() == 0) {
      out += "  (rule (order 0) " + to_sexpr(rule.sentence()) + ")\n";
      continue;
    }
    out += "  (rule (order " + std::to_string(rule.order()) + ")\n";
    out += "    (vars " + print_vars(rule.vars()) + ")\n";
    out += "    (mu " + to_sexpr(rule.mu()) + ")\n";
    out += "    (eta " + to_sexpr(rule.eta()) + ")\n";
    if (rule.tau().is_top()) {
      out += "    (tau top))\n";
    } else if (rule.tau().is_generated()) {
      out += "    (tau (generated " + rule.tau().generator_name() + ")))\n";
    } else {
      out += "    (tau (conjuncts";
      for (const auto& c : rule.tau().conjuncts()) {
        out += "\n      ((vars " + print_vars(c.vars) + ") (gamma " +
               to_sexpr(c.gamma) + ") (psi " + to_sexpr(c.psi) + "))";
      }
      out += ")))\n";
    }
  }
  out += ")\n";
  return out;
}

}  // namespace sepsub
