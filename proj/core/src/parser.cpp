#include "sepsub/parser.hpp"

#include "sepsub/errors.hpp"

namespace sepsub {

namespace {

[[noreturn]] void fail(const Sexpr& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

int parse_int(const Sexpr& e, const std::string& what) {
  if (!e.is_atom) fail(e, "expected " + what);
  try {
    std::size_t used = 0;
    int value = std::stoi(e.atom, &used);
    if (used != e.atom.size()) fail(e, "expected " + what);
    return value;
  } catch (const std::logic_error&) {
    fail(e, "expected " + what);
  }
}

std::vector<std::string> parse_var_list(const Sexpr& e) {
  if (e.is_atom) fail(e, "expected a variable list");
  if (e.items.empty()) fail(e, "quantifier needs at least one variable");
  std::vector<std::string> vars;
  for (const auto& item : e.items) {
    if (!item.is_atom) fail(item, "expected a variable name");
    vars.push_back(item.atom);
  }
  return vars;
}

}  // namespace

Term term_from_sexpr(const Sexpr& e, const Signature& sig) {
  if (e.is_atom) {
    if (e.atom.empty()) fail(e, "empty variable name");
    return Term::var(e.atom);
  }
  if (e.items.empty() || !e.items[0].is_atom) fail(e, "malformed term");
  const std::string& head = e.items[0].atom;
  if (head == "const") {
    if (e.items.size() != 2 || !e.items[1].is_atom)
      fail(e, "expected (const NAME)");
    const std::string& name = e.items[1].atom;
    if (!sig.has_constant(name)) fail(e.items[1], "undeclared constant '" + name + "'");
    return Term::constant(name);
  }
  if (head == "fn") {
    if (e.items.size() < 3 || !e.items[1].is_atom)
      fail(e, "expected (fn NAME term+)");
    const std::string& name = e.items[1].atom;
    auto arity = sig.function_arity(name);
    if (!arity) fail(e.items[1], "undeclared function '" + name + "'");
    if (static_cast<int>(e.items.size()) - 2 != *arity)
      fail(e, "function '" + name + "' expects " + std::to_string(*arity) +
                  " arguments, got " + std::to_string(e.items.size() - 2));
    std::vector<Term> args;
    for (std::size_t i = 2; i < e.items.size(); ++i)
      args.push_back(term_from_sexpr(e.items[i], sig));
    return Term::app(name, std::move(args));
  }
  fail(e, "malformed term: unknown head '" + head + "'");
}

Formula formula_from_sexpr(const Sexpr& e, const Signature& sig) {
  if (e.is_atom) fail(e, "expected a formula, got atom '" + e.atom + "'");
  if (e.items.empty() || !e.items[0].is_atom) fail(e, "malformed formula");
  const std::string& head = e.items[0].atom;
  auto arg_count = e.items.size() - 1;

  if (head == "true") {
    if (arg_count != 0) fail(e, "(true) takes no arguments");
    return Formula::verum();
  }
  if (head == "false") {
    if (arg_count != 0) fail(e, "(false) takes no arguments");
    return Formula::falsum();
  }
  if (head == "rel") {
    if (arg_count < 1 || !e.items[1].is_atom) fail(e, "expected (rel NAME term*)");
    const std::string& name = e.items[1].atom;
    auto arity = sig.relation_arity(name);
    if (!arity) fail(e.items[1], "undeclared relation '" + name + "'");
    if (static_cast<int>(arg_count) - 1 != *arity)
      fail(e, "relation '" + name + "' expects " + std::to_string(*arity) +
                  " arguments, got " + std::to_string(arg_count - 1));
    std::vector<Term> ts;
    for (std::size_t i = 2; i < e.items.size(); ++i)
      ts.push_back(term_from_sexpr(e.items[i], sig));
    return Formula::rel(name, std::move(ts));
  }
  if (head == "=") {
    if (arg_count != 2) fail(e, "expected (= term term)");
    return Formula::eq(term_from_sexpr(e.items[1], sig),
                       term_from_sexpr(e.items[2], sig));
  }
  if (head == "mon") {
    if (arg_count != 2) fail(e, "expected (mon K term)");
    int k = parse_int(e.items[1], "a monadic index");
    if (k < 1) fail(e.items[1], "monadic index must be >= 1");
    return Formula::mon(k, term_from_sexpr(e.items[2], sig));
  }
  if (head == "not") {
    if (arg_count != 1) fail(e, "expected (not f)");
    return Formula::negation(formula_from_sexpr(e.items[1], sig));
  }
  if (head == "and" || head == "or") {
    std::vector<Formula> fs;
    for (std::size_t i = 1; i < e.items.size(); ++i)
      fs.push_back(formula_from_sexpr(e.items[i], sig));
    return head == "and" ? Formula::conj(std::move(fs))
                         : Formula::disj(std::move(fs));
  }
  if (head == "implies") {
    if (arg_count != 2) fail(e, "expected (implies f f)");
    return Formula::implies(formula_from_sexpr(e.items[1], sig),
                            formula_from_sexpr(e.items[2], sig));
  }
  if (head == "forall" || head == "exists") {
    if (arg_count != 2) fail(e, "expected (" + head + " (VAR+) f)");
    auto vars = parse_var_list(e.items[1]);
    Formula body = formula_from_sexpr(e.items[2], sig);
    return head == "forall" ? Formula::forall(std::move(vars), std::move(body))
                            : Formula::exists(std::move(vars), std::move(body));
  }
  fail(e, "unknown formula head '" + head + "'");
}

Formula parse_formula(const std::string& text, const Signature& sig) {
  return formula_from_sexpr(parse_sexpr(text), sig);
}

Term parse_term(const std::string& text, const Signature& sig) {
  return term_from_sexpr(parse_sexpr(text), sig);
}

std::vector<Formula> parse_formulas(const std::string& text,
                                    const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& e : parse_sexprs(text))
    out.push_back(formula_from_sexpr(e, sig));
  return out;
}

}  // namespace sepsub
