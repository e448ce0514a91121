#include <doctest.h>

#include <random>

#include "sepsub/ast.hpp"
#include "sepsub/builtin_schemes.hpp"
#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"
#include "sepsub/parser.hpp"
#include "sepsub/structure.hpp"
#include "sepsub/subst.hpp"
#include "support/oracles.hpp"

using namespace sepsub;

namespace {

Signature graph_sig() {
  Signature sig;
  sig.relations = {{"E", 2}};
  return sig;
}

}  // namespace

TEST_CASE("parse: grammar cases") {
  auto sig = graph_sig();
  Formula atom = parse_formula("(rel E x y)", sig);
  CHECK(atom.kind() == Formula::Kind::Rel);
  CHECK(atom.rel_name() == "E");
  CHECK(atom.terms().size() == 2);
  CHECK(to_sexpr(atom) == "(rel E x y)");

  Formula loopfree = parse_formula("(forall (x) (implies (rel E x x) (false)))", sig);
  CHECK(loopfree.kind() == Formula::Kind::Forall);
  CHECK(loopfree.body().kind() == Formula::Kind::Implies);
  CHECK(loopfree.body().child(1).kind() == Formula::Kind::Falsum);

  Formula mon = parse_formula("(mon 1 x)", sig);
  CHECK(mon.kind() == Formula::Kind::Mon);
  CHECK(mon.mon_index() == 1);
  CHECK(!mon.is_pure());
}

TEST_CASE("parse: comments and whitespace") {
  auto sig = graph_sig();
  Formula f = parse_formula("; leading comment\n(and\n  (true) ; tail\n  (false))", sig);
  CHECK(f.kind() == Formula::Kind::And);
}

TEST_CASE("parse errors carry position and kind") {
  auto sig = graph_sig();
  CHECK_THROWS_AS(parse_formula("(rel E x", sig), ParseError);
  CHECK_THROWS_AS(parse_formula("(rel Q x y)", sig), ParseError);  // undeclared
  CHECK_THROWS_AS(parse_formula("(rel E x)", sig), ParseError);    // arity
  CHECK_THROWS_AS(parse_formula("(frobnicate x)", sig), ParseError);
  try {
    parse_formula("(and (true)\n  (rel Q x y))", sig);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("parse/print round-trips random formulas") {
  std::mt19937 rng(20240811);
  oracles::FormulaGenOptions opts;
  opts.max_depth = 6;
  opts.monadic_order = 2;
  opts.constants = true;
  auto sig = oracles::fuzz_signature(true);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = oracles::random_formula(rng, opts);
    Formula back = parse_formula(to_sexpr(f), sig);
    CHECK(back == f);
  }
}

TEST_CASE("eval: basic graph sentences") {
  auto sig = graph_sig();
  auto k2 = complete_graph(2);
  auto c5 = cycle_graph(5);

  Formula everyone_has_neighbour =
      parse_formula("(forall (x) (exists (y) (rel E x y)))", sig);
  CHECK(eval_formula(k2, Assignment{}, everyone_has_neighbour));

  Formula has_loop = parse_formula("(exists (x) (rel E x x))", sig);
  CHECK_FALSE(eval_formula(c5, Assignment{}, has_loop));
}

TEST_CASE("eval: monadic atoms against supplied sets") {
  auto sig = graph_sig();
  auto c5 = cycle_graph(5);
  Formula f = parse_formula("(mon 1 x)", sig);
  MonadicSets mon = {{0, 2}};
  Assignment v{{"x", 0}};
  CHECK(eval_formula(c5, v, f, &mon));
  Assignment w{{"x", 1}};
  CHECK_FALSE(eval_formula(c5, w, f, &mon));
}

TEST_CASE("eval: empty conjunction true, empty disjunction false") {
  auto c5 = cycle_graph(5);
  CHECK(Formula::conj({}).kind() == Formula::Kind::Verum);
  CHECK(Formula::disj({}).kind() == Formula::Kind::Falsum);
  CHECK(eval_formula(c5, Assignment{}, Formula::conj({})));
  CHECK_FALSE(eval_formula(c5, Assignment{}, Formula::disj({})));
}

TEST_CASE("eval errors") {
  auto sig = graph_sig();
  auto c5 = cycle_graph(5);
  Formula open = parse_formula("(rel E x y)", sig);
  CHECK_THROWS_AS(eval_formula(c5, Assignment{}, open), EvalError);

  Formula mon = parse_formula("(mon 3 x)", sig);
  MonadicSets two = {{0}, {1}};
  Assignment v{{"x", 0}};
  CHECK_THROWS_AS(eval_formula(c5, v, mon, &two), EvalError);
  CHECK_THROWS_AS(eval_formula(c5, v, mon), EvalError);
}

namespace {

// Uniformly renames every bound variable to a fresh name.
Formula rename_bound(const Formula& f, int& counter) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Forall:
    case K::Exists: {
      std::map<std::string, std::string> ren;
      std::vector<std::string> vars;
      for (const auto& v : f.vars()) {
        std::string fresh = "rb" + std::to_string(counter++);
        ren[v] = fresh;
        vars.push_back(fresh);
      }
      Formula body = rename_bound(rename_free_variables(f.body(), ren), counter);
      return f.kind() == K::Forall ? Formula::forall(vars, body)
                                   : Formula::exists(vars, body);
    }
    case K::Not:
      return Formula::negation(rename_bound(f.child(0), counter));
    case K::And:
    case K::Or: {
      std::vector<Formula> cs;
      for (const auto& c : f.children()) cs.push_back(rename_bound(c, counter));
      return f.kind() == K::And ? Formula::conj(std::move(cs))
                                : Formula::disj(std::move(cs));
    }
    case K::Implies:
      return Formula::implies(rename_bound(f.child(0), counter),
                              rename_bound(f.child(1), counter));
    default:
      return f;
  }
}

std::vector<FiniteStructure> all_binary_structures(int max_size) {
  std::vector<FiniteStructure> out;
  Signature sig;
  sig.relations = {{"E", 2}};
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size());
         ++bits) {
      FiniteStructure s(sig, n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (bits >> i & 1) s.add_tuple("E", {slots[i].first, slots[i].second});
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("eval is invariant under renaming of bound variables") {
  std::mt19937 rng(7);
  oracles::FormulaGenOptions opts;
  opts.max_depth = 4;
  auto structures = all_binary_structures(2);
  auto small3 = all_binary_structures(3);
  structures.insert(structures.end(), small3.end() - 40, small3.end());
  for (int trial = 0; trial < 60; ++trial) {
    Formula f = oracles::random_formula(rng, opts);
    std::vector<std::string> free(f.free_variables().begin(),
                                  f.free_variables().end());
    Formula closed = free.empty() ? f : Formula::forall(free, f);
    int counter = 0;
    Formula renamed = rename_bound(closed, counter);
    for (const auto& a : structures)
      CHECK(eval_formula(a, Assignment{}, closed) ==
            eval_formula(a, Assignment{}, renamed));
  }
}

TEST_CASE("structure JSON round trip") {
  Signature sig;
  sig.relations = {{"E", 2}};
  sig.constants = {"root"};
  sig.functions = {{"next", 1}};
  FiniteStructure a(sig, 3);
  a.add_tuple("E", {0, 1});
  a.add_tuple("E", {1, 2});
  a.set_constant("root", 0);
  for (int e = 0; e < 3; ++e) a.set_function_entry("next", {e}, (e + 1) % 3);
  a.validate();

  auto text = structure_to_json(a);
  auto back = structure_from_json(text, sig);
  CHECK(back == a);

  auto inferred = structure_from_json(text);
  CHECK(inferred.size() == 3);
  CHECK(inferred.holds("E", {0, 1}));
  CHECK(inferred.constant_value("root") == 0);
  CHECK(inferred.apply("next", {2}) == 0);
}

TEST_CASE("structure validation") {
  Signature sig;
  sig.relations = {{"E", 2}};
  sig.functions = {{"f", 1}};
  CHECK_THROWS_AS(FiniteStructure(sig, 0), ValidationError);

  FiniteStructure a(sig, 2);
  CHECK_THROWS_AS(a.add_tuple("E", {0, 5}), ValidationError);
  CHECK_THROWS_AS(a.add_tuple("E", {0}), ValidationError);
  CHECK_THROWS_AS(a.add_tuple("Q", {0, 0}), ValidationError);
  CHECK_THROWS_AS(a.validate(), ValidationError);  // f not total
  a.set_function_entry("f", {0}, 1);
  a.set_function_entry("f", {1}, 0);
  a.validate();
}

TEST_CASE("structure JSON rejects unknown keys") {
  CHECK_THROWS_AS(structure_from_json("{\"universe\": 2, \"extra\": 1}"),
                  ValidationError);
}

TEST_CASE("signature validation") {
  Signature sig;
  sig.relations = {{"E", 2}, {"E", 1}};
  CHECK_THROWS_AS(sig.validate(), ValidationError);
  Signature neg;
  neg.relations = {{"E", -1}};
  CHECK_THROWS_AS(neg.validate(), ValidationError);
  Signature fn0;
  fn0.functions = {{"f", 0}};
  CHECK_THROWS_AS(fn0.validate(), ValidationError);
}
