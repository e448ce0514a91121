#include <doctest.h>

#include "sepsub/builtin_schemes.hpp"
#include "sepsub/direct.hpp"
#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"
#include "sepsub/parser.hpp"
#include "sepsub/scheme_io.hpp"
#include "support/oracles.hpp"

using namespace sepsub;

TEST_CASE("truncate: top, explicit, generated") {
  CHECK(ClosureRule::top().truncate(5).empty());

  auto scheme = colouring_scheme(2);
  const auto& tau = scheme.rules[0].tau();
  CHECK(tau.truncate(1).size() == 2);
  CHECK(tau.truncate(0).size() == 1);
  CHECK(tau.truncate(10).size() == 3);

  auto gen = builtin_generator("poset-omega-filter");
  REQUIRE(gen.has_value());
  auto rule = ClosureRule::generated("poset-omega-filter", *gen);
  auto conjuncts = rule.truncate(3);
  REQUIRE(conjuncts.size() == 4);
  // index 0 is upward closure over two variables
  CHECK(conjuncts[0].vars == std::vector<std::string>{"y", "z"});
  // index 1 is primality for single joins, index 2 meets, index 3 joins of two
  CHECK(conjuncts[1].vars == std::vector<std::string>{"y1", "z"});
  CHECK(conjuncts[2].vars == std::vector<std::string>{"y1", "z"});
  CHECK(conjuncts[3].vars == std::vector<std::string>{"y1", "y2", "z"});
  CHECK(conjuncts[3].psi.kind() == Formula::Kind::Implies);
}

TEST_CASE("explicit closure rules must be non-empty") {
  CHECK_THROWS_AS(ClosureRule::explicit_list({}), ValidationError);
}

TEST_CASE("eval_rule_direct: two-colouring on small graphs") {
  auto rule = colouring_scheme(2).rules[0];
  CHECK(eval_rule_direct(cycle_graph(4), rule, 2));
  CHECK_FALSE(eval_rule_direct(complete_graph(3), rule, 2));
  CHECK(eval_rule_direct(edgeless_graph(1), rule, 2));
}

TEST_CASE("eval_rule_direct: size cap") {
  auto rule = colouring_scheme(2).rules[0];
  DirectOptions opts;
  opts.size_cap = 4;
  CHECK_THROWS_AS(eval_rule_direct(cycle_graph(5), rule, 2, opts), CapExceeded);
}

TEST_CASE("eval_rule_direct agrees with eval_formula on order-0 rules") {
  Signature sig;
  sig.relations = {{"E", 2}};
  auto sentence = parse_formula("(forall (x) (exists (y) (rel E x y)))", sig);
  auto rule = SeparationRule::order0(sentence);
  for (const auto& g : oracles::graph_iso_classes(3))
    CHECK(eval_rule_direct(g, rule, 0) ==
          eval_formula(g, Assignment{}, sentence));
}

TEST_CASE("check_membership_direct: DUPA cases") {
  auto scheme = dupa_scheme();
  Signature sig = scheme.signature;

  FiniteStructure one(sig, 1);
  CHECK(oracles::dupa_representable(one));
  CHECK(check_membership_direct(one, scheme, 2) == Verdict::In);

  FiniteStructure two(sig, 2);
  CHECK(oracles::dupa_representable(two));
  CHECK(check_membership_direct(two, scheme, 2) == Verdict::In);

  FiniteStructure bad(sig, 4);
  bad.add_tuple("d", {0, 1, 2});
  bad.add_tuple("d", {0, 1, 3});
  CHECK(check_membership_direct(bad, scheme, 2) ==
        Verdict::SuperclassViolation);

  CHECK(check_membership_direct(complete_graph(3), colouring_scheme(3), 2) ==
        Verdict::In);
}

TEST_CASE("truncation monotonicity: more conjuncts never admit more structures") {
  auto rule2 = colouring_scheme(2).rules[0];
  auto rule3 = harmonious_scheme(2).rules[0];
  for (const auto& g : oracles::graph_iso_classes(3)) {
    for (int i = 0; i + 1 <= 2; ++i)
      if (eval_rule_direct(g, rule2, i + 1)) CHECK(eval_rule_direct(g, rule2, i));
    for (int i = 0; i + 1 <= 3; ++i)
      if (eval_rule_direct(g, rule3, i + 1)) CHECK(eval_rule_direct(g, rule3, i));
  }
}

TEST_CASE("scheme files: round trip through print and parse") {
  for (const auto& scheme :
       {colouring_scheme(2), harmonious_scheme(2), clique_cover_scheme(3),
        dupa_scheme(), poset_scheme(3, 3), poset_scheme(kOmega, kOmega)}) {
    std::string once = print_scheme(scheme);
    auto back = parse_scheme(once);
    CHECK(print_scheme(back) == once);
  }
}

TEST_CASE("scheme parser rejects malformed input") {
  CHECK_THROWS_AS(parse_scheme("(not-a-scheme)"), ParseError);
  CHECK_THROWS_AS(parse_scheme("(scheme (rule (order 0) (true)))"), ParseError);
  CHECK_THROWS_AS(
      parse_scheme("(scheme (signature (rel E 2)) (rule (order 1) (vars (x)) "
                   "(mu (true)) (eta (true)) (tau (generated nonsense))))"),
      ParseError);
  // eta must be quantifier-free
  CHECK_THROWS_AS(
      parse_scheme("(scheme (signature (rel E 2)) (rule (order 1) (vars (x)) "
                   "(mu (true)) (eta (exists (y) (rel E x y))) (tau top)))"),
      ValidationError);
  // mu must not mention monadic atoms
  CHECK_THROWS_AS(
      parse_scheme("(scheme (signature (rel E 2)) (rule (order 1) (vars (x)) "
                   "(mu (mon 1 x)) (eta (true)) (tau top)))"),
      ValidationError);
}

TEST_CASE("separation rule validation") {
  // monadic index above the order
  CHECK_THROWS_AS(
      SeparationRule::positive(1, {"x"}, Formula::verum(),
                               Formula::mon(2, Term::var("x")),
                               ClosureRule::top()),
      ValidationError);
  // free variable outside the declared tuple
  CHECK_THROWS_AS(
      SeparationRule::positive(1, {"x"}, Formula::verum(),
                               Formula::mon(1, Term::var("w")),
                               ClosureRule::top()),
      ValidationError);
  // order-0 payload must be a sentence
  Signature sig;
  sig.relations = {{"E", 2}};
  CHECK_THROWS_AS(SeparationRule::order0(parse_formula("(rel E x y)", sig)),
                  ValidationError);
}

TEST_CASE("scheme truncation materialises generated rules") {
  auto scheme = poset_scheme(kOmega, kOmega);
  CHECK_FALSE(scheme.essentially_finite());
  auto finite = scheme.truncated(4);
  CHECK(finite.essentially_finite());
  CHECK(finite.rules[0].tau().conjuncts().size() == 5);
}
