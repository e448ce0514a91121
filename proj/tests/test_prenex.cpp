#include <doctest.h>

#include <random>

#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"
#include "sepsub/parser.hpp"
#include "sepsub/prenex.hpp"
#include "support/oracles.hpp"

using namespace sepsub;

namespace {

Signature graph_sig() {
  Signature sig;
  sig.relations = {{"E", 2}};
  return sig;
}

std::vector<FiniteStructure> all_binary_structures(int max_size) {
  std::vector<FiniteStructure> out;
  auto sig = graph_sig();
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

TEST_CASE("prenex: standard rewrites") {
  auto sig = graph_sig();
  Formula f =
      parse_formula("(forall (x) (implies (rel E x x) (exists (y) (rel E x y))))", sig);
  CHECK(to_sexpr(prenex_normal_form(f)) ==
        "(forall (x) (exists (y) (implies (rel E x x) (rel E x y))))");

  Formula g = parse_formula("(not (forall (x) (rel E x x)))", sig);
  CHECK(to_sexpr(prenex_normal_form(g)) ==
        "(exists (x) (not (rel E x x)))");
}

TEST_CASE("prenex rejects monadic atoms") {
  auto sig = graph_sig();
  Formula f = parse_formula("(mon 1 x)", sig);
  CHECK_THROWS_AS(prenex_normal_form(f), ValidationError);
  CHECK_THROWS_AS(is_universal(f), ValidationError);
}

TEST_CASE("prenex preserves truth on all small structures") {
  std::mt19937 rng(424242);
  oracles::FormulaGenOptions opts;
  opts.max_depth = 5;
  auto structures = all_binary_structures(3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Formula f = oracles::random_formula(rng, opts);
    std::vector<std::string> free(f.free_variables().begin(),
                                  f.free_variables().end());
    Formula closed = free.empty() ? f : Formula::forall(free, f);
    Formula pnf = prenex_normal_form(closed);

    // the matrix below the prefix must be quantifier-free
    const Formula* cur = &pnf;
    while (cur->is_quantifier()) cur = &cur->body();
    CHECK(cur->is_quantifier_free());

    for (const auto& a : structures) {
      bool lhs = eval_formula(a, Assignment{}, closed);
      bool rhs = eval_formula(a, Assignment{}, pnf);
      if (lhs != rhs) {
        CAPTURE(to_sexpr(closed));
        CAPTURE(to_sexpr(pnf));
        REQUIRE(lhs == rhs);
      }
      ++checked;
    }
  }
  CHECK(checked == 200 * static_cast<int>(structures.size()));
}

TEST_CASE("is_universal") {
  auto sig = graph_sig();
  CHECK(is_universal(parse_formula("(forall (x) (rel E x x))", sig)));
  CHECK_FALSE(is_universal(parse_formula("(exists (x) (rel E x x))", sig)));
  // a negated existential in an antecedent surfaces as an existential
  CHECK_FALSE(is_universal(parse_formula(
      "(forall (x) (implies (not (exists (y) (rel E x y))) (false)))", sig)));
  CHECK(is_universal(parse_formula("(true)", sig)));
}
