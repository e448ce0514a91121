#include <doctest.h>

#include "sepsub/builtin_schemes.hpp"
#include "sepsub/direct.hpp"
#include "sepsub/errors.hpp"
#include "support/oracles.hpp"

using namespace sepsub;

namespace {

bool in_scheme(const FiniteStructure& a, const SeparationScheme& scheme,
               int max_index) {
  return check_membership_direct(a, scheme, max_index) == Verdict::In;
}

int full_index(const SeparationScheme& scheme) {
  int hi = 0;
  for (const auto& rule : scheme.rules)
    if (rule.order() > 0)
      hi = std::max(hi, *rule.tau().explicit_count() - 1);
  return hi;
}

}  // namespace

TEST_CASE("colouring scheme shape") {
  auto scheme = colouring_scheme(2);
  REQUIRE(scheme.rules.size() == 1);
  const auto& rule = scheme.rules[0];
  CHECK(rule.order() == 2);
  CHECK(rule.vars().size() == 1);
  CHECK(rule.mu().kind() == Formula::Kind::Verum);
  CHECK(rule.eta().kind() == Formula::Kind::Verum);
  CHECK(rule.tau().conjuncts().size() == 3);
  CHECK_THROWS_AS(colouring_scheme(0), ValidationError);
}

TEST_CASE("colouring membership matches the brute-force oracle") {
  for (const auto& g : oracles::graph_iso_classes(4))
    for (int n = 1; n <= 3; ++n) {
      auto scheme = colouring_scheme(n);
      CHECK(in_scheme(g, scheme, full_index(scheme)) ==
            oracles::colourable(g, n));
    }
}

TEST_CASE("colouring spot cases") {
  CHECK(in_scheme(complete_graph(3), colouring_scheme(3), 2));
  CHECK_FALSE(in_scheme(complete_graph(3), colouring_scheme(2), 2));
  CHECK(in_scheme(edgeless_graph(3), colouring_scheme(1), 2));
}

TEST_CASE("colouring membership is isomorphism-invariant") {
  // the same 5-cycle with two different labellings
  auto relabelled = make_graph(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  auto scheme = colouring_scheme(2);
  DirectOptions opts;
  CHECK(eval_rule_direct(cycle_graph(5), scheme.rules[0], 2, opts) ==
        eval_rule_direct(relabelled, scheme.rules[0], 2, opts));
  CHECK(in_scheme(cycle_graph(5), colouring_scheme(3), 2) ==
        in_scheme(relabelled, colouring_scheme(3), 2));
}

TEST_CASE("harmonious membership matches the brute-force oracle") {
  for (const auto& g : oracles::graph_iso_classes(4))
    for (int n = 1; n <= 3; ++n) {
      auto scheme = harmonious_scheme(n);
      CHECK(in_scheme(g, scheme, full_index(scheme)) ==
            oracles::harmoniously_colourable(g, n));
    }
}

TEST_CASE("harmonious spot cases") {
  CHECK(in_scheme(path_graph(2), harmonious_scheme(2), 3));
  // two edges exceed the single available colour pair
  CHECK_FALSE(in_scheme(path_graph(3), harmonious_scheme(2), 3));
  // K3 rainbow-coloured uses each pair exactly once
  CHECK(oracles::harmoniously_colourable(complete_graph(3), 3));
  CHECK(in_scheme(complete_graph(3), harmonious_scheme(3), 3));
}

TEST_CASE("harmonious edge bound") {
  for (const auto& g : oracles::graph_iso_classes(4))
    for (int n = 1; n <= 3; ++n) {
      int edges = static_cast<int>(oracles::edge_list(g).size());
      if (edges > n * (n - 1) / 2) {
        auto scheme = harmonious_scheme(n);
        CHECK_FALSE(in_scheme(g, scheme, full_index(scheme)));
      }
    }
}

TEST_CASE("clique cover matches the brute-force oracle") {
  for (const auto& g : oracles::graph_iso_classes(4))
    for (int n = 1; n <= 3; ++n) {
      auto scheme = clique_cover_scheme(n);
      CHECK(in_scheme(g, scheme, full_index(scheme)) ==
            oracles::clique_coverable(g, n));
    }
}

TEST_CASE("clique cover spot cases") {
  for (int m = 1; m <= 4; ++m)
    CHECK(in_scheme(complete_graph(m), clique_cover_scheme(1), 2));
  CHECK_FALSE(in_scheme(edgeless_graph(2), clique_cover_scheme(1), 2));
  CHECK(in_scheme(edgeless_graph(2), clique_cover_scheme(2), 2));
}

TEST_CASE("complement graph") {
  auto k3 = complete_graph(3);
  auto complement = complement_graph(k3);
  CHECK(oracles::edge_list(complement).empty());
  CHECK(complement_graph(complement) == k3);

  Signature wrong;
  wrong.relations = {{"R", 2}};
  CHECK_THROWS_AS(complement_graph(FiniteStructure(wrong, 2)),
                  ValidationError);
}

TEST_CASE("clique cover is colouring of the complement") {
  for (const auto& g : oracles::graph_iso_classes(4))
    for (int n = 1; n <= 3; ++n) {
      auto cover = clique_cover_scheme(n);
      auto colour = colouring_scheme(n);
      CHECK(in_scheme(g, cover, full_index(cover)) ==
            in_scheme(complement_graph(g), colour, full_index(colour)));
    }
}

TEST_CASE("dupa scheme spot cases") {
  auto scheme = dupa_scheme();
  REQUIRE(scheme.rules.size() == 2);
  CHECK(scheme.rules[0].order() == 1);
  CHECK(scheme.rules[1].order() == 1);

  FiniteStructure one(scheme.signature, 1);
  CHECK(in_scheme(one, scheme, 2) == oracles::dupa_representable(one));
  CHECK(in_scheme(one, scheme, 2));
}

TEST_CASE("dupa membership matches the oracle on all small partial algebras") {
  auto scheme = dupa_scheme();
  // every functional d on one or two elements
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) pairs.emplace_back(x, y);
    std::vector<int> value(pairs.size(), -1);  // -1: undefined
    while (true) {
      FiniteStructure a(scheme.signature, n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (value[i] >= 0)
          a.add_tuple("d", {pairs[i].first, pairs[i].second, value[i]});
      CHECK(in_scheme(a, scheme, 2) == oracles::dupa_representable(a));
      int at = static_cast<int>(pairs.size()) - 1;
      while (at >= 0 && ++value[at] == n) value[at--] = -1;
      if (at < 0) break;
    }
  }
}

TEST_CASE("poset scheme spot cases") {
  auto chain = [](int n) {
    Signature sig;
    sig.relations = {{"leq", 2}};
    FiniteStructure p(sig, n);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) p.add_tuple("leq", {a, b});
    return p;
  };

  for (auto [alpha, beta] : {std::pair{2, 2}, {3, 3}, {2, 3}}) {
    auto scheme = poset_scheme(alpha, beta);
    CHECK(in_scheme(chain(2), scheme, full_index(scheme)));
  }

  // bottom, two incomparable middles, top
  Signature sig;
  sig.relations = {{"leq", 2}};
  FiniteStructure diamond(sig, 4);
  for (int e = 0; e < 4; ++e) diamond.add_tuple("leq", {e, e});
  diamond.add_tuple("leq", {0, 1});
  diamond.add_tuple("leq", {0, 2});
  diamond.add_tuple("leq", {0, 3});
  diamond.add_tuple("leq", {1, 3});
  diamond.add_tuple("leq", {2, 3});
  auto scheme33 = poset_scheme(3, 3);
  CHECK(oracles::poset_representable(diamond, 3, 3));
  CHECK(in_scheme(diamond, scheme33, full_index(scheme33)));

  FiniteStructure antichain(sig, 2);
  antichain.add_tuple("leq", {0, 0});
  antichain.add_tuple("leq", {1, 1});
  CHECK(in_scheme(antichain, scheme33, full_index(scheme33)));

  // a non-poset fails the superclass theory
  FiniteStructure loopy(sig, 2);
  loopy.add_tuple("leq", {0, 1});
  CHECK(check_membership_direct(loopy, scheme33, 0) ==
        Verdict::SuperclassViolation);

  CHECK_THROWS_AS(poset_scheme(1, 3), ValidationError);
}

TEST_CASE("poset membership matches the oracle on all 3-element posets") {
  Signature sig;
  sig.relations = {{"leq", 2}};
  for (auto [alpha, beta] : {std::pair{2, 2}, {3, 3}}) {
    auto scheme = poset_scheme(alpha, beta);
    int idx = full_index(scheme);
    int checked = 0;
    for (std::uint64_t bits = 0; bits < (1u << 9); ++bits) {
      FiniteStructure p(sig, 3);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (bits >> (a * 3 + b) & 1) p.add_tuple("leq", {a, b});
      if (check_membership_direct(p, scheme, idx) ==
          Verdict::SuperclassViolation)
        continue;
      ++checked;
      CHECK(in_scheme(p, scheme, idx) ==
            oracles::poset_representable(p, alpha, beta));
    }
    CHECK(checked == 19);  // labelled posets on three elements
  }
}

TEST_CASE("omega poset scheme truncates to the finite ones") {
  auto omega = poset_scheme(kOmega, kOmega);
  auto finite = poset_scheme(4, 4);
  // indices 0..6 of the omega stream are exactly the (4,4) conjuncts
  auto from_omega = omega.rules[0].tau().truncate(6);
  auto explicit_list = finite.rules[0].tau().conjuncts();
  REQUIRE(from_omega.size() == explicit_list.size());
  for (std::size_t i = 0; i < from_omega.size(); ++i) {
    CHECK(from_omega[i].vars == explicit_list[i].vars);
    CHECK(from_omega[i].gamma == explicit_list[i].gamma);
    CHECK(from_omega[i].psi == explicit_list[i].psi);
  }
}

TEST_CASE("mixed poset bounds generate a consecutive stream") {
  auto scheme = poset_scheme(2, kOmega);
  const auto& tau = scheme.rules[0].tau();
  REQUIRE(tau.is_generated());
  auto conjuncts = tau.truncate(4);
  // upward closure, join of one, meet of one, then joins only (meets stop
  // below the bound of 2)
  CHECK(conjuncts[0].vars == std::vector<std::string>{"y", "z"});
  CHECK(conjuncts[1].vars == std::vector<std::string>{"y1", "z"});
  CHECK(conjuncts[2].vars == std::vector<std::string>{"y1", "z"});
  CHECK(conjuncts[3].vars == std::vector<std::string>{"y1", "y2", "z"});
  CHECK(conjuncts[4].vars == std::vector<std::string>{"y1", "y2", "y3", "z"});
}
