#pragma once

// Brute-force reference implementations, written straight from the
// combinatorial definitions and independent of the scheme/game/axiom
// machinery they are used to check.

#include <random>
#include <set>
#include <vector>

#include "sepsub/ast.hpp"
#include "sepsub/structure.hpp"

namespace oracles {

// ---- graphs -------------------------------------------------------------

// Undirected edge list of a {E/2} structure (pairs a<b).
std::vector<std::pair<int, int>> edge_list(const sepsub::FiniteStructure& g);

bool colourable(const sepsub::FiniteStructure& g, int colours);
bool harmoniously_colourable(const sepsub::FiniteStructure& g, int colours);
// Partition of the vertices into at most `count` cliques.
bool clique_coverable(const sepsub::FiniteStructure& g, int count);

// Every labelled simple graph on exactly n vertices.
std::vector<sepsub::FiniteStructure> labelled_graphs(int n);
// One representative per isomorphism class, n = 1..max_vertices.
std::vector<sepsub::FiniteStructure> graph_iso_classes(int max_vertices);

// ---- disjoint union partial algebras ------------------------------------

// d is the ternary relation of a functional partial operation.
bool dupa_basic(const sepsub::FiniteStructure& a, const std::set<int>& gamma);
bool dupa_representable(const sepsub::FiniteStructure& a);

// ---- posets ---------------------------------------------------------------

// Filter check over a {leq/2} structure: upward closed, closed under
// existing meets of size < alpha, prime for existing joins of size < beta
// (alpha/beta -1 = unbounded).
bool poset_filter(const sepsub::FiniteStructure& p, const std::set<int>& gamma,
                  int alpha, int beta);
bool poset_representable(const sepsub::FiniteStructure& p, int alpha, int beta);

// ---- random formulas ------------------------------------------------------

struct FormulaGenOptions {
  int max_depth = 4;
  bool quantifiers = true;
  int monadic_order = 0;  // 0: pure
  std::vector<std::string> variables = {"x", "y", "z"};
  bool constants = false;
};

// Random formulas over signature {E/2} (plus constant c when enabled).
sepsub::Signature fuzz_signature(bool with_constant);
sepsub::Formula random_formula(std::mt19937& rng, const FormulaGenOptions& opts);

}  // namespace oracles
