#pragma once

#include <optional>
#include <utility>

#include "sepsub/separation.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

/// N-colourability of simple undirected graphs as a separation scheme:
/// one rule of order N over signature {E/2}, with closure conjuncts
/// saying every vertex gets a colour, no vertex gets two, and adjacent
/// vertices never share one. The superclass theory pins down simple
/// undirected graphs (irreflexive, symmetric edge relation).
SeparationScheme colouring_scheme(int colours);

/// The colouring scheme plus the clause forbidding two distinct edges
/// from repeating a colour pattern.
SeparationScheme harmonious_scheme(int colours);

/// Partition into N cliques: the colouring scheme with the adjacency test
/// rewritten to complement-adjacency on distinct vertices, so the emitted
/// axioms stay in the original signature.
SeparationScheme clique_cover_scheme(int colours);

/// Representable disjoint-union partial algebras over signature {d/3}.
/// The superclass theory is the functionality sentence; two rules of
/// order 1 demand separating and joining basic sets.
SeparationScheme dupa_scheme();

/// Pass for poset_scheme bounds meaning "no finite bound".
inline constexpr int kOmega = -1;

/// Representability of posets by set systems preserving meets of size
/// < alpha and joins of size < beta (alpha, beta >= 2 or kOmega). Finite
/// bounds give an explicit conjunct list; kOmega bounds give a generated
/// conjunct stream.
SeparationScheme poset_scheme(int alpha, int beta);

/// Built-in generated-rule streams referencable from scheme files.
/// Currently: "poset-omega-filter".
std::optional<ConjunctGenerator> builtin_generator(const std::string& name);

/// Graph utilities over signature {E/2}. Edges are symmetrised.
FiniteStructure make_graph(int vertices,
                           const std::vector<std::pair<int, int>>& edges);
FiniteStructure cycle_graph(int vertices);
FiniteStructure complete_graph(int vertices);
FiniteStructure path_graph(int vertices);
FiniteStructure edgeless_graph(int vertices);

/// Complement graph: all ordered pairs of distinct vertices not in E.
/// Throws ValidationError unless the signature is exactly {E/2}.
FiniteStructure complement_graph(const FiniteStructure& a);

}  // namespace sepsub
