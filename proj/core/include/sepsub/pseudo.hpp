#pragma once

#include <string>
#include <vector>

#include "sepsub/separation.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

/// A first-order theory over an extension of the base signature. Fresh
/// symbols are listed so checkers know what to search interpretations for.
struct ExtendedTheory {
  Signature signature;
  std::vector<Formula> sentences;
  std::vector<std::string> fresh_relations;
};

/// Eliminates the second-order quantifiers of an essentially finite
/// scheme: each positive rule of order K with N round-0 variables gains
/// fresh (N+1)-ary relations R_1..R_K; C_k(t) becomes R_k(xs, t) inside
/// eta and each psi, giving one sentence per rule plus one per conjunct.
/// Order-0 rules pass through. Generated closure rules must be truncated
/// first (see SeparationScheme::truncated).
ExtendedTheory to_pseudoelementary(const SeparationScheme& scheme);

struct PseudoOptions {
  /// Interpretations are enumerated bitwise; the search refuses when the
  /// fresh relations of one rule need more than this many bits.
  int interp_bits_cap = 24;
};

/// True iff the fresh relations can be interpreted over `a` so that every
/// sentence of the theory holds. Fresh relations from different rules
/// never share sentences, so each group is searched independently.
bool check_pseudoelementary(const FiniteStructure& a, const ExtendedTheory& t,
                            const PseudoOptions& opts = {});

std::string print_extended_theory(const ExtendedTheory& t);

}  // namespace sepsub
