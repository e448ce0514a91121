#pragma once

#include "sepsub/separation.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

enum class Verdict { In, Out, SuperclassViolation };

const char* to_string(Verdict v);

struct DirectOptions {
  /// Subset enumeration is 2^(K*n); refuse above this universe size.
  int size_cap = 6;
};

/// Decides a single rule by brute force. Order 0: evaluate the sentence.
/// Positive order K: for every round-0 witness satisfying mu, enumerate
/// all K-tuples of subsets of the universe and look for one satisfying
/// eta and every conjunct of tau truncated at max_index.
bool eval_rule_direct(const FiniteStructure& a, const SeparationRule& rule,
                      int max_index, const DirectOptions& opts = {});

/// Membership of `a` in the subclass cut out by `scheme`, relative to its
/// superclass theory.
Verdict check_membership_direct(const FiniteStructure& a,
                                const SeparationScheme& scheme, int max_index,
                                const DirectOptions& opts = {});

}  // namespace sepsub
