#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepsub/ast.hpp"
#include "sepsub/separation.hpp"

namespace sepsub {

/// The variable bookkeeping behind generated axioms: K ordered name sets
/// tracking elements decided into each monadic predicate, and K more for
/// their complements.
struct VarSetVector {
  std::vector<std::vector<std::string>> in_sets;
  std::vector<std::vector<std::string>> out_sets;

  static VarSetVector empty(int order);
  int order() const { return static_cast<int>(in_sets.size()); }
  bool mentions(const std::string& var) const;
};

/// A total map (variable, k) -> {0,1} over an ordered variable list,
/// deciding which set each quantified element joins. Enumeration of all
/// such maps is lexicographic over (variable position, k), the first pair
/// being most significant.
class ChoiceFunction {
 public:
  ChoiceFunction(int var_count, int order, std::uint64_t index);
  bool assigns_in(int var_pos, int k) const;
  int var_count() const { return var_count_; }
  int order() const { return order_; }

  /// 2^(order * var_count); throws SizeGuardExceeded past 2^62.
  static std::uint64_t count(int var_count, int order);

 private:
  int var_count_;
  int order_;
  std::uint64_t index_;
};

/// Adds each variable of `fresh` to either the in- or the out-set of
/// every k, as directed by `f`. The variables must be fresh for the
/// vector; reuse across roles throws ValidationError.
VarSetVector delta(const VarSetVector& sets,
                   const std::vector<std::string>& fresh,
                   const ChoiceFunction& f);

/// Quantifier-free formula asserting that, under an assignment, every
/// in-set is disjoint from its out-set: the conjunction over k and over
/// pairs (z, zbar) of not (z = zbar). Empty conjunction is verum.
Formula disjointness_formula(const VarSetVector& sets);

/// Replaces each monadic atom C_k(t) by the disjunction over z in the
/// k-th set of (t = z); the empty set gives falsum. Input must be
/// quantifier-free.
Formula pad_translate(const Formula& psi,
                      const std::vector<std::vector<std::string>>& in_sets);

struct AxiomGenOptions {
  /// Estimated node count above which generation aborts.
  std::uint64_t node_cap = 1000000;
};

/// The recursive survival formula for the reduced game: at r=0 the
/// disjointness formula, otherwise one conjunct per closure clause with
/// index <= i, quantifying fresh witnesses and disjoining over all ways
/// to distribute them. rule_index only seeds deterministic fresh names.
Formula alpha(const SeparationRule& rule, const VarSetVector& sets, int r,
              int i, const AxiomGenOptions& opts = {}, int rule_index = 0);

/// As alpha but wrapping the opening round: quantifies the round-0
/// witnesses, requires mu, and disjoins over their distributions.
Formula beta(const SeparationRule& rule, const VarSetVector& sets, int r,
             int i, const AxiomGenOptions& opts = {}, int rule_index = 0);

/// beta at all-empty variable sets for positive rules (a sentence); the
/// rule's own sentence for order 0.
Formula beta_hat(const SeparationRule& rule, int r, int i,
                 const AxiomGenOptions& opts = {}, int rule_index = 0);

struct GeneratedAxiom {
  int rule_index = 0;
  bool order0 = false;
  int r = 0;
  int i = 0;
  Formula sentence = Formula::verum();
};

/// Every beta_hat for positive rules with r <= r_max and i <= i_max, plus
/// each order-0 rule once, in deterministic order. For explicit closure
/// rules the i range is clipped to the conjunct count; the tautology
/// contributes a single i column.
std::vector<GeneratedAxiom> generate_axioms(const SeparationScheme& scheme,
                                            int r_max, int i_max,
                                            const AxiomGenOptions& opts = {});

std::string axiom_tag(const GeneratedAxiom& axiom);

enum class AxiomFormat { Sexpr, Tptp };

/// Deterministic text rendering: one sentence per line under a header
/// comment naming its cell, and a footer reporting whether every sentence
/// is universal. Identical inputs give byte-identical output.
std::string render_axioms(const std::vector<GeneratedAxiom>& axioms,
                          AxiomFormat format);

/// Truth-preserving cleanup: flattens nested conjunction/disjunction,
/// eliminates verum and propagates falsum.
Formula simplify(const Formula& f);

}  // namespace sepsub
