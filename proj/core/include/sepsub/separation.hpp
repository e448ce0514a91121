#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepsub/ast.hpp"
#include "sepsub/signature.hpp"

namespace sepsub {

/// One clause of a closure rule: forall ys (gamma -> psi), with gamma a
/// pure formula and psi quantifier-free (may mention monadic atoms).
struct ClosureConjunct {
  std::vector<std::string> vars;
  Formula gamma = Formula::verum();
  Formula psi = Formula::verum();
};

using ConjunctGenerator = std::function<ClosureConjunct(int)>;

/// The closure part of a positive separation rule: the tautology, an
/// explicit non-empty conjunct list, or a generated (recursively
/// enumerable) conjunct stream addressed by index.
class ClosureRule {
 public:
  static ClosureRule top();
  static ClosureRule explicit_list(std::vector<ClosureConjunct> conjuncts);
  static ClosureRule generated(std::string name, ConjunctGenerator generator);

  bool is_top() const { return kind_ == Kind::Top; }
  bool is_explicit() const { return kind_ == Kind::Explicit; }
  bool is_generated() const { return kind_ == Kind::Generated; }

  const std::vector<ClosureConjunct>& conjuncts() const;
  const std::string& generator_name() const;

  /// Conjuncts with index <= max_index: all of an explicit list whose
  /// position is <= max_index, the first max_index+1 of a generated
  /// stream, nothing for top.
  std::vector<ClosureConjunct> truncate(int max_index) const;

  /// Number of explicit conjuncts; nullopt for generated streams.
  std::optional<int> explicit_count() const;

 private:
  enum class Kind { Top, Explicit, Generated };
  Kind kind_ = Kind::Top;
  std::vector<ClosureConjunct> conjuncts_;
  std::string name_;
  ConjunctGenerator generator_;
};

/// A separation rule: either a plain sentence (order 0) or
///   forall xs (mu -> exists C_1..C_K (eta and tau))
/// with mu pure, eta quantifier-free over the extended signature, and tau
/// a closure rule or top.
class SeparationRule {
 public:
  static SeparationRule order0(Formula sentence);
  static SeparationRule positive(int order, std::vector<std::string> vars,
                                 Formula mu, Formula eta, ClosureRule tau);

  int order() const { return order_; }
  const Formula& sentence() const { return mu_; }  // order-0 payload
  const std::vector<std::string>& vars() const { return vars_; }
  const Formula& mu() const { return mu_; }
  const Formula& eta() const { return eta_; }
  const ClosureRule& tau() const { return tau_; }

  /// Structural invariants; with a signature, symbol checks too.
  void validate() const;
  void validate(const Signature& sig) const;

 private:
  int order_ = 0;
  std::vector<std::string> vars_;
  Formula mu_ = Formula::verum();
  Formula eta_ = Formula::verum();
  ClosureRule tau_ = ClosureRule::top();
};

/// A separation scheme together with the first-order theory of the
/// ambient class it is read relative to. Membership of a structure means:
/// the superclass theory holds and every rule is satisfied.
struct SeparationScheme {
  Signature signature;
  std::vector<Formula> superclass;
  std::vector<SeparationRule> rules;

  void validate() const;
  bool essentially_finite() const;

  /// Replaces every generated closure rule by the explicit list of its
  /// first max_index+1 conjuncts. Explicit rules are left as they are.
  SeparationScheme truncated(int max_index) const;
};

}  // namespace sepsub
