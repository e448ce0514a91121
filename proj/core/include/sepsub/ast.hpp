#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sepsub/signature.hpp"

namespace sepsub {

/// First-order terms: variables, constants, and function applications.
/// Immutable, cheap to copy (shared nodes).
class Term {
 public:
  enum class Kind { Var, Const, App };

  static Term var(std::string name);
  static Term constant(std::string name);
  static Term app(std::string fn, std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  void collect_variables(std::set<std::string>& out) const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Formulas of first-order logic extended with monadic atoms C_k(t),
/// k >= 1. Conjunction and disjunction are n-ary with explicit verum /
/// falsum nodes; the empty conjunction is verum and the empty disjunction
/// is falsum. Quantifiers bind a list of variables, read as nesting.
class Formula {
 public:
  enum class Kind {
    Verum,
    Falsum,
    Rel,
    Eq,
    Mon,
    Not,
    And,
    Or,
    Implies,
    Forall,
    Exists
  };

  static Formula verum();
  static Formula falsum();
  static Formula rel(std::string name, std::vector<Term> terms);
  static Formula eq(Term lhs, Term rhs);
  static Formula mon(int k, Term t);
  static Formula negation(Formula f);
  /// Empty argument list yields verum.
  static Formula conj(std::vector<Formula> fs);
  /// Empty argument list yields falsum.
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::vector<std::string> vars, Formula body);
  static Formula exists(std::vector<std::string> vars, Formula body);

  Kind kind() const { return node_->kind; }
  const std::string& rel_name() const { return node_->name; }
  /// Rel arguments, or the two sides of an equality, or the single
  /// argument of a monadic atom.
  const std::vector<Term>& terms() const { return node_->terms; }
  int mon_index() const { return node_->mon_index; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const std::vector<std::string>& vars() const { return node_->vars; }
  const Formula& body() const { return node_->children[0]; }

  bool is_quantifier() const {
    return kind() == Kind::Forall || kind() == Kind::Exists;
  }

  std::set<std::string> free_variables() const;
  /// True iff the formula contains no monadic atom.
  bool is_pure() const;
  bool is_quantifier_free() const;
  /// Largest k over monadic atoms C_k, 0 when pure.
  int max_monadic_index() const;
  bool is_sentence() const { return free_variables().empty(); }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;           // Rel
    int mon_index = 0;          // Mon
    std::vector<Term> terms;    // Rel / Eq / Mon
    std::vector<Formula> children;
    std::vector<std::string> vars;  // Forall / Exists
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> node_;

  void collect_free(std::set<std::string>& acc,
                    std::vector<std::string>& bound) const;
};

std::string to_sexpr(const Term& t);
std::string to_sexpr(const Formula& f);

/// Checks that every relation/function/constant used by `f` is declared in
/// `sig` with the right arity. Throws ValidationError otherwise.
void validate_against_signature(const Formula& f, const Signature& sig);
void validate_against_signature(const Term& t, const Signature& sig);

/// True iff some quantifier in `f` rebinds a variable already in scope.
bool has_shadowed_binding(const Formula& f);

}  // namespace sepsub
