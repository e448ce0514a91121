#include "sepsub/separation.hpp"

#include <algorithm>
#include <set>

#include "sepsub/errors.hpp"

namespace sepsub {

ClosureRule ClosureRule::top() { return ClosureRule{}; }

ClosureRule ClosureRule::explicit_list(
    std::vector<ClosureConjunct> conjuncts) {
  if (conjuncts.empty())
    throw ValidationError(
        "explicit closure rule needs at least one conjunct (use top "
        "instead)");
  ClosureRule r;
  r.kind_ = Kind::Explicit;
  r.conjuncts_ = std::move(conjuncts);
  return r;
}

ClosureRule ClosureRule::generated(std::string name,
                                   ConjunctGenerator generator) {
  ClosureRule r;
  r.kind_ = Kind::Generated;
  r.name_ = std::move(name);
  r.generator_ = std::move(generator);
  return r;
}

const std::vector<ClosureConjunct>& ClosureRule::conjuncts() const {
  if (!is_explicit())
    throw ValidationError("closure rule has no explicit conjunct list");
  return conjuncts_;
}

const std::string& ClosureRule::generator_name() const {
  if (!is_generated())
    throw ValidationError("closure rule is not generated");
  return name_;
}

std::vector<ClosureConjunct> ClosureRule::truncate(int max_index) const {
  if (max_index < 0) throw ValidationError("truncation index must be >= 0");
  switch (kind_) {
    case Kind::Top:
      return {};
    case Kind::Explicit: {
      auto count = std::min<std::size_t>(conjuncts_.size(),
                                         static_cast<std::size_t>(max_index) + 1);
      return {conjuncts_.begin(), conjuncts_.begin() + count};
    }
    case Kind::Generated: {
      std::vector<ClosureConjunct> out;
      out.reserve(max_index + 1);
      for (int i = 0; i <= max_index; ++i) out.push_back(generator_(i));
      return out;
    }
  }
  return {};
}

std::optional<int> ClosureRule::explicit_count() const {
  switch (kind_) {
    case Kind::Top:
      return 0;
    case Kind::Explicit:
      return static_cast<int>(conjuncts_.size());
    case Kind::Generated:
      return std::nullopt;
  }
  return std::nullopt;
}

SeparationRule SeparationRule::order0(Formula sentence) {
  SeparationRule r;
  r.order_ = 0;
  r.mu_ = std::move(sentence);
  r.validate();
  return r;
}

SeparationRule SeparationRule::positive(int order,
                                        std::vector<std::string> vars,
                                        Formula mu, Formula eta,
                                        ClosureRule tau) {
  if (order < 1) throw ValidationError("positive rule needs order >= 1");
  SeparationRule r;
  r.order_ = order;
  r.vars_ = std::move(vars);
  r.mu_ = std::move(mu);
  r.eta_ = std::move(eta);
  r.tau_ = std::move(tau);
  r.validate();
  return r;
}

namespace {

void check_free_vars(const Formula& f, const std::vector<std::string>& vars,
                     const std::string& what) {
  for (const auto& v : f.free_variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw ValidationError(what + " has free variable '" + v +
                            "' outside its declared variables");
}

void check_conjunct(const ClosureConjunct& c, int order) {
  if (!c.gamma.is_pure())
    throw ValidationError("closure conjunct gamma must not mention monadic atoms");
  if (!c.psi.is_quantifier_free())
    throw ValidationError("closure conjunct psi must be quantifier-free");
  if (c.psi.max_monadic_index() > order)
    throw ValidationError("closure conjunct psi uses a monadic index above the rule order");
  check_free_vars(c.gamma, c.vars, "closure conjunct gamma");
  check_free_vars(c.psi, c.vars, "closure conjunct psi");
  std::set<std::string> seen(c.vars.begin(), c.vars.end());
  if (seen.size() != c.vars.size())
    throw ValidationError("duplicate bound variable in closure conjunct");
}

}  // namespace

void SeparationRule::validate() const {
  if (order_ == 0) {
    if (!mu_.is_pure())
      throw ValidationError("order-0 rule must be a pure sentence");
    if (!mu_.is_sentence())
      throw ValidationError("order-0 rule must have no free variables");
    return;
  }
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size())
    throw ValidationError("duplicate round-0 variable");
  if (!mu_.is_pure())
    throw ValidationError("mu must not mention monadic atoms");
  if (!eta_.is_quantifier_free())
    throw ValidationError("eta must be quantifier-free");
  if (eta_.max_monadic_index() > order_)
    throw ValidationError("eta uses a monadic index above the rule order");
  check_free_vars(mu_, vars_, "mu");
  check_free_vars(eta_, vars_, "eta");
  if (tau_.is_explicit())
    for (const auto& c : tau_.conjuncts()) check_conjunct(c, order_);
}

void SeparationRule::validate(const Signature& sig) const {
  validate();
  validate_against_signature(mu_, sig);
  if (order_ > 0) {
    validate_against_signature(eta_, sig);
    if (tau_.is_explicit())
      for (const auto& c : tau_.conjuncts()) {
        validate_against_signature(c.gamma, sig);
        validate_against_signature(c.psi, sig);
      }
  }
}

void SeparationScheme::validate() const {
  signature.validate();
  for (const auto& s : superclass) {
    if (!s.is_pure() || !s.is_sentence())
      throw ValidationError("superclass theory must consist of pure sentences");
    validate_against_signature(s, signature);
  }
  for (const auto& r : rules) r.validate(signature);
}

bool SeparationScheme::essentially_finite() const {
  for (const auto& r : rules)
    if (r.order() > 0 && r.tau().is_generated()) return false;
  return true;
}

SeparationScheme SeparationScheme::truncated(int max_index) const {
  SeparationScheme out;
  out.signature = signature;
  out.superclass = superclass;
  for (const auto& r : rules) {
    if (r.order() == 0 || !r.tau().is_generated()) {
      out.rules.push_back(r);
      continue;
    }
    auto conjuncts = r.tau().truncate(max_index);
    ClosureRule tau = conjuncts.empty() ? ClosureRule::top()
                                        : ClosureRule::explicit_list(conjuncts);
    out.rules.push_back(SeparationRule::positive(r.order(), r.vars(), r.mu(),
                                                 r.eta(), std::move(tau)));
  }
  return out;
}

}  // namespace sepsub
