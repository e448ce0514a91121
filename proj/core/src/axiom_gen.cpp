#include "sepsub/axiom_gen.hpp"

#include <algorithm>
#include <map>

#include "sepsub/errors.hpp"
#include "sepsub/prenex.hpp"
#include "sepsub/subst.hpp"
#include "sepsub/tptp.hpp"

namespace sepsub {

VarSetVector VarSetVector::empty(int order) {
  VarSetVector v;
  v.in_sets.resize(order);
  v.out_sets.resize(order);
  return v;
}

bool VarSetVector::mentions(const std::string& var) const {
  for (const auto& zs : in_sets)
    if (std::find(zs.begin(), zs.end(), var) != zs.end()) return true;
  for (const auto& zs : out_sets)
    if (std::find(zs.begin(), zs.end(), var) != zs.end()) return true;
  return false;
}

ChoiceFunction::ChoiceFunction(int var_count, int order, std::uint64_t index)
    : var_count_(var_count), order_(order), index_(index) {}

bool ChoiceFunction::assigns_in(int var_pos, int k) const {
  int total = var_count_ * order_;
  int rank = var_pos * order_ + (k - 1);
  return (index_ >> (total - 1 - rank) & 1) != 0;
}

std::uint64_t ChoiceFunction::count(int var_count, int order) {
  int bits = var_count * order;
  if (bits > 62)
    throw SizeGuardExceeded(0, 0, 0, std::uint64_t{1} << 62);
  return std::uint64_t{1} << bits;
}

VarSetVector delta(const VarSetVector& sets,
                   const std::vector<std::string>& fresh,
                   const ChoiceFunction& f) {
  if (f.var_count() != static_cast<int>(fresh.size()) ||
      f.order() != sets.order())
    throw ValidationError("choice function does not fit the variable sets");
  for (const auto& v : fresh)
    if (sets.mentions(v))
      throw ValidationError("freshness violation: variable '" + v +
                            "' already tracked");
  VarSetVector out = sets;
  for (int k = 1; k <= sets.order(); ++k)
    for (std::size_t p = 0; p < fresh.size(); ++p) {
      if (f.assigns_in(static_cast<int>(p), k))
        out.in_sets[k - 1].push_back(fresh[p]);
      else
        out.out_sets[k - 1].push_back(fresh[p]);
    }
  return out;
}

Formula disjointness_formula(const VarSetVector& sets) {
  std::vector<Formula> parts;
  for (int k = 0; k < sets.order(); ++k)
    for (const auto& z : sets.in_sets[k])
      for (const auto& zbar : sets.out_sets[k])
        parts.push_back(Formula::negation(
            Formula::eq(Term::var(z), Term::var(zbar))));
  return Formula::conj(std::move(parts));
}

Formula pad_translate(const Formula& psi,
                      const std::vector<std::vector<std::string>>& in_sets) {
  using K = Formula::Kind;
  switch (psi.kind()) {
    case K::Verum:
    case K::Falsum:
    case K::Rel:
    case K::Eq:
      return psi;
    case K::Mon: {
      int k = psi.mon_index();
      if (k > static_cast<int>(in_sets.size()))
        throw ValidationError("monadic index " + std::to_string(k) +
                              " beyond the supplied variable sets");
      std::vector<Formula> eqs;
      for (const auto& z : in_sets[k - 1])
        eqs.push_back(Formula::eq(psi.terms()[0], Term::var(z)));
      return Formula::disj(std::move(eqs));
    }
    case K::Not:
      return Formula::negation(pad_translate(psi.child(0), in_sets));
    case K::And:
    case K::Or: {
      std::vector<Formula> cs;
      for (const auto& c : psi.children())
        cs.push_back(pad_translate(c, in_sets));
      return psi.kind() == K::And ? Formula::conj(std::move(cs))
                                  : Formula::disj(std::move(cs));
    }
    case K::Implies:
      return Formula::implies(pad_translate(psi.child(0), in_sets),
                              pad_translate(psi.child(1), in_sets));
    case K::Forall:
    case K::Exists:
      throw ValidationError("pad translation requires a quantifier-free formula");
  }
  throw ValidationError("malformed formula");
}

namespace {

std::uint64_t count_nodes(const Term& t) {
  std::uint64_t n = 1;
  for (const auto& a : t.args()) n += count_nodes(a);
  return n;
}

std::uint64_t count_nodes(const Formula& f) {
  std::uint64_t n = 1;
  for (const auto& t : f.terms()) n += count_nodes(t);
  for (const auto& c : f.children()) n += count_nodes(c);
  return n;
}

struct GenContext {
  const SeparationRule& rule;
  int rule_index;
  int r_top;
  int i_top;
  std::uint64_t cap;
  std::uint64_t used = 0;
  std::vector<ClosureConjunct> conjuncts;

  void charge(std::uint64_t nodes) {
    used += nodes;
    if (used > cap)
      throw SizeGuardExceeded(rule_index, r_top, i_top, cap);
  }
};

std::vector<std::string> fresh_round0_vars(const GenContext& ctx) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < ctx.rule.vars().size(); ++p)
    out.push_back("x_" + std::to_string(ctx.rule_index) + "_" +
                  std::to_string(p));
  return out;
}

std::vector<std::string> fresh_conjunct_vars(const GenContext& ctx, int depth,
                                             int conjunct, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < count; ++p)
    out.push_back("y_" + std::to_string(ctx.rule_index) + "_" +
                  std::to_string(depth) + "_" + std::to_string(conjunct) +
                  "_" + std::to_string(p));
  return out;
}

Formula renamed(GenContext& ctx, const Formula& f,
                const std::vector<std::string>& from,
                const std::vector<std::string>& to) {
  std::map<std::string, std::string> ren;
  for (std::size_t p = 0; p < from.size(); ++p) ren[from[p]] = to[p];
  Formula out = rename_free_variables(f, ren);
  ctx.charge(count_nodes(out));
  return out;
}

Formula alpha_impl(GenContext& ctx, const VarSetVector& sets, int r, int i,
                   int depth) {
  if (r == 0) {
    Formula d = disjointness_formula(sets);
    ctx.charge(count_nodes(d));
    return d;
  }
  std::vector<Formula> parts;
  for (std::size_t j = 0; j < ctx.conjuncts.size() &&
                          j <= static_cast<std::size_t>(i);
       ++j) {
    const auto& c = ctx.conjuncts[j];
    auto fresh = fresh_conjunct_vars(ctx, depth, static_cast<int>(j),
                                     c.vars.size());
    Formula gamma = renamed(ctx, c.gamma, c.vars, fresh);
    Formula psi = renamed(ctx, c.psi, c.vars, fresh);

    std::vector<Formula> branches;
    std::uint64_t branch_count =
        ChoiceFunction::count(static_cast<int>(fresh.size()), sets.order());
    for (std::uint64_t fi = 0; fi < branch_count; ++fi) {
      ChoiceFunction f(static_cast<int>(fresh.size()), sets.order(), fi);
      VarSetVector updated = delta(sets, fresh, f);
      Formula padded = pad_translate(psi, updated.in_sets);
      ctx.charge(count_nodes(padded));
      Formula rest = alpha_impl(ctx, updated, r - 1, i, depth + 1);
      branches.push_back(Formula::conj({std::move(padded), std::move(rest)}));
      ctx.charge(1);
    }
    Formula body = Formula::implies(std::move(gamma),
                                    Formula::disj(std::move(branches)));
    ctx.charge(2);
    parts.push_back(fresh.empty()
                        ? std::move(body)
                        : Formula::forall(std::move(fresh), std::move(body)));
    ctx.charge(1);
  }
  ctx.charge(1);
  return Formula::conj(std::move(parts));
}

Formula beta_impl(GenContext& ctx, const VarSetVector& sets, int r, int i) {
  auto fresh = fresh_round0_vars(ctx);
  Formula mu = renamed(ctx, ctx.rule.mu(), ctx.rule.vars(), fresh);
  Formula eta = renamed(ctx, ctx.rule.eta(), ctx.rule.vars(), fresh);

  std::vector<Formula> branches;
  std::uint64_t branch_count =
      ChoiceFunction::count(static_cast<int>(fresh.size()), sets.order());
  for (std::uint64_t fi = 0; fi < branch_count; ++fi) {
    ChoiceFunction f(static_cast<int>(fresh.size()), sets.order(), fi);
    VarSetVector updated = delta(sets, fresh, f);
    Formula padded = pad_translate(eta, updated.in_sets);
    ctx.charge(count_nodes(padded));
    Formula rest = alpha_impl(ctx, updated, r, i, 1);
    branches.push_back(Formula::conj({std::move(padded), std::move(rest)}));
    ctx.charge(1);
  }
  Formula body =
      Formula::implies(std::move(mu), Formula::disj(std::move(branches)));
  ctx.charge(2);
  if (fresh.empty()) return body;
  ctx.charge(1);
  return Formula::forall(std::move(fresh), std::move(body));
}

GenContext make_context(const SeparationRule& rule, int r, int i,
                        const AxiomGenOptions& opts, int rule_index,
                        const VarSetVector& sets) {
  if (rule.order() < 1)
    throw ValidationError("alpha/beta need a rule of positive order");
  if (r < 0 || i < 0) throw ValidationError("r and i must be >= 0");
  if (sets.order() != rule.order())
    throw ValidationError("variable sets do not match the rule order");
  GenContext ctx{rule, rule_index, r, i, opts.node_cap};
  ctx.conjuncts = rule.tau().truncate(i);
  return ctx;
}

}  // namespace

Formula alpha(const SeparationRule& rule, const VarSetVector& sets, int r,
              int i, const AxiomGenOptions& opts, int rule_index) {
  GenContext ctx = make_context(rule, r, i, opts, rule_index, sets);
  return alpha_impl(ctx, sets, r, i, 1);
}

Formula beta(const SeparationRule& rule, const VarSetVector& sets, int r,
             int i, const AxiomGenOptions& opts, int rule_index) {
  GenContext ctx = make_context(rule, r, i, opts, rule_index, sets);
  return beta_impl(ctx, sets, r, i);
}

Formula beta_hat(const SeparationRule& rule, int r, int i,
                 const AxiomGenOptions& opts, int rule_index) {
  if (rule.order() == 0) return rule.sentence();
  return beta(rule, VarSetVector::empty(rule.order()), r, i, opts, rule_index);
}

std::vector<GeneratedAxiom> generate_axioms(const SeparationScheme& scheme,
                                            int r_max, int i_max,
                                            const AxiomGenOptions& opts) {
  if (r_max < 0 || i_max < 0)
    throw ValidationError("r_max and i_max must be >= 0");
  std::vector<GeneratedAxiom> out;
  for (std::size_t idx = 0; idx < scheme.rules.size(); ++idx) {
    const auto& rule = scheme.rules[idx];
    if (rule.order() == 0) {
      out.push_back({static_cast<int>(idx), true, 0, 0, rule.sentence()});
      continue;
    }
    int i_hi = i_max;
    if (auto count = rule.tau().explicit_count())
      i_hi = std::min(i_max, std::max(0, *count - 1));
    for (int r = 0; r <= r_max; ++r)
      for (int i = 0; i <= i_hi; ++i)
        out.push_back({static_cast<int>(idx), false, r, i,
                       beta_hat(rule, r, i, opts, static_cast<int>(idx))});
  }
  return out;
}

std::string axiom_tag(const GeneratedAxiom& axiom) {
  if (axiom.order0) return "rule" + std::to_string(axiom.rule_index) + "_order0";
  return "rule" + std::to_string(axiom.rule_index) + "_r" +
         std::to_string(axiom.r) + "_i" + std::to_string(axiom.i);
}

std::string render_axioms(const std::vector<GeneratedAxiom>& axioms,
                          AxiomFormat format) {
  const char* comment = format == AxiomFormat::Sexpr ? ";" : "%";
  std::string out;
  std::vector<std::string> non_universal;
  for (const auto& axiom : axioms) {
    out += comment;
    if (axiom.order0) {
      out += " rule=" + std::to_string(axiom.rule_index) + " order=0\n";
    } else {
      out += " rule=" + std::to_string(axiom.rule_index) +
             " r=" + std::to_string(axiom.r) + " i=" + std::to_string(axiom.i) +
             "\n";
    }
    if (format == AxiomFormat::Sexpr) {
      out += to_sexpr(axiom.sentence) + "\n";
    } else {
      out += "fof(" + axiom_tag(axiom) + ", axiom, " +
             to_tptp(axiom.sentence) + ").\n";
    }
    if (!is_universal(axiom.sentence)) non_universal.push_back(axiom_tag(axiom));
  }
  out += std::string(comment) +
         (non_universal.empty() ? " universal=yes\n" : " universal=no\n");
  for (const auto& tag : non_universal)
    out += std::string(comment) + " non-universal " + tag + "\n";
  return out;
}

Formula simplify(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Verum:
    case K::Falsum:
    case K::Rel:
    case K::Eq:
    case K::Mon:
      return f;
    case K::Not: {
      Formula c = simplify(f.child(0));
      if (c.kind() == K::Verum) return Formula::falsum();
      if (c.kind() == K::Falsum) return Formula::verum();
      return Formula::negation(std::move(c));
    }
    case K::And:
    case K::Or: {
      bool conjunction = f.kind() == K::And;
      std::vector<Formula> parts;
      for (const auto& raw : f.children()) {
        Formula c = simplify(raw);
        if (c.kind() == (conjunction ? K::Verum : K::Falsum)) continue;
        if (c.kind() == (conjunction ? K::Falsum : K::Verum))
          return conjunction ? Formula::falsum() : Formula::verum();
        if (c.kind() == f.kind()) {
          for (const auto& nested : c.children()) parts.push_back(nested);
        } else {
          parts.push_back(std::move(c));
        }
      }
      if (parts.size() == 1) return parts[0];
      return conjunction ? Formula::conj(std::move(parts))
                         : Formula::disj(std::move(parts));
    }
    case K::Implies: {
      Formula a = simplify(f.child(0));
      Formula b = simplify(f.child(1));
      if (a.kind() == K::Verum) return b;
      if (a.kind() == K::Falsum) return Formula::verum();
      if (b.kind() == K::Verum) return Formula::verum();
      if (b.kind() == K::Falsum) return Formula::negation(std::move(a));
      return Formula::implies(std::move(a), std::move(b));
    }
    case K::Forall:
    case K::Exists: {
      Formula body = simplify(f.body());
      if (body.kind() == K::Verum || body.kind() == K::Falsum) return body;
      return f.kind() == K::Forall ? Formula::forall(f.vars(), std::move(body))
                                   : Formula::exists(f.vars(), std::move(body));
    }
  }
  return f;
}

}  // namespace sepsub
