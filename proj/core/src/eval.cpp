#include "sepsub/eval.hpp"

#include "sepsub/errors.hpp"

namespace sepsub {

int eval_term(const FiniteStructure& a, const Assignment& v, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto e = v.lookup(t.name());
      if (!e) throw EvalError("unbound variable '" + t.name() + "'");
      return *e;
    }
    case Term::Kind::Const:
      return a.constant_value(t.name());
    case Term::Kind::App: {
      std::vector<int> args;
      args.reserve(t.args().size());
      for (const auto& arg : t.args()) args.push_back(eval_term(a, v, arg));
      return a.apply(t.name(), args);
    }
  }
  throw EvalError("malformed term");
}

namespace {

struct Evaluator {
  const FiniteStructure& a;
  Assignment& v;
  const std::function<bool(int, int)>* contains;
  int mon_count;

  bool eval(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Verum:
        return true;
      case K::Falsum:
        return false;
      case K::Rel: {
        std::vector<int> tuple;
        tuple.reserve(f.terms().size());
        for (const auto& t : f.terms()) tuple.push_back(eval_term(a, v, t));
        return a.holds(f.rel_name(), tuple);
      }
      case K::Eq:
        return eval_term(a, v, f.terms()[0]) == eval_term(a, v, f.terms()[1]);
      case K::Mon: {
        if (!contains)
          throw EvalError("monadic atom C_" + std::to_string(f.mon_index()) +
                          " with no monadic interpretation supplied");
        if (f.mon_index() > mon_count)
          throw EvalError("monadic index " + std::to_string(f.mon_index()) +
                          " exceeds the " + std::to_string(mon_count) +
                          " supplied sets");
        return (*contains)(f.mon_index(), eval_term(a, v, f.terms()[0]));
      }
      case K::Not:
        return !eval(f.child(0));
      case K::And:
        for (const auto& c : f.children())
          if (!eval(c)) return false;
        return true;
      case K::Or:
        for (const auto& c : f.children())
          if (eval(c)) return true;
        return false;
      case K::Implies:
        return !eval(f.child(0)) || eval(f.child(1));
      case K::Forall:
      case K::Exists: {
        bool want = f.kind() == K::Exists;
        return quantify(f, 0, want);
      }
    }
    throw EvalError("malformed formula");
  }

  // Iterates assignments to vars()[i..] and short-circuits on `want`.
  bool quantify(const Formula& f, std::size_t i, bool want) {
    if (i == f.vars().size()) return eval(f.body());
    const std::string& var = f.vars()[i];
    auto saved = v.lookup(var);
    for (int e = 0; e < a.size(); ++e) {
      v.bind(var, e);
      bool sub = quantify(f, i + 1, want);
      if (sub == want) {
        restore(var, saved);
        return want;
      }
    }
    restore(var, saved);
    return !want;
  }

  void restore(const std::string& var, const std::optional<int>& saved) {
    if (saved)
      v.bind(var, *saved);
    else
      v.unbind(var);
  }
};

}  // namespace

bool eval_formula(const FiniteStructure& a, const Assignment& v,
                  const Formula& f,
                  const std::function<bool(int, int)>& contains,
                  int mon_count) {
  Assignment scratch = v;
  Evaluator ev{a, scratch, &contains, mon_count};
  return ev.eval(f);
}

bool eval_formula(const FiniteStructure& a, const Assignment& v,
                  const Formula& f, const MonadicSets* mon) {
  Assignment scratch = v;
  if (!mon) {
    Evaluator ev{a, scratch, nullptr, 0};
    return ev.eval(f);
  }
  std::function<bool(int, int)> contains = [mon](int k, int e) {
    return (*mon)[k - 1].count(e) > 0;
  };
  Evaluator ev{a, scratch, &contains, static_cast<int>(mon->size())};
  return ev.eval(f);
}

}  // namespace sepsub
