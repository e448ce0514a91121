#include "sepsub/builtin_schemes.hpp"

#include "sepsub/errors.hpp"

namespace sepsub {

namespace {

Term v(const std::string& name) { return Term::var(name); }

Formula edge(const std::string& a, const std::string& b) {
  return Formula::rel("E", {v(a), v(b)});
}

Signature graph_signature() {
  Signature sig;
  sig.relations = {{"E", 2}};
  return sig;
}

std::vector<Formula> graph_superclass() {
  return {
      Formula::forall({"x"}, Formula::negation(edge("x", "x"))),
      Formula::forall({"x", "y"},
                      Formula::implies(edge("x", "y"), edge("y", "x"))),
  };
}

// tau_0: every vertex carries some colour.
ClosureConjunct colour_total(int n) {
  std::vector<Formula> any;
  for (int k = 1; k <= n; ++k) any.push_back(Formula::mon(k, v("y")));
  return {{"y"}, Formula::verum(), Formula::disj(std::move(any))};
}

// tau_1: no vertex carries two colours.
ClosureConjunct colour_exclusive(int n) {
  std::vector<Formula> parts;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      if (m != k)
        parts.push_back(Formula::negation(
            Formula::conj({Formula::mon(m, v("y")), Formula::mon(k, v("y"))})));
  return {{"y"}, Formula::verum(), Formula::conj(std::move(parts))};
}

// tau_2: adjacent vertices differ in every colour. The adjacency test is
// a parameter so the clique-cover scheme can rewrite it.
ClosureConjunct colour_proper(int n, Formula adjacency) {
  std::vector<Formula> parts;
  for (int k = 1; k <= n; ++k)
    parts.push_back(Formula::negation(Formula::conj(
        {Formula::mon(k, v("y1")), Formula::mon(k, v("y2"))})));
  return {{"y1", "y2"}, std::move(adjacency), Formula::conj(std::move(parts))};
}

// tau_3: distinct edges never repeat a colour pattern.
ClosureConjunct colour_harmonious(int n) {
  Formula distinct = Formula::negation(Formula::conj(
      {Formula::eq(v("y1"), v("y3")), Formula::eq(v("y2"), v("y4"))}));
  Formula gamma =
      Formula::conj({distinct, edge("y1", "y2"), edge("y3", "y4")});
  std::vector<Formula> parts;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      parts.push_back(Formula::negation(Formula::conj(
          {Formula::mon(m, v("y1")), Formula::mon(k, v("y2")),
           Formula::mon(m, v("y3")), Formula::mon(k, v("y4"))})));
  return {{"y1", "y2", "y3", "y4"}, std::move(gamma),
          Formula::conj(std::move(parts))};
}

SeparationScheme colouring_like(int n, bool harmonious, bool clique_cover) {
  if (n < 1) throw ValidationError("need at least one colour");
  Formula adjacency =
      clique_cover
          ? Formula::conj({Formula::negation(edge("y1", "y2")),
                           Formula::negation(Formula::eq(v("y1"), v("y2")))})
          : edge("y1", "y2");
  std::vector<ClosureConjunct> conjuncts = {
      colour_total(n), colour_exclusive(n), colour_proper(n, adjacency)};
  if (harmonious) conjuncts.push_back(colour_harmonious(n));

  SeparationScheme scheme;
  scheme.signature = graph_signature();
  scheme.superclass = graph_superclass();
  scheme.rules.push_back(SeparationRule::positive(
      n, {"x"}, Formula::verum(), Formula::verum(),
      ClosureRule::explicit_list(std::move(conjuncts))));
  scheme.validate();
  return scheme;
}

}  // namespace

SeparationScheme colouring_scheme(int colours) {
  return colouring_like(colours, false, false);
}

SeparationScheme harmonious_scheme(int colours) {
  return colouring_like(colours, true, false);
}

SeparationScheme clique_cover_scheme(int colours) {
  return colouring_like(colours, false, true);
}

namespace {

Formula dupa_rel(const std::string& a, const std::string& b,
                 const std::string& c) {
  return Formula::rel("d", {v(a), v(b), v(c)});
}

Formula c1(const std::string& name) { return Formula::mon(1, v(name)); }

std::vector<ClosureConjunct> basic_set_conjuncts() {
  Formula defined = dupa_rel("y1", "y2", "y3");
  std::vector<std::string> ys = {"y1", "y2", "y3"};
  ClosureConjunct split{
      ys, defined,
      Formula::implies(c1("y3"), Formula::disj({c1("y1"), c1("y2")}))};
  ClosureConjunct join{
      ys, defined,
      Formula::implies(Formula::disj({c1("y1"), c1("y2")}), c1("y3"))};
  ClosureConjunct apart{ys, defined,
                        Formula::disj({Formula::negation(c1("y1")),
                                       Formula::negation(c1("y2"))})};
  return {split, join, apart};
}

}  // namespace

SeparationScheme dupa_scheme() {
  SeparationScheme scheme;
  scheme.signature.relations = {{"d", 3}};
  scheme.superclass = {Formula::forall(
      {"x1", "x2", "y", "z"},
      Formula::implies(
          Formula::conj({dupa_rel("x1", "x2", "y"), dupa_rel("x1", "x2", "z")}),
          Formula::eq(v("y"), v("z"))))};

  ClosureRule tau = ClosureRule::explicit_list(basic_set_conjuncts());

  // Distinct elements are separated by a basic set.
  Formula eta1 = Formula::disj(
      {Formula::conj({c1("x1"), Formula::negation(c1("x2"))}),
       Formula::conj({c1("x2"), Formula::negation(c1("x1"))})});
  scheme.rules.push_back(SeparationRule::positive(
      1, {"x1", "x2"}, Formula::negation(Formula::eq(v("x1"), v("x2"))),
      std::move(eta1), tau));

  // Elements whose union is undefined share a basic set.
  Formula undefined = Formula::negation(
      Formula::exists({"x3"}, dupa_rel("x1", "x2", "x3")));
  scheme.rules.push_back(SeparationRule::positive(
      1, {"x1", "x2"}, std::move(undefined),
      Formula::conj({c1("x1"), c1("x2")}), tau));

  scheme.validate();
  return scheme;
}

namespace {

Formula leq(const std::string& a, const std::string& b) {
  return Formula::rel("leq", {v(a), v(b)});
}

std::vector<std::string> y_vars(int count) {
  std::vector<std::string> ys;
  for (int m = 1; m <= count; ++m) ys.push_back("y" + std::to_string(m));
  return ys;
}

// z is the greatest lower bound of y1..yM.
Formula meet_defining(int size) {
  std::vector<Formula> lower;
  std::vector<Formula> other_below;
  for (const auto& y : y_vars(size)) {
    lower.push_back(leq("z", y));
    other_below.push_back(leq("w", y));
  }
  Formula greatest = Formula::forall(
      {"w"},
      Formula::implies(Formula::conj(std::move(other_below)), leq("w", "z")));
  lower.push_back(std::move(greatest));
  return Formula::conj(std::move(lower));
}

// z is the least upper bound of y1..yM.
Formula join_defining(int size) {
  std::vector<Formula> upper;
  std::vector<Formula> other_above;
  for (const auto& y : y_vars(size)) {
    upper.push_back(leq(y, "z"));
    other_above.push_back(leq(y, "w"));
  }
  Formula least = Formula::forall(
      {"w"},
      Formula::implies(Formula::conj(std::move(other_above)), leq("z", "w")));
  upper.push_back(std::move(least));
  return Formula::conj(std::move(upper));
}

ClosureConjunct upward_closure() {
  return {{"y", "z"}, leq("y", "z"),
          Formula::implies(Formula::mon(1, v("y")), Formula::mon(1, v("z")))};
}

ClosureConjunct meet_closure(int size) {
  auto ys = y_vars(size);
  std::vector<Formula> members;
  for (const auto& y : ys) members.push_back(Formula::mon(1, v(y)));
  Formula psi = Formula::implies(Formula::conj(std::move(members)),
                                 Formula::mon(1, v("z")));
  ys.push_back("z");
  return {std::move(ys), meet_defining(size), std::move(psi)};
}

ClosureConjunct join_primality(int size) {
  auto ys = y_vars(size);
  std::vector<Formula> members;
  for (const auto& y : ys) members.push_back(Formula::mon(1, v(y)));
  Formula psi = Formula::implies(Formula::mon(1, v("z")),
                                 Formula::disj(std::move(members)));
  ys.push_back("z");
  return {std::move(ys), join_defining(size), std::move(psi)};
}

// The conjunct stream in paper order: upward closure first, then joins at
// odd and meets at even positions, sizes growing. Bounds suppress their
// stream; surviving conjuncts keep consecutive indices.
ClosureConjunct poset_conjunct_at(int alpha, int beta, int index) {
  if (index == 0) return upward_closure();
  int seen = 0;
  for (int paper = 1;; ++paper) {
    int size = (paper + 1) / 2;
    bool is_join = paper % 2 == 1;
    bool active = is_join ? (beta == kOmega || size < beta)
                          : (alpha == kOmega || size < alpha);
    if (!active) {
      if (alpha != kOmega && beta != kOmega && size >= alpha && size >= beta)
        throw ValidationError("conjunct index beyond the finite stream");
      continue;
    }
    if (++seen == index)
      return is_join ? join_primality(size) : meet_closure(size);
  }
}

}  // namespace

SeparationScheme poset_scheme(int alpha, int beta) {
  for (int bound : {alpha, beta})
    if (bound != kOmega && bound < 2)
      throw ValidationError("poset bounds must be >= 2 (or omega)");

  SeparationScheme scheme;
  scheme.signature.relations = {{"leq", 2}};
  scheme.superclass = {
      Formula::forall({"x"}, leq("x", "x")),
      Formula::forall({"x", "y"},
                      Formula::implies(
                          Formula::conj({leq("x", "y"), leq("y", "x")}),
                          Formula::eq(v("x"), v("y")))),
      Formula::forall({"x", "y", "z"},
                      Formula::implies(
                          Formula::conj({leq("x", "y"), leq("y", "z")}),
                          leq("x", "z"))),
  };

  ClosureRule tau = ClosureRule::top();
  if (alpha == kOmega || beta == kOmega) {
    std::string name = alpha == kOmega && beta == kOmega
                           ? "poset-omega-filter"
                           : "poset-filter-" + std::to_string(alpha) + "-" +
                                 std::to_string(beta);
    tau = ClosureRule::generated(name, [alpha, beta](int index) {
      return poset_conjunct_at(alpha, beta, index);
    });
  } else {
    std::vector<ClosureConjunct> conjuncts;
    int total = 1 + (alpha - 1) + (beta - 1);
    for (int i = 0; i < total; ++i)
      conjuncts.push_back(poset_conjunct_at(alpha, beta, i));
    tau = ClosureRule::explicit_list(std::move(conjuncts));
  }

  scheme.rules.push_back(SeparationRule::positive(
      1, {"p", "q"}, Formula::negation(leq("p", "q")),
      Formula::conj({Formula::mon(1, v("p")),
                     Formula::negation(Formula::mon(1, v("q")))}),
      std::move(tau)));
  scheme.validate();
  return scheme;
}

std::optional<ConjunctGenerator> builtin_generator(const std::string& name) {
  if (name == "poset-omega-filter")
    return ConjunctGenerator{
        [](int index) { return poset_conjunct_at(kOmega, kOmega, index); }};
  return std::nullopt;
}

FiniteStructure make_graph(int vertices,
                           const std::vector<std::pair<int, int>>& edges) {
  FiniteStructure g(graph_signature(), vertices);
  for (auto [a, b] : edges) {
    g.add_tuple("E", {a, b});
    g.add_tuple("E", {b, a});
  }
  return g;
}

FiniteStructure cycle_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) edges.emplace_back(i, (i + 1) % vertices);
  return make_graph(vertices, edges);
}

FiniteStructure complete_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  return make_graph(vertices, edges);
}

FiniteStructure path_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return make_graph(vertices, edges);
}

FiniteStructure edgeless_graph(int vertices) {
  return make_graph(vertices, {});
}

FiniteStructure complement_graph(const FiniteStructure& a) {
  if (a.signature() != graph_signature())
    throw ValidationError("complement requires the graph signature {E/2}");
  FiniteStructure out(graph_signature(), a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j && !a.holds("E", {i, j})) out.add_tuple("E", {i, j});
  return out;
}

}  // namespace sepsub
