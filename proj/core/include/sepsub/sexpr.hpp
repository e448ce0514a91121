#pragma once

#include <string>
#include <vector>

namespace sepsub {

/// A parsed S-expression: either a bare atom or a list. Atoms keep the
/// source text verbatim; every node remembers where it started so error
/// messages can point at the offending token.
struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> items;
  int line = 0;
  int col = 0;

  static Sexpr make_atom(std::string text, int line = 0, int col = 0);
  static Sexpr make_list(std::vector<Sexpr> items, int line = 0, int col = 0);
};

/// Reads every top-level S-expression from `src`. Whitespace-insensitive;
/// ';' starts a comment running to end of line.
std::vector<Sexpr> parse_sexprs(const std::string& src);

/// As above but demands exactly one expression.
Sexpr parse_sexpr(const std::string& src);

std::string sexpr_to_string(const Sexpr& e);

}  // namespace sepsub
