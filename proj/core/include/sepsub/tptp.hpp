#pragma once

#include <string>
#include <vector>

#include "sepsub/ast.hpp"

namespace sepsub {

/// Renders a pure formula in TPTP FOF syntax. Variables get their first
/// character uppercased; symbol names that are not valid TPTP atoms are
/// single-quoted. Monadic atoms have no TPTP encoding and throw.
std::string to_tptp(const Formula& f);

struct TptpUnit {
  std::string name;
  std::string role;
  Formula formula;
};

/// Reads the fof(...) units of a TPTP file ('%' comments allowed).
/// Variables are mapped back by lowercasing their first character, so
/// formulas printed by to_tptp reparse to the same AST whenever the
/// original variable names started with a lowercase letter.
std::vector<TptpUnit> parse_tptp(const std::string& text);

}  // namespace sepsub
