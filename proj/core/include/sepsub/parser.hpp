#pragma once

#include <string>
#include <vector>

#include "sepsub/ast.hpp"
#include "sepsub/sexpr.hpp"
#include "sepsub/signature.hpp"

namespace sepsub {

/// Formula DSL over S-expressions:
///   term    := VAR | (const NAME) | (fn NAME term+)
///   formula := (true) | (false) | (rel NAME term*) | (= term term)
///            | (mon K term) | (not f) | (and f*) | (or f*)
///            | (implies f f) | (forall (VAR+) f) | (exists (VAR+) f)
/// All symbols are checked against `sig`.
Formula parse_formula(const std::string& text, const Signature& sig);
Term parse_term(const std::string& text, const Signature& sig);

/// Every top-level formula in `text`, in order.
std::vector<Formula> parse_formulas(const std::string& text,
                                    const Signature& sig);

Formula formula_from_sexpr(const Sexpr& e, const Signature& sig);
Term term_from_sexpr(const Sexpr& e, const Signature& sig);

}  // namespace sepsub
