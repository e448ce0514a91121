#pragma once

#include "sepsub/ast.hpp"

namespace sepsub {

/// Logically equivalent formula with every quantifier pulled into a
/// leading prefix. Requires a pure formula (no monadic atoms); bound
/// variables are renamed apart first, so the result never shadows.
/// Consecutive quantifiers of the same kind are grouped into one binder.
Formula prenex_normal_form(const Formula& f);

/// True iff the prenex normal form of `f` has no existential quantifier
/// in its prefix.
bool is_universal(const Formula& f);

}  // namespace sepsub
