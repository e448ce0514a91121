#pragma once

#include <map>
#include <string>

#include "sepsub/ast.hpp"

namespace sepsub {

/// Simultaneous renaming of free variables, capture-avoiding: a binder
/// that would capture an incoming name is renamed first (deterministically,
/// by appending ~1, ~2, ... until fresh).
Formula rename_free_variables(const Formula& f,
                              const std::map<std::string, std::string>& ren);
Term rename_free_variables(const Term& t,
                           const std::map<std::string, std::string>& ren);

}  // namespace sepsub
