#pragma once

#include <string>

#include "sepsub/separation.hpp"

namespace sepsub {

/// Scheme file syntax:
///   (scheme
///     (signature (rel NAME ARITY)* (const NAME)* (fn NAME ARITY)*)
///     (superclass formula*)
///     (rule (order 0) formula)
///     (rule (order K) (vars (x+)) (mu f) (eta f)
///           (tau top
///              | (conjuncts ((vars (y+)) (gamma f) (psi f))*)
///              | (generated NAME))))
/// Generated names resolve to the built-in conjunct streams.
SeparationScheme parse_scheme(const std::string& text);
std::string print_scheme(const SeparationScheme& scheme);

}  // namespace sepsub
