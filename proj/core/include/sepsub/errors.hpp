#pragma once

#include <stdexcept>
#include <string>

namespace sepsub {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in a DSL source, with a 1-based position.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Violation of a structural invariant: undeclared symbols, arity
/// mismatches, malformed rules, free variables out of scope, ...
struct ValidationError : Error {
  using Error::Error;
};

/// Raised during evaluation: unbound free variable, monadic index
/// exceeding the supplied set count.
struct EvalError : Error {
  using Error::Error;
};

/// An enumeration or search was asked to exceed a configured cap.
/// Signals infeasibility of the check, never a verdict.
struct CapExceeded : Error {
  using Error::Error;
};

/// The axiom generator's node-count guard tripped.
struct SizeGuardExceeded : Error {
  SizeGuardExceeded(int rule_index, int r, int i, std::uint64_t cap)
      : Error("size guard exceeded generating sentence for rule " +
              std::to_string(rule_index) + " at r=" + std::to_string(r) +
              ", i=" + std::to_string(i) + " (cap " + std::to_string(cap) +
              " nodes)"),
        rule_index(rule_index),
        r(r),
        i(i),
        cap(cap) {}
  int rule_index;
  int r;
  int i;
  std::uint64_t cap;
};

}  // namespace sepsub
