#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepsub {

/// A first-order signature: relation symbols with arities >= 0, constant
/// symbols, and function symbols with arities >= 1. Declaration order is
/// preserved; symbol names must be distinct across all three kinds.
struct Signature {
  std::vector<std::pair<std::string, int>> relations;
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;

  std::optional<int> relation_arity(const std::string& name) const;
  std::optional<int> function_arity(const std::string& name) const;
  bool has_constant(const std::string& name) const;
  bool has_symbol(const std::string& name) const;

  /// Throws ValidationError on duplicate names or bad arities.
  void validate() const;

  bool operator==(const Signature&) const = default;
};

}  // namespace sepsub
