#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sepsub/signature.hpp"

namespace sepsub {

/// A finite relational structure. Elements are 0..n-1, n >= 1 (standard
/// first-order semantics over non-empty domains). Relations are tuple
/// sets, constants are elements, functions are total maps.
class FiniteStructure {
 public:
  FiniteStructure(Signature sig, int size);

  int size() const { return size_; }
  const Signature& signature() const { return sig_; }

  void add_tuple(const std::string& relation, std::vector<int> tuple);
  void set_relation(const std::string& relation,
                    std::set<std::vector<int>> tuples);
  void set_constant(const std::string& name, int element);
  void set_function_entry(const std::string& name, std::vector<int> args,
                          int value);

  bool holds(const std::string& relation, const std::vector<int>& tuple) const;
  const std::set<std::vector<int>>& tuples(const std::string& relation) const;
  int constant_value(const std::string& name) const;
  int apply(const std::string& function, const std::vector<int>& args) const;

  /// Checks totality of functions and that all constants are set.
  /// Throws ValidationError otherwise.
  void validate() const;

  bool operator==(const FiniteStructure&) const = default;

 private:
  Signature sig_;
  int size_;
  std::map<std::string, std::set<std::vector<int>>> relations_;
  std::map<std::string, int> constants_;
  std::map<std::string, std::map<std::vector<int>, int>> functions_;
};

/// JSON round trip for the structure file format:
///   { "universe": n,
///     "relations": {NAME: [[i,...],...]},
///     "constants": {NAME: i},
///     "functions": {NAME: [[arg...,val],...]} }
/// Absent relations are empty. With a signature, symbols are checked
/// against it; without one, the signature is inferred from the file.
FiniteStructure structure_from_json(const std::string& text,
                                    const Signature& sig);
FiniteStructure structure_from_json(const std::string& text);
std::string structure_to_json(const FiniteStructure& a);

}  // namespace sepsub
