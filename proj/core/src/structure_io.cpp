#include <json.hpp>

#include "sepsub/errors.hpp"
#include "sepsub/structure.hpp"

namespace sepsub {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
}

std::vector<int> int_row(const ordered_json& row) {
  if (!row.is_array()) throw ValidationError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : row) {
    if (!v.is_number_integer()) throw ValidationError("expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

void check_keys(const ordered_json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    if (k != "universe" && k != "relations" && k != "constants" &&
        k != "functions")
      throw ValidationError("unknown key '" + k + "' in structure file");
  }
}

FiniteStructure build(const ordered_json& j, const Signature& sig) {
  if (!j.is_object() || !j.contains("universe"))
    throw ValidationError("structure file must be an object with 'universe'");
  check_keys(j);
  FiniteStructure a(sig, j.at("universe").get<int>());
  if (j.contains("relations")) {
    for (auto it = j.at("relations").begin(); it != j.at("relations").end();
         ++it)
      for (const auto& row : it.value()) a.add_tuple(it.key(), int_row(row));
  }
  if (j.contains("constants")) {
    for (auto it = j.at("constants").begin(); it != j.at("constants").end();
         ++it)
      a.set_constant(it.key(), it.value().get<int>());
  }
  if (j.contains("functions")) {
    for (auto it = j.at("functions").begin(); it != j.at("functions").end();
         ++it)
      for (const auto& row : it.value()) {
        auto vals = int_row(row);
        if (vals.empty()) throw ValidationError("empty function row");
        int result = vals.back();
        vals.pop_back();
        a.set_function_entry(it.key(), std::move(vals), result);
      }
  }
  a.validate();
  return a;
}

}  // namespace

FiniteStructure structure_from_json(const std::string& text,
                                    const Signature& sig) {
  return build(parse_json(text), sig);
}

FiniteStructure structure_from_json(const std::string& text) {
  auto j = parse_json(text);
  if (!j.is_object() || !j.contains("universe"))
    throw ValidationError("structure file must be an object with 'universe'");
  check_keys(j);
  // No ambient signature: infer one from the file itself.
  Signature sig;
  if (j.contains("relations")) {
    for (auto it = j.at("relations").begin(); it != j.at("relations").end();
         ++it) {
      if (it.value().empty())
        throw ValidationError("cannot infer arity of empty relation '" +
                              it.key() + "'; supply a scheme");
      sig.relations.emplace_back(it.key(),
                                 static_cast<int>(it.value().front().size()));
    }
  }
  if (j.contains("constants")) {
    for (auto it = j.at("constants").begin(); it != j.at("constants").end();
         ++it)
      sig.constants.push_back(it.key());
  }
  if (j.contains("functions")) {
    for (auto it = j.at("functions").begin(); it != j.at("functions").end();
         ++it) {
      if (it.value().empty())
        throw ValidationError("cannot infer arity of empty function '" +
                              it.key() + "'");
      sig.functions.emplace_back(
          it.key(), static_cast<int>(it.value().front().size()) - 1);
    }
  }
  return build(j, sig);
}

std::string structure_to_json(const FiniteStructure& a) {
  ordered_json j;
  j["universe"] = a.size();
  ordered_json rels = ordered_json::object();
  for (const auto& [name, arity] : a.signature().relations) {
    (void)arity;
    ordered_json rows = ordered_json::array();
    for (const auto& t : a.tuples(name)) rows.push_back(t);
    rels[name] = std::move(rows);
  }
  j["relations"] = std::move(rels);
  if (!a.signature().constants.empty()) {
    ordered_json cs = ordered_json::object();
    for (const auto& c : a.signature().constants) cs[c] = a.constant_value(c);
    j["constants"] = std::move(cs);
  }
  if (!a.signature().functions.empty()) {
    ordered_json fs = ordered_json::object();
    for (const auto& [name, arity] : a.signature().functions) {
      ordered_json rows = ordered_json::array();
      std::vector<int> args(arity, 0);
      bool more = true;
      while (more) {
        auto row = args;
        row.push_back(a.apply(name, args));
        rows.push_back(row);
        more = false;
        for (int i = arity - 1; i >= 0; --i) {
          if (++args[i] < a.size()) {
            more = true;
            break;
          }
          args[i] = 0;
        }
      }
      fs[name] = std::move(rows);
    }
    j["functions"] = std::move(fs);
  }
  return j.dump(2) + "\n";
}

}  // namespace sepsub
