#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "taag/taag.hpp"

namespace taag::support {

inline std::vector<FixtureInfo> all_fixtures() {
  std::vector<FixtureInfo> out;
  for (auto k : all_fixture_kinds()) out.push_back(build_fixture_info({k, {}}));
  return out;
}

inline FixtureInfo fixture(FixtureKind k) { return build_fixture_info({k, {}}); }

inline std::size_t count_edges(const ConvexityMap& c, Convexity want) {
  return static_cast<std::size_t>(std::count(c.edge_conv.begin(), c.edge_conv.end(), want));
}

/// Copy of the model with every edge stored in the opposite direction.
inline SolidModel reverse_edges(SolidModel m) {
  for (auto& e : m.edges) {
    if (e.endpoints) std::swap(e.endpoints->first, e.endpoints->second);
    std::swap(e.faces.first, e.faces.second);
    std::visit(Overloaded{
                   [](LineSegment&) {},
                   [](CircularArc& a) { a.axis = -a.axis; },
                   [](FullCircle& c) { c.axis = -c.axis; },
               },
               e.curve);
  }
  return m;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Minimal JSON Schema checker for the subset the report schema uses:
/// type, required, properties, additionalProperties:false, items, enum,
/// minimum and local $ref. Returns the first violation, empty if none.
class SchemaChecker {
 public:
  explicit SchemaChecker(nlohmann::json root) : root_(std::move(root)) {}

  std::string check(const nlohmann::json& doc) const { return check(doc, root_, "$"); }

 private:
  const nlohmann::json& resolve(const nlohmann::json& s) const {
    if (!s.contains("$ref")) return s;
    std::string ref = s["$ref"].get<std::string>();
    const nlohmann::json* node = &root_;
    std::istringstream parts(ref.substr(2));
    for (std::string part; std::getline(parts, part, '/');) node = &(*node)[part];
    return resolve(*node);
  }

  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  std::string check(const nlohmann::json& v, const nlohmann::json& schema, const std::string& at) const {
    const auto& s = resolve(schema);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok |= has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) return at + ": wrong type";
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) return at + ": not in enum";
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) return at + ": below minimum";
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s["required"]) {
          if (!v.contains(key.get<std::string>())) return at + ": missing " + key.get<std::string>();
        }
      }
      const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
      for (const auto& [key, value] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(key)) {
          auto err = check(value, s["properties"][key], at + "." + key);
          if (!err.empty()) return err;
        } else if (closed) {
          return at + ": unexpected key " + key;
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto err = check(v[i], s["items"], at + "[" + std::to_string(i) + "]");
        if (!err.empty()) return err;
      }
    }
    return {};
  }

  nlohmann::json root_;
};

}  // namespace taag::support
