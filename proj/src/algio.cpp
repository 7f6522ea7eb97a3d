#include "qpres/algio.hpp"

#include <fstream>

#include "qpres/errors.hpp"

namespace qpres {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* k : keys)
    if (!j.contains(k)) throw ValidationError(where, std::string("missing field ") + k);
}

}  // namespace

AlgebraSpec algebra_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("spec", "top level must be an object");
  require_keys(j, {"field_char", "vertices", "arrows", "relations", "nilpotency_bound"},
               "spec");
  AlgebraSpec spec;
  if (!j["field_char"].is_number_unsigned() && !j["field_char"].is_number_integer())
    throw ValidationError("field_char", "must be an integer");
  long long fc = j["field_char"].get<long long>();
  if (fc < 2 || fc > 0x7fffffff) throw ValidationError("field_char", "out of range");
  spec.field_char = static_cast<uint32_t>(fc);

  if (!j["vertices"].is_array()) throw ValidationError("vertices", "must be an array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ValidationError("vertices", "labels must be strings");
    spec.vertices.push_back(v.get<std::string>());
  }

  if (!j["arrows"].is_array()) throw ValidationError("arrows", "must be an array");
  for (const auto& a : j["arrows"]) {
    if (!a.is_object()) throw ValidationError("arrows", "entries must be objects");
    require_keys(a, {"name", "from", "to"}, "arrows");
    spec.arrows.push_back({a["name"].get<std::string>(), a["from"].get<std::string>(),
                           a["to"].get<std::string>()});
  }

  if (!j["relations"].is_array()) throw ValidationError("relations", "must be an array");
  for (const auto& rel : j["relations"]) {
    if (!rel.is_array()) throw ValidationError("relations", "each relation is an array of terms");
    std::vector<SpecRelTerm> terms;
    for (const auto& t : rel) {
      if (!t.is_object()) throw ValidationError("relations", "terms must be objects");
      require_keys(t, {"coef", "path"}, "relations");
      SpecRelTerm term;
      term.coef = t["coef"].get<long long>();
      if (!t["path"].is_array()) throw ValidationError("relations", "path must be an array");
      for (const auto& name : t["path"]) term.path.push_back(name.get<std::string>());
      terms.push_back(std::move(term));
    }
    spec.relations.push_back(std::move(terms));
  }

  if (!j["nilpotency_bound"].is_number_integer() &&
      !j["nilpotency_bound"].is_number_unsigned())
    throw ValidationError("nilpotency_bound", "must be an integer");
  spec.nilpotency_bound = j["nilpotency_bound"].get<int>();
  return spec;
}

ordered_json algebra_to_json(const AlgebraSpec& spec) {
  ordered_json j;
  j["field_char"] = spec.field_char;
  j["vertices"] = spec.vertices;
  j["arrows"] = ordered_json::array();
  for (const auto& a : spec.arrows)
    j["arrows"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
  j["relations"] = ordered_json::array();
  for (const auto& rel : spec.relations) {
    ordered_json jr = ordered_json::array();
    for (const auto& t : rel) jr.push_back({{"coef", t.coef}, {"path", t.path}});
    j["relations"].push_back(jr);
  }
  j["nilpotency_bound"] = spec.nilpotency_bound;
  return j;
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; recover the line by counting newlines
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)),
                     std::istreambuf_iterator<char>());
    int line = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  return algebra_from_json(j);
}

AlgebraSpec builtin_spec(const std::string& name, uint32_t field_char) {
  AlgebraSpec spec;
  spec.field_char = field_char;
  spec.nilpotency_bound = 2;
  if (name == "a2") {
    spec.vertices = {"1", "2"};
    spec.arrows = {{"a", "1", "2"}};
  } else if (name == "k2") {
    spec.vertices = {"1", "2"};
    spec.arrows = {{"a", "1", "2"}, {"b", "1", "2"}};
  } else if (name == "k3") {
    spec.vertices = {"1", "2"};
    spec.arrows = {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}};
  } else if (name == "a3n") {
    spec.vertices = {"1", "2", "3"};
    spec.arrows = {{"a", "1", "2"}, {"b", "2", "3"}};
    spec.relations = {{{1, {"a", "b"}}}};
  } else {
    throw ValidationError("algebra", "unknown builtin " + name);
  }
  return spec;
}

AlgebraSpec resolve_algebra_arg(const std::string& arg, uint32_t field_override) {
  AlgebraSpec spec;
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0)
    spec = builtin_spec(arg.substr(prefix.size()));
  else
    spec = parse_algebra_file(arg);
  if (field_override) spec.field_char = field_override;
  return spec;
}

uint64_t algebra_hash(const AlgebraSpec& spec) {
  std::string text = algebra_to_json(spec).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace qpres
