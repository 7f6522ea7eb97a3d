#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qpres/algebra.hpp"

namespace qpres {

// strict schema: field_char, vertices, arrows{name,from,to},
// relations = array of arrays of {coef, path}, nilpotency_bound
AlgebraSpec algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json algebra_to_json(const AlgebraSpec& spec);

// throws ParseError with a line number on malformed JSON
AlgebraSpec parse_algebra_file(const std::string& path);

// a2, k2, k3, a3n
AlgebraSpec builtin_spec(const std::string& name, uint32_t field_char = 1009);

// accepts "builtin:NAME" or a file path; optional field characteristic override
AlgebraSpec resolve_algebra_arg(const std::string& arg, uint32_t field_override = 0);

// FNV-1a over the canonical serialization
uint64_t algebra_hash(const AlgebraSpec& spec);

}  // namespace qpres
