#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "seifert/bigint.hpp"
#include "seifert/surface.hpp"

namespace seifert::cli {

// Malformed JSON or a document that does not match the surface-spec schema.
class SpecParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts a JSON integer or a decimal string.
BigInt parse_bigint(const nlohmann::json& value, const std::string& where);
BigInt parse_bigint(const std::string& text, const std::string& where);

/// Number when |v| < 2^53, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& v);

/// Builds a surface from a spec document:
///   {"gram": [[...]], "euler": [...], "label": "..."}
///   {"builder": "s2xs2"|"cp2"|"cp2bar"|"kummer"|"p"|"q", "params": [...]}
///   {"sum": [spec, ...]}
/// Schema errors throw SpecParseError; lattice/characteristic violations throw seifert::Error.
SeifertSurfaceModel surface_from_spec(const nlohmann::json& spec);

SeifertSurfaceModel load_surface_spec(const std::string& path);

/// Explicit {"gram", "euler", "label"} document for a model.
nlohmann::json surface_to_spec(const SeifertSurfaceModel& surface);

}  // namespace seifert::cli
