#include "spec_io.hpp"

#include <fstream>
#include <sstream>

namespace seifert::cli {

using nlohmann::json;

BigInt parse_bigint(const std::string& text, const std::string& where) {
  BigInt v;
  const bool has_digits = text.find_first_of("0123456789") != std::string::npos;
  if (!has_digits || text.find_first_not_of("+-0123456789") != std::string::npos ||
      v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw SpecParseError(where + ": '" + text + "' is not an integer");
  }
  return v;
}

BigInt parse_bigint(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return BigInt(std::to_string(value.get<std::uint64_t>()));
    return BigInt(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) return parse_bigint(value.get<std::string>(), where);
  throw SpecParseError(where + ": expected an integer, got " + value.dump());
}

json bigint_to_json(const BigInt& v) {
  static const BigInt kLimit = BigInt(1) << 53;
  if (abs(v) < kLimit) return json(v.get_si());
  return json(v.get_str());
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<BigInt> int_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw SpecParseError(where + ": expected an array");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_bigint(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

SeifertSurfaceModel from_spec(const json& spec, const std::string& where) {
  if (!spec.is_object()) throw SpecParseError(where + ": expected an object");

  if (spec.contains("sum")) {
    const auto& parts = spec["sum"];
    if (!parts.is_array()) throw SpecParseError(where + ".sum: expected an array");
    auto acc = disk_surface();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      acc = boundary_connected_sum(acc, from_spec(parts[i], where + ".sum[" + std::to_string(i) + "]"));
    }
    return acc;
  }

  if (spec.contains("builder")) {
    const auto& name_json = spec["builder"];
    if (!name_json.is_string()) throw SpecParseError(where + ".builder: expected a string");
    const auto name = name_json.get<std::string>();
    const auto params = spec.contains("params") ? int_array(spec["params"], where + ".params")
                                                : std::vector<BigInt>{};
    auto arity = [&](std::size_t expected) {
      if (params.size() != expected) {
        throw SpecParseError(where + ": builder \"" + name + "\" takes " + std::to_string(expected) +
                             " params, got " + std::to_string(params.size()));
      }
    };
    if (name == "s2xs2") { arity(2); return s2xs2(params[0], params[1]); }
    if (name == "cp2") { arity(1); return cp2(params[0]); }
    if (name == "cp2bar") { arity(1); return cp2bar(params[0]); }
    if (name == "kummer") { arity(2); return kummer(params[0], params[1]); }
    if (name == "p") { arity(0); return p_block(); }
    if (name == "q") { arity(0); return q_block(); }
    throw SpecParseError(where + ": unknown builder \"" + name + "\"");
  }

  const auto& gram_json = require(spec, "gram", where);
  if (!gram_json.is_array()) throw SpecParseError(where + ".gram: expected an array of rows");
  std::vector<std::vector<BigInt>> gram;
  for (std::size_t i = 0; i < gram_json.size(); ++i) {
    gram.push_back(int_array(gram_json[i], where + ".gram[" + std::to_string(i) + "]"));
  }
  auto euler = int_array(require(spec, "euler", where), where + ".euler");
  std::string label = "(gram)";
  if (spec.contains("label")) {
    if (!spec["label"].is_string()) throw SpecParseError(where + ".label: expected a string");
    label = spec["label"].get<std::string>();
  }
  return make_surface(make_lattice(gram), std::move(euler), std::move(label));
}

}  // namespace

SeifertSurfaceModel surface_from_spec(const json& spec) { return from_spec(spec, "spec"); }

SeifertSurfaceModel load_surface_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw SpecParseError(path + ": " + e.what());
  }
  return surface_from_spec(doc);
}

json surface_to_spec(const SeifertSurfaceModel& surface) {
  json gram = json::array();
  for (std::size_t i = 0; i < surface.rank(); ++i) {
    json row = json::array();
    for (const auto& v : surface.form().row(i)) row.push_back(bigint_to_json(v));
    gram.push_back(std::move(row));
  }
  json euler = json::array();
  for (const auto& v : surface.euler().coords()) euler.push_back(bigint_to_json(v));
  return {{"gram", std::move(gram)}, {"euler", std::move(euler)}, {"label", surface.label()}};
}

}  // namespace seifert::cli
