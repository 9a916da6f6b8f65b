#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "seifert/bigint.hpp"
#include "seifert/surface.hpp"

namespace seifert::cli {

struct InvariantReport {
  std::string label;
  std::size_t rank = 0;
  BigInt sigma;
  BigInt cup_square;
  BigInt hopf;
  BigInt haefliger;
  BigInt smale_of_projection;
  bool even_form = false;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport make_report(const SeifertSurfaceModel& surface);

/// Checks haefliger = -(sigma + hopf)/8, smale = (3 sigma - hopf)/2, cup_square = -hopf.
/// Returns an empty string when consistent, otherwise the first broken relation.
std::string check_report(const InvariantReport& report);

nlohmann::json report_to_json(const InvariantReport& report);
/// Throws SpecParseError on missing or mistyped fields.
InvariantReport report_from_json(const nlohmann::json& doc);

// Fixed column order: label, rank, sigma, e.e, H, Omega, omega_proj, even.
void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const InvariantReport& report);

}  // namespace seifert::cli
