#include "report.hpp"

#include <iomanip>
#include <ostream>

#include "seifert/smale.hpp"
#include "spec_io.hpp"

namespace seifert::cli {

using nlohmann::json;

InvariantReport make_report(const SeifertSurfaceModel& surface) {
  InvariantReport r;
  r.label = surface.label();
  r.rank = surface.rank();
  r.sigma = signature(surface);
  r.cup_square = cup_square(surface.euler());
  r.hopf = -r.cup_square;
  r.haefliger = haefliger_invariant(surface);
  r.smale_of_projection = smale_of_projection(surface);
  r.even_form = is_even(surface.form());
  return r;
}

std::string check_report(const InvariantReport& r) {
  if (r.cup_square != -r.hopf) return "cup_square != -hopf";
  if (BigInt(-8 * r.haefliger) != r.sigma + r.hopf) return "haefliger != -(sigma + hopf)/8";
  if (BigInt(2 * r.smale_of_projection) != 3 * r.sigma - r.hopf) return "smale_of_projection != (3 sigma - hopf)/2";
  return {};
}

json report_to_json(const InvariantReport& r) {
  return {
      {"label", r.label},
      {"rank", r.rank},
      {"sigma", bigint_to_json(r.sigma)},
      {"cup_square", bigint_to_json(r.cup_square)},
      {"hopf", bigint_to_json(r.hopf)},
      {"haefliger", bigint_to_json(r.haefliger)},
      {"smale_of_projection", bigint_to_json(r.smale_of_projection)},
      {"even_form", r.even_form},
  };
}

InvariantReport report_from_json(const json& doc) {
  if (!doc.is_object()) throw SpecParseError("report: expected an object");
  auto field = [&](const char* key) -> const json& {
    auto it = doc.find(key);
    if (it == doc.end()) throw SpecParseError(std::string("report: missing \"") + key + "\"");
    return *it;
  };
  InvariantReport r;
  if (!field("label").is_string()) throw SpecParseError("report.label: expected a string");
  r.label = field("label").get<std::string>();
  if (!field("rank").is_number_unsigned()) throw SpecParseError("report.rank: expected a nonnegative integer");
  r.rank = field("rank").get<std::size_t>();
  r.sigma = parse_bigint(field("sigma"), "report.sigma");
  r.cup_square = parse_bigint(field("cup_square"), "report.cup_square");
  r.hopf = parse_bigint(field("hopf"), "report.hopf");
  r.haefliger = parse_bigint(field("haefliger"), "report.haefliger");
  r.smale_of_projection = parse_bigint(field("smale_of_projection"), "report.smale_of_projection");
  if (!field("even_form").is_boolean()) throw SpecParseError("report.even_form: expected a boolean");
  r.even_form = field("even_form").get<bool>();
  return r;
}

void write_report_header(std::ostream& out) {
  out << std::left << std::setw(18) << "label" << std::right << std::setw(5) << "rank" << std::setw(7)
      << "sigma" << std::setw(8) << "e.e" << std::setw(8) << "H" << std::setw(7) << "Omega" << std::setw(11)
      << "omega_proj" << std::setw(6) << "even" << '\n';
}

void write_report_row(std::ostream& out, const InvariantReport& r) {
  out << std::left << std::setw(18) << r.label << std::right << std::setw(5) << r.rank << std::setw(7)
      << r.sigma.get_str() << std::setw(8) << r.cup_square.get_str() << std::setw(8) << r.hopf.get_str()
      << std::setw(7) << r.haefliger.get_str() << std::setw(11) << r.smale_of_projection.get_str()
      << std::setw(6) << (r.even_form ? "yes" : "no") << '\n';
}

}  // namespace seifert::cli
