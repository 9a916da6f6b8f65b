#include "commands.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "golden_table.hpp"
#include "seifert/error.hpp"
#include "seifert/realize.hpp"
#include "seifert/smale.hpp"
#include "spec_io.hpp"

namespace seifert::cli {

using nlohmann::json;

namespace {

void emit_report(std::ostream& out, const InvariantReport& report, bool as_json) {
  if (as_json) {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    write_report_header(out);
    write_report_row(out, report);
  }
}

int cmd_compute(const std::string& spec_path, bool as_json, std::ostream& out) {
  emit_report(out, make_report(load_surface_spec(spec_path)), as_json);
  return kOk;
}

struct RealizeArgs {
  std::optional<std::string> omega;
  std::optional<std::string> hopf;
  std::optional<std::string> sigma;
  std::optional<std::string> base;
};

int cmd_realize(const RealizeArgs& args, bool as_json, std::ostream& out, std::ostream& err) {
  if (args.hopf.has_value() == args.sigma.has_value()) {
    err << "realize: exactly one of --hopf or --sigma is required\n";
    return kUsage;
  }
  std::optional<BigInt> omega;
  if (args.omega) omega = parse_bigint(*args.omega, "--omega");

  std::optional<SeifertSurfaceModel> base;
  if (args.base) {
    base = load_surface_spec(*args.base);
    if (omega && haefliger_invariant(*base) != *omega) {
      err << "realize: --omega " << omega->get_str() << " disagrees with the base surface (Omega = "
          << haefliger_invariant(*base).get_str() << ")\n";
      return kUsage;
    }
  } else if (omega) {
    base = s2xs2(*omega, 1);
  } else {
    err << "realize: --omega is required when no --base is given\n";
    return kUsage;
  }

  const auto plan = args.hopf ? realize_hopf(*base, parse_bigint(*args.hopf, "--hopf"))
                              : realize_signature(*base, parse_bigint(*args.sigma, "--sigma"));
  const auto base_report = make_report(plan.base);
  const auto result_report = make_report(plan.result);
  if (as_json) {
    json doc = {{"p_count", plan.p_count},
                {"q_count", plan.q_count},
                {"base", report_to_json(base_report)},
                {"result", report_to_json(result_report)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "p_count: " << plan.p_count << '\n' << "q_count: " << plan.q_count << '\n';
    write_report_header(out);
    write_report_row(out, base_report);
    write_report_row(out, result_report);
  }
  return kOk;
}

int cmd_compress(const std::string& omega_text, const std::string& smale_text, bool as_json,
                 std::ostream& out) {
  const BigInt omega = parse_bigint(omega_text, "--omega");
  const BigInt smale = parse_bigint(smale_text, "--smale");
  const auto data = solve_compression(omega, smale);
  const auto report = make_report(realize_compression(omega, smale));
  if (as_json) {
    json doc = {{"A", bigint_to_json(data.a)}, {"B", bigint_to_json(data.b)}, {"result", report_to_json(report)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "A: " << data.a.get_str() << '\n' << "B: " << data.b.get_str() << '\n';
    write_report_header(out);
    write_report_row(out, report);
  }
  return kOk;
}

int cmd_table(bool check, bool as_json, std::ostream& out, std::ostream& err) {
  const auto rows = invariant_table_rows();
  const auto text = render_table(rows);
  if (as_json) {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(report_to_json(r));
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
  if (!check) return kOk;

  if (text == embedded_golden_table()) {
    err << "table: " << rows.size() << " rows match the golden file\n";
    return kOk;
  }
  std::istringstream got(text);
  std::istringstream want{std::string(embedded_golden_table())};
  std::string got_line, want_line;
  std::size_t line = 0, mismatches = 0;
  while (true) {
    const bool g = static_cast<bool>(std::getline(got, got_line));
    const bool w = static_cast<bool>(std::getline(want, want_line));
    if (!g && !w) break;
    ++line;
    if (!g) got_line = "<missing>";
    if (!w) want_line = "<missing>";
    if (got_line != want_line && ++mismatches <= 10) {
      err << "line " << line << ":\n  golden:   " << want_line << "\n  computed: " << got_line << '\n';
    }
  }
  err << "table: " << mismatches << " line(s) differ from the golden file\n";
  return kGoldenMismatch;
}

}  // namespace

std::vector<InvariantReport> invariant_table_rows() {
  std::vector<InvariantReport> rows;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) rows.push_back(make_report(s2xs2(a, b)));
  for (long k = -3; k <= 3; ++k) rows.push_back(make_report(cp2(k)));
  for (long k = -3; k <= 3; ++k) rows.push_back(make_report(cp2bar(k)));
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) rows.push_back(make_report(kummer(a, b)));
  rows.push_back(make_report(p_block()));
  rows.push_back(make_report(q_block()));
  return rows;
}

std::string render_table(const std::vector<InvariantReport>& rows) {
  std::ostringstream out;
  write_report_header(out);
  for (const auto& r : rows) write_report_row(out, r);
  return out.str();
}

std::string_view embedded_golden_table() { return kGoldenTable; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Seifert surfaces for knots S^3 -> S^6", "seifert"};
  app.require_subcommand(1);
  bool as_json = false;
  bool check = false;
  app.add_flag("--json", as_json, "Emit machine-readable JSON on stdout");
  app.add_flag("--check", check, "table: compare against the embedded golden file");

  std::string spec_path;
  auto* compute = app.add_subcommand("compute", "Invariant report for a surface spec file");
  compute->add_option("spec", spec_path, "Surface spec (JSON)")->required();
  compute->fallthrough();

  RealizeArgs realize_args;
  auto* realize = app.add_subcommand("realize", "Prescribe the Hopf invariant or the signature");
  realize->add_option("--omega", realize_args.omega, "Haefliger invariant of the default base s2xs2(omega, 1)");
  auto* hopf_opt = realize->add_option("--hopf", realize_args.hopf, "Target Hopf invariant");
  auto* sigma_opt = realize->add_option("--sigma", realize_args.sigma, "Target signature");
  hopf_opt->excludes(sigma_opt);
  realize->add_option("--base", realize_args.base, "Base surface spec (JSON)");
  realize->fallthrough();

  std::string omega_text, smale_text;
  auto* compress = app.add_subcommand("compress", "Solve the compression system for (Omega, omega)");
  compress->add_option("--omega", omega_text, "Haefliger invariant")->required();
  compress->add_option("--smale", smale_text, "Smale invariant of the immersion")->required();
  compress->fallthrough();

  auto* table = app.add_subcommand("table", "Invariant table over all builder families");
  table->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "seifert: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(spec_path, as_json, out);
    if (*realize) return cmd_realize(realize_args, as_json, out, err);
    if (*compress) return cmd_compress(omega_text, smale_text, as_json, out);
    if (*table) return cmd_table(check, as_json, out, err);
  } catch (const SpecParseError& e) {
    err << "seifert: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "seifert: " << e.what() << '\n';
    if (e.code() == ErrorCode::kOddSmaleInvariant) return kOddSmale;
    if (e.code() == ErrorCode::kInternalCongruenceViolation) return kInternal;
    return kInvalidModel;
  } catch (const std::exception& e) {
    err << "seifert: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace seifert::cli
