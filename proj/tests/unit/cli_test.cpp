#include <gtest/gtest.h>

#include <regex>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "report.hpp"
#include "seifert/error.hpp"
#include "seifert/surface.hpp"
#include "spec_io.hpp"

namespace seifert::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SEIFERT_TEST_DATA_DIR) + "/" + name; }

TEST(Compute, S2xS2) {
  const auto r = run_cli({"compute", data("s2xs2_1_1.json"), "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto report = report_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(report.haefliger, 1);
  EXPECT_EQ(report.hopf, -8);
  EXPECT_EQ(report.sigma, 0);
  EXPECT_EQ(report.smale_of_projection, 4);
  EXPECT_TRUE(r.err.empty());
}

TEST(Compute, Kummer) {
  const auto r = run_cli({"--json", "compute", data("kummer_1_1.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto report = report_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(report.haefliger, 3);
  EXPECT_EQ(report.sigma, -16);
  EXPECT_EQ(report.rank, 22u);
}

TEST(Compute, TextColumns) {
  const auto r = run_cli({"compute", data("s2xs2_1_1.json")});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(std::regex_search(r.out, std::regex(R"(s2xs2\(1,1\)\s+2\s+0\s+8\s+-8\s+1\s+4\s+yes)"))) << r.out;
}

TEST(Compute, InvalidModelExitsThree) {
  auto r = run_cli({"compute", data("not_characteristic.json")});
  EXPECT_EQ(r.code, kInvalidModel);
  EXPECT_NE(r.err.find("NotCharacteristic"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  r = run_cli({"compute", data("non_unimodular.json")});
  EXPECT_EQ(r.code, kInvalidModel);
  EXPECT_NE(r.err.find("NonUnimodular"), std::string::npos);
}

TEST(Compute, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({"compute", data("malformed.json")}).code, kUsage);
  EXPECT_EQ(run_cli({"compute", data("does_not_exist.json")}).code, kUsage);
  EXPECT_EQ(run_cli({"compute"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
}

TEST(Compute, SumSpec) {
  const auto r = run_cli({"compute", data("sum.json"), "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto report = report_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(report.rank, 3u);
  EXPECT_EQ(report.sigma, 1);
  EXPECT_EQ(report.haefliger, 3);  // 0 + 0 + 2*3/2
}

TEST(Compute, BuilderAndGramSpecsAgree) {
  const auto a = run_cli({"compute", data("s2xs2_1_1.json")});
  const auto b = run_cli({"compute", data("s2xs2_1_1_gram.json")});
  EXPECT_EQ(a.out, b.out);
  for (long k = -4; k <= 4; ++k) {
    for (const auto& s : {cp2(k), cp2bar(k), kummer(k, 1 - k), s2xs2(k, k + 2)}) {
      EXPECT_EQ(make_report(surface_from_spec(surface_to_spec(s))), make_report(s));
    }
  }
}

TEST(SpecParsing, SchemaErrors) {
  using nlohmann::json;
  EXPECT_THROW(surface_from_spec(json::parse(R"({"builder": "cp2"})")), SpecParseError);
  EXPECT_THROW(surface_from_spec(json::parse(R"({"builder": "torus", "params": []})")), SpecParseError);
  EXPECT_THROW(surface_from_spec(json::parse(R"({"gram": [[1]]})")), SpecParseError);
  EXPECT_THROW(surface_from_spec(json::parse(R"({"gram": [[1]], "euler": ["x"]})")), SpecParseError);
  EXPECT_THROW(surface_from_spec(json::parse(R"([1, 2])")), SpecParseError);
  EXPECT_THROW(surface_from_spec(json::parse(R"({"gram": [[0, 1], [2, 0]], "euler": [0, 0]})")), Error);
}

TEST(SpecParsing, BigIntegersAsStrings) {
  using nlohmann::json;
  const auto s = surface_from_spec(json::parse(R"({"builder": "s2xs2", "params": ["10000000000", "10000000000"]})"));
  EXPECT_EQ(haefliger_invariant(s), BigInt("100000000000000000000"));
}

TEST(Report, JsonRoundTrip) {
  for (const auto& s : {s2xs2(3, -2), kummer(2, 1), cp2(7), s2xs2(BigInt("123456789012"), BigInt("98765432109"))}) {
    const auto report = make_report(s);
    EXPECT_EQ(check_report(report), "");
    const auto doc = report_to_json(report);
    const auto back = report_from_json(nlohmann::json::parse(doc.dump()));
    EXPECT_EQ(back, report);
    EXPECT_EQ(check_report(back), "");
  }
  const auto huge = report_to_json(make_report(s2xs2(BigInt("123456789012"), BigInt("98765432109"))));
  EXPECT_TRUE(huge["haefliger"].is_string());
  EXPECT_TRUE(huge["sigma"].is_number_integer());
}

TEST(Report, DetectsInconsistency) {
  auto report = make_report(s2xs2(1, 1));
  report.haefliger = 2;
  EXPECT_NE(check_report(report), "");
}

TEST(Realize, HopfTarget) {
  const auto r = run_cli({"realize", "--omega", "1", "--hopf", "0", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["q_count"], 8);
  EXPECT_EQ(doc["p_count"], 0);
  const auto result = report_from_json(doc["result"]);
  EXPECT_EQ(result.sigma, -8);
  EXPECT_EQ(result.haefliger, 1);
}

TEST(Realize, NoOpSignature) {
  const auto r = run_cli({"realize", "--omega", "0", "--sigma", "0", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["q_count"], 0);
  EXPECT_EQ(doc["p_count"], 0);
  EXPECT_EQ(doc["base"]["label"], "s2xs2(0,1)");
}

TEST(Realize, NegativeHopf) {
  const auto r = run_cli({"realize", "--omega", "2", "--hopf", "-16", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto result = report_from_json(nlohmann::json::parse(r.out)["result"]);
  EXPECT_EQ(result.hopf, -16);
  EXPECT_EQ(result.haefliger, 2);
  EXPECT_EQ(result.sigma, 0);
}

TEST(Realize, WithBase) {
  const auto r = run_cli({"realize", "--base", data("kummer_1_1.json"), "--sigma", "0", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["p_count"], 16);
  EXPECT_EQ(report_from_json(doc["result"]).haefliger, 3);
  EXPECT_EQ(run_cli({"realize", "--base", data("kummer_1_1.json"), "--omega", "1", "--sigma", "0"}).code, kUsage);
}

TEST(Realize, FlagMisuse) {
  EXPECT_EQ(run_cli({"realize", "--omega", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"realize", "--omega", "1", "--hopf", "0", "--sigma", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"realize", "--hopf", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"realize", "--omega", "one", "--hopf", "0"}).code, kUsage);
}

TEST(Compress, Examples) {
  auto r = run_cli({"compress", "--omega", "1", "--smale", "2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["A"], -1);
  EXPECT_EQ(doc["B"], 7);
  const auto result = report_from_json(doc["result"]);
  EXPECT_EQ(result.haefliger, 1);
  EXPECT_EQ(result.smale_of_projection, 2);

  r = run_cli({"compress", "--omega", "0", "--smale", "0"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("A: 0\nB: 0\n"), std::string::npos);
}

TEST(Compress, OddSmaleExitsFour) {
  const auto r = run_cli({"compress", "--omega", "0", "--smale", "1"});
  EXPECT_EQ(r.code, kOddSmale);
  EXPECT_NE(r.err.find("odd"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Table, MatchesGolden) {
  const auto r = run_cli({"table", "--check"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, std::string(embedded_golden_table()));
}

// The golden file is checked against closed forms, not against the library.
TEST(Table, GoldenRowsFollowClosedForms) {
  std::istringstream in{std::string(embedded_golden_table())};
  std::string line;
  std::getline(in, line);  // header
  const std::regex row(R"(^(\S+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(yes|no)$)");
  const std::regex two(R"((s2xs2|kummer)\((-?\d+),(-?\d+)\))");
  const std::regex one_param(R"((cp2|cp2bar)\((-?\d+)\))");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::smatch m;
    ASSERT_TRUE(std::regex_match(line, m, row)) << line;
    const std::string label = m[1];
    long got[6];
    for (int i = 0; i < 6; ++i) got[i] = std::stol(m[i + 2]);
    const bool even = m[8] == "yes";
    long want[6];  // rank, sigma, e.e, H, Omega, omega_proj
    bool want_even;
    std::smatch p;
    if (std::regex_match(label, p, two)) {
      const long a = std::stol(p[2]), b = std::stol(p[3]);
      if (p[1] == "s2xs2") {
        long w[6] = {2, 0, 8 * a * b, -8 * a * b, a * b, 4 * a * b};
        std::copy(w, w + 6, want);
      } else {
        long w[6] = {22, -16, 8 * a * b, -8 * a * b, 2 + a * b, (-48 + 8 * a * b) / 2};
        std::copy(w, w + 6, want);
      }
      want_even = true;
    } else if (std::regex_match(label, p, one_param)) {
      const long k = std::stol(p[2]);
      const long sq = (2 * k + 1) * (2 * k + 1);
      const long s = p[1] == "cp2" ? 1 : -1;
      long w[6] = {1, s, s * sq, -s * sq, s * k * (k + 1) / 2, s * (3 + sq) / 2};
      std::copy(w, w + 6, want);
      want_even = false;
    } else if (label == "P" || label == "Q") {
      const long s = label == "P" ? 1 : -1;
      long w[6] = {1, s, s, -s, 0, 2 * s};
      std::copy(w, w + 6, want);
      want_even = false;
    } else {
      FAIL() << "unexpected row " << label;
    }
    for (int i = 0; i < 6; ++i) EXPECT_EQ(got[i], want[i]) << label << " column " << i;
    EXPECT_EQ(even, want_even) << label;
    ++rows;
  }
  EXPECT_EQ(rows, 90u);
  const std::string golden(embedded_golden_table());
  EXPECT_NE(golden.find("s2xs2(3,-2)"), std::string::npos);
  EXPECT_NE(golden.find("cp2(3)"), std::string::npos);
  EXPECT_NE(golden.find("kummer(2,1)"), std::string::npos);
}

TEST(Table, JsonRows) {
  const auto r = run_cli({"table", "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 90u);
  for (const auto& row : doc) EXPECT_EQ(check_report(report_from_json(row)), "");
}

TEST(Help, ExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
}

}  // namespace
}  // namespace seifert::cli
