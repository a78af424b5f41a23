#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"

namespace deligne::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& stem) { return std::string(DELIGNE_CORPUS_DIR) + "/" + stem + ".json"; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "deligne_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::filesystem::path write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

io::Json report(const Outcome& o) { return io::Json::parse(o.out); }

TEST(Cli, CheckAlgebraVerifiesEf) {
  const Outcome o = invoke({"check-algebra", corpus("ef")});
  ASSERT_EQ(o.code, 0) << o.err;
  const io::Json r = report(o);
  EXPECT_EQ(r["command"], "check-algebra");
  EXPECT_EQ(r["input"]["name"], "ef");
  EXPECT_EQ(r["counts"]["falsified"], 0);
  for (const auto& c : r["checks"]) EXPECT_EQ(c["verdict"], "verified") << c.dump();
}

TEST(Cli, BrokenDifferentialIsFalsified) {
  // d x = y, d y = z: d^2 != 0.
  const auto p = write("broken.json", R"({
  "kind": "dg_lie",
  "name": "broken",
  "basis": [{"label": "x", "degree": 0}, {"label": "y", "degree": 1}, {"label": "z", "degree": 2}],
  "differential": [{"source": "x", "target": "y", "coeff": "1"}, {"source": "y", "target": "z", "coeff": "1"}],
  "bracket": []
})");
  const Outcome o = invoke({"check-algebra", p.string()});
  EXPECT_EQ(o.code, 1);
  EXPECT_GE(report(o)["counts"]["falsified"].get<int>(), 1);
}

TEST(Cli, ParseErrorsExitWithTwoAndNameTheField) {
  const auto p = write("typo.json", "{\n  \"kind\": \"dg_lie\",\n  \"nmae\": \"x\"\n}\n");
  const Outcome o = invoke({"check-algebra", p.string()});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("typo.json:3: field /nmae"), std::string::npos) << o.err;
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate", corpus("ef")}).code, 2);
  EXPECT_EQ(invoke({"mc", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(invoke({"mc", corpus("ef_t3"), "--degree-bound", "0"}).code, 2);
  // ef is not nilpotent, and a cover is not a deformation record.
  EXPECT_EQ(invoke({"mc", corpus("ef")}).code, 2);
  EXPECT_EQ(invoke({"verify-descent", corpus("cover_two_open_ef")}).code, 2);
}

TEST(Cli, VersionFlag) {
  const Outcome o = invoke({"--version"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find(kVersion), std::string::npos);
}

TEST(Cli, ConstantCosimplicialTotIsLevelZero) {
  const Outcome o = invoke({"tot", corpus("constant_ef")});
  ASSERT_EQ(o.code, 0) << o.err;
  bool found = false;
  const io::Json r = report(o);
  for (const auto& c : r["checks"])
    if (c["name"] == "constant object") {
      found = true;
      EXPECT_EQ(c["verdict"], "verified");
    }
  EXPECT_TRUE(found);
}

TEST(Cli, AbelianDescentReportsEqualInvariants) {
  const Outcome o = invoke({"verify-descent", corpus("two_open_abelian_eps"), "--samples", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  const io::Json inv = report(o)["summary"]["invariants"];
  EXPECT_EQ(inv["tot_side"], inv["descent_side"]);
  EXPECT_EQ(inv["tot_side"], inv["cochain_side"]);
  EXPECT_EQ(inv["tot_side"]["pi0"], 1);
}

TEST(Cli, ReportsAreDeterministicForAFixedSeed) {
  const std::vector<std::vector<std::string>> jobs{
      {"mc", corpus("heisenberg_t3"), "--seed", "11"},
      {"gauge-orbit", corpus("ef_t3"), "--seed", "11"},
      {"verify-descent", corpus("two_open_ef_t3"), "--samples", "6", "--seed", "11"},
  };
  for (const auto& job : jobs) {
    const Outcome a = invoke(job), b = invoke(job);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << job[0];
  }
}

TEST(Cli, OutWritesTheSameReport) {
  const auto p = scratch("report.json");
  const Outcome a = invoke({"cech", corpus("cover_two_open_ef")});
  const Outcome b = invoke({"cech", corpus("cover_two_open_ef"), "--out", p.string()});
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(b.out.empty());
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), a.out);
}

TEST(Cli, TimingsAreOptIn) {
  EXPECT_FALSE(report(invoke({"cohomology", corpus("heisenberg")})).contains("timings_ms"));
  EXPECT_TRUE(report(invoke({"cohomology", corpus("heisenberg"), "--timings"})).contains("timings_ms"));
}

}  // namespace
}  // namespace deligne::cli
