#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = quandle::cli::run(std::move(args), {in, out, err});
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ValidateFixture) {
  auto r = run({"validate", "fixture:smallquandle-12-4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "quandle, n=12\n");
  auto file = run({"validate", std::string(QUANDLE_DATA_DIR) + "/smallquandle-12-4.perm"});
  EXPECT_EQ(file.out, r.out);
}

TEST(Cli, ValidateTrivialFromStdin) {
  auto r = run({"validate", "-"}, "rtbl 3\n1 2 3\n1 2 3\n1 2 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "quandle, n=3\n");
}

TEST(Cli, ValidateCorruptedRowNamesA2) {
  auto r = run({"validate", "-"}, "rtbl 3\n1 2 3\n1 1 3\n1 2 3\n");
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(contains(r.out, "not-a-rack, n=3"));
  EXPECT_TRUE(contains(r.out, "A2: row 2"));
}

TEST(Cli, ParseErrorHasPosition) {
  auto r = run({"validate", "-"}, "rtbl 2\n1 2\n1 z\n");
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(contains(r.err, "3:3"));
}

TEST(Cli, AnalyzeFixture) {
  auto r = run({"analyze", "fixture:smallquandle-12-4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "profile: 1^1 2^1 3^1 6^1; hayashi: holds; primitive: no"));
}

TEST(Cli, AnalyzeTrivialTwo) {
  auto r = run({"analyze", "-"}, "rtbl 2\n1 2\n1 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "connected: no; profile: n/a"));
}

TEST(Cli, ConstructThenAnalyzeAffine) {
  auto c = run({"construct", "affine orders=5 alpha=2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(c.out.starts_with("rtbl 5\n"));
  auto a = run({"analyze", "-"}, c.out);
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "connected: yes (beta bijective)"));
}

TEST(Cli, ConstructConjugacyClasses) {
  auto c = run({"construct", "conj d=3 type=2,1"});
  EXPECT_EQ(c.out, "rtbl 3\n# construct: conj d=3 type=2,1\n1 3 2\n3 2 1\n2 1 3\n");
  auto v = run({"construct", "conj d=4 type=2,2"});
  auto a = run({"analyze", "-"}, v.out);
  EXPECT_TRUE(contains(a.out, "connected: no"));
}

TEST(Cli, ConstructBadSpec) {
  auto r = run({"construct", "affine orders=4 alpha=2"});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(contains(r.err, "alpha"));
}

TEST(Cli, ScanSymFour) {
  auto r = run({"scan", "--sym", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "summary: 4 noncentral classes, 2 connected, all pass"));
}

TEST(Cli, ScanEnumerateFive) {
  auto r = run({"scan", "--enumerate", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "summary: 3 connected quandles, all pass"));
}

TEST(Cli, ScanAltFiveSplitClasses) {
  auto r = run({"scan", "--alt", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "[5] class 0 size 12"));
  EXPECT_TRUE(contains(r.out, "[5] class 1 size 12"));
}

TEST(Cli, ScanBoundAndCap) {
  EXPECT_EQ(run({"scan", "--sym", "9"}).code, 3);
  EXPECT_EQ(run({"--cap", "5", "scan", "--sym", "4"}).code, 3);
  EXPECT_EQ(run({"scan"}).code, 4);
  EXPECT_EQ(run({"scan", "--sym", "3", "--alt", "3"}).code, 4);
}

TEST(Cli, JsonOutputs) {
  auto v = nlohmann::json::parse(run({"--json", "validate", "fixture:smallquandle-12-4"}).out);
  EXPECT_EQ(v["kind"], "quandle");
  auto a = nlohmann::json::parse(run({"--json", "analyze", "fixture:smallquandle-12-4"}).out);
  EXPECT_EQ(a["n"], 12);
  EXPECT_EQ(a["f"], 1);
  EXPECT_EQ(a["primitive"], false);
  EXPECT_EQ(a["hayashi"]["holds"], true);
  EXPECT_EQ(a["prop_re"]["trivial_witness"], 6);
  EXPECT_EQ(a["profile"].size(), 4u);
  auto s = nlohmann::json::parse(run({"--json", "scan", "--sym", "4"}).out);
  EXPECT_EQ(s["classes"].size(), 4u);
  auto e = nlohmann::json::parse(run({"--json", "scan", "--enumerate", "4"}).out);
  EXPECT_EQ(e["summary"]["count"], 1);
  auto c = nlohmann::json::parse(run({"--json", "construct", "dihedral n=3"}).out);
  EXPECT_EQ(c["table"][0][1], 3);
}

TEST(Cli, FlagsAfterSubcommand) {
  EXPECT_EQ(run({"analyze", "fixture:smallquandle-12-4", "--json"}).out,
            run({"--json", "analyze", "fixture:smallquandle-12-4"}).out);
  EXPECT_EQ(run({"scan", "--sym", "4", "--cap", "5"}).code, 3);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "fixture:smallquandle-12-4"},
           {"--json", "scan", "--enumerate", "6"},
           {"scan", "--enumerate", "6", "--threads", "3"},
           {"scan", "--alt", "5"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
  EXPECT_EQ(run({"scan", "--enumerate", "6", "--threads", "3"}).out, run({"scan", "--enumerate", "6"}).out);
}

TEST(Cli, UnknownFixture) {
  auto r = run({"validate", "fixture:nope"});
  EXPECT_EQ(r.code, 4);
}
