#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "ringlab/cli.hpp"

using namespace ringlab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string mask(const std::string& text) {
  static const std::regex json_ms(R"(("elapsed_ms": )[0-9]+)");
  static const std::regex csv_ms(R"(,[0-9]+\n)");
  return std::regex_replace(std::regex_replace(text, json_ms, "$1\"*\""), csv_ms, ",*\n");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const char* name) { return slurp(std::filesystem::path(RINGLAB_GOLDEN_DIR) / name); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ringlab_test_" + name);
}

int shell(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Golden, AnalyzeZ6Json) {
  const CliRun r = run({"analyze", "Z6", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(mask(r.out), golden("analyze_z6.json"));
}

TEST(Golden, ElementZ6TwoJson) {
  const CliRun r = run({"element", "Z6", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(mask(r.out), golden("element_z6_2.json"));
}

TEST(Golden, CorpusBuiltinCsv) {
  const CliRun r = run({"corpus", "--builtin", "--quiet"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(mask(r.out), golden("corpus_builtin.csv"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Determinism, RepeatedRunsMatch) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "M(2,Z2)", "--json", "--witnesses"},
           {"element", "T(2,Z4)", "[[1,1],[0,2]]", "--fast-path", "--json"},
           {"corpus", "--builtin", "--json", "--quiet"}}) {
    EXPECT_EQ(mask(run(args).out), mask(run(args).out)) << args[0];
  }
}

TEST(Analyze, WorkedExamples) {
  const auto m2 = Json::parse(run({"analyze", "M(2,Z2)", "--json"}).out);
  std::map<std::string, bool> verdicts;
  for (const auto& p : m2["properties"]) verdicts[p["name"]] = p["verdict"];
  EXPECT_FALSE(verdicts["weakly_j_quasipolar"]);
  EXPECT_FALSE(verdicts["j_equals_j_sharp"]);

  const CliRun z15 = run({"analyze", "Z15"});
  EXPECT_NE(z15.out.find("weakly_j_quasipolar  false"), std::string::npos);
  EXPECT_NE(z15.out.find("six_in_j             false"), std::string::npos);
}

TEST(Analyze, PropertySubsetAndWitnesses) {
  const auto j = Json::parse(
      run({"analyze", "T(2,Z3)", "--json", "--properties", "weakly_j_quasipolar,six_in_j", "--witnesses"})
          .out);
  ASSERT_EQ(j["properties"].size(), 2u);
  EXPECT_EQ(j["properties"][0]["name"], "weakly_j_quasipolar");
  EXPECT_EQ(j["properties"][0]["witness"], "[[1,0],[0,2]]");
  EXPECT_EQ(j["properties"][1]["verdict"], true);
  EXPECT_EQ(run({"analyze", "Z6", "--properties", "nonsense"}).code, 2);
}

TEST(Element, FastPathAgreement) {
  const auto j = Json::parse(run({"element", "T(2,Z4)", "[[1,1],[0,2]]", "--fast-path", "--json"}).out);
  ASSERT_EQ(j["fast_path"].size(), 1u);
  EXPECT_EQ(j["fast_path"][0]["verdict"], true);
  EXPECT_EQ(j["fast_path"][0]["case"], "T2-case-3");
  EXPECT_EQ(j["fast_path"][0]["agrees"], true);
  EXPECT_EQ(j["certificates"][0]["present"], true);
}

TEST(Element, NilpotentInJSharp) {
  const auto j = Json::parse(run({"element", "M(2,Z2)", "[[0,1],[0,0]]", "--json"}).out);
  EXPECT_EQ(j["in_radical"], false);
  EXPECT_EQ(j["in_j_sharp"], true);
  EXPECT_EQ(j["certificates"][0]["present"], false);
}

TEST(Element, NegativeLiteral) {
  const auto j = Json::parse(run({"element", "Z6", "-1", "--json"}).out);
  EXPECT_EQ(j["element"], "5");
}

TEST(ExitCodes, UsageAndParse) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "M(2 Z2)"}).code, 2);
  EXPECT_EQ(run({"analyze", "Z0"}).code, 2);
  EXPECT_EQ(run({"element", "T(2,Z4)", "[[1,0],[1,0]]"}).code, 2);
  EXPECT_EQ(run({"element", "Z6", "[[1]]"}).code, 2);
  EXPECT_EQ(run({"analyze", "Z6", "--max-order", "0"}).code, 2);
  EXPECT_EQ(run({"corpus"}).code, 2);
  EXPECT_EQ(run({"corpus", "/nonexistent/corpus.txt"}).code, 2);
  const CliRun r = run({"analyze", "M(2 Z2)"});
  EXPECT_NE(r.err.find("byte 4"), std::string::npos) << r.err;
}

TEST(ExitCodes, Cap) {
  const CliRun r = run({"analyze", "M(3,Z5)"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("1953125"), std::string::npos);
  EXPECT_EQ(run({"analyze", "M(2,Z4)", "--max-order", "100"}).code, 3);
  EXPECT_EQ(run({"analyze", "Z6", "--max-order", "6"}).code, 0);
}

TEST(Corpus, FileWithCommentsAndSkip) {
  const auto path = temp_path("corpus.txt");
  std::ofstream(path) << "# small rings\nZ4\n\n  # indented comment\nM(3,Z5)\nT(2,Z2)\n";
  const auto out = temp_path("corpus.csv");
  const CliRun r = run({"corpus", path.string(), "--out", out.string(), "--quiet"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.rfind("ring,order,check,result,witness,elapsed_ms\n", 0), 0u);
  EXPECT_NE(csv.find("\"M(3,Z5)\",1953125,all,SKIPPED,,0\n"), std::string::npos);
  EXPECT_EQ(csv.find("FAIL"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(out);
}

TEST(Corpus, BadLineIsUsageError) {
  const auto path = temp_path("bad_corpus.txt");
  std::ofstream(path) << "Z4\nM(2,\n";
  const CliRun r = run({"corpus", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("corpus line 2"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Binary, ExitCodes) {
  const std::string exe = RINGLAB_CLI_PATH;
  EXPECT_EQ(shell(exe + " analyze Z6"), 0);
  EXPECT_EQ(shell(exe + " analyze 'M(2 Z2)'"), 2);
  EXPECT_EQ(shell(exe + " analyze 'M(3,Z5)'"), 3);
  EXPECT_EQ(shell(exe + " element 'T(2,Z4)' '[[1,1],[0,2]]' --fast-path"), 0);
}
