#include <gtest/gtest.h>

#include <map>

#include "ringlab/report_io.hpp"
#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

std::vector<RingExpr> parse_all(std::initializer_list<const char*> texts) {
  std::vector<RingExpr> out;
  for (const char* t : texts) out.push_back(parse_ring_expr(t));
  return out;
}

const std::vector<VerifyRow>& builtin_rows() {
  static const std::vector<VerifyRow> rows = [] {
    std::vector<RingExpr> corpus;
    for (const auto& s : builtin_corpus()) corpus.push_back(parse_ring_expr(s));
    return verify_corpus(corpus);
  }();
  return rows;
}

}  // namespace

TEST(Corpus, BuiltinHasSeventyEightRings) {
  const auto corpus = builtin_corpus();
  EXPECT_EQ(corpus.size(), 78u);
  EXPECT_EQ(corpus.front(), "Z2");
  EXPECT_EQ(corpus.back(), "modJ(M(2,Z4))");
}

// Abelian weakly J-quasipolar rings with 2 not in J are not uniquely clean:
// in Z3, 2 = 0 + 2 = 1 + 1 with both summands units. Every other check passes.
TEST(Corpus, BuiltinPassesExceptAbelianConverse) {
  const auto& rows = builtin_rows();
  std::set<std::string> rings;
  std::set<std::string> refuted;
  for (const auto& row : rows) {
    rings.insert(row.ring);
    if (row.check == "weakly_abelian_implies_uniquely_clean" && row.result == CheckResult::fail) {
      refuted.insert(row.ring);
      continue;
    }
    EXPECT_EQ(row.result, CheckResult::pass) << row.ring << " " << row.check << " " << row.witness;
  }
  EXPECT_EQ(rings.size(), 78u);
  const std::set<std::string> expected{
      "Z3",        "Z6",        "Z9",        "Z12",       "Z18",       "Z24",
      "Z27",       "Z2 x Z3",   "modJ(Z3)",  "modJ(Z6)",  "modJ(Z9)",  "modJ(Z12)",
      "modJ(Z18)", "modJ(Z24)", "modJ(Z27)", "modJ(Z2 x Z3)"};
  EXPECT_EQ(refuted, expected);
}

TEST(Corpus, AbelianConverseWitnessIsNotUniquelyClean) {
  for (const auto& row : builtin_rows()) {
    if (row.check != "weakly_abelian_implies_uniquely_clean" || row.result != CheckResult::fail)
      continue;
    const RingPtr r = eval_ring_expr(row.ring);
    const Index a = parse_element(row.witness, *r).index();
    EXPECT_GE(uniquely_clean_count(*r, a), 2u) << row.ring;
    EXPECT_FALSE(jacobson_radical(*r).contains(r->integer(2))) << row.ring;
  }
}

TEST(Corpus, RowsSortedAndComplete) {
  const auto& rows = builtin_rows();
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
    return std::tie(a.ring, a.check) < std::tie(b.ring, b.check);
  }));
  std::map<std::string, std::size_t> per_check;
  for (const auto& row : rows) ++per_check[row.check];
  EXPECT_EQ(per_check.size(), check_names().size());
  EXPECT_EQ(per_check["ring_axioms"], 78u);
  EXPECT_EQ(per_check["t2_fast_path"], 3u);
  EXPECT_EQ(per_check["m2_fast_paths"], 3u);
  EXPECT_EQ(per_check["matrix_not_weakly"], 3u);
}

TEST(Corpus, TriangularCornerWitness) {
  for (const auto& row : builtin_rows())
    if (row.ring == "T(2,Z3)" && row.check == "tn_corner_corollary") {
      EXPECT_FALSE(row.witness.empty());
    }
}

TEST(Corpus, OversizedRingIsSkipped) {
  const auto rows = verify_corpus(parse_all({"M(3,Z5)", "Z4"}));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().ring, "M(3,Z5)");
  EXPECT_EQ(rows.front().check, "all");
  EXPECT_EQ(rows.front().result, CheckResult::skipped);
  EXPECT_EQ(rows.front().order, 1953125u);
  EXPECT_FALSE(any_failed(rows));
  EXPECT_EQ(rows.back().ring, "Z4");
}

TEST(Corpus, CheckSelection) {
  VerifyOptions opt;
  opt.checks = {"ring_axioms", "five_shift"};
  const auto rows = verify_corpus(parse_all({"Z6", "Z9"}), opt);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].check, "five_shift");
  EXPECT_EQ(rows[1].check, "ring_axioms");
  opt.checks = {"no_such_check"};
  EXPECT_THROW(verify_corpus(parse_all({"Z6"}), opt), InvalidParameter);
}

TEST(Corpus, WorkerCountDoesNotChangeRows) {
  const auto corpus = parse_all({"Z12", "T(2,Z2)", "Z2 x Z3", "modJ(Z8)"});
  VerifyOptions one;
  one.workers = 1;
  VerifyOptions four;
  four.workers = 4;
  const auto a = verify_corpus(corpus, one);
  const auto b = verify_corpus(corpus, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ring, b[i].ring);
    EXPECT_EQ(a[i].check, b[i].check);
    EXPECT_EQ(a[i].result, b[i].result);
    EXPECT_EQ(a[i].witness, b[i].witness);
  }
}

TEST(Csv, HeaderAndQuoting) {
  std::vector<VerifyRow> rows{{"M(2,Z2)", 16, "x", CheckResult::fail, "[[0,1],[0,0]]", 3},
                              {"Z6", 6, "y", CheckResult::pass, "", 0},
                              {"Z2", 2, "z", CheckResult::fail, "say \"hi\"", 1}};
  EXPECT_EQ(to_csv(rows),
            "ring,order,check,result,witness,elapsed_ms\n"
            "\"M(2,Z2)\",16,x,FAIL,\"[[0,1],[0,0]]\",3\n"
            "Z6,6,y,PASS,,0\n"
            "Z2,2,z,FAIL,\"say \"\"hi\"\"\",1\n");
}

TEST(Csv, JsonRows) {
  std::vector<VerifyRow> rows{{"Z6", 6, "y", CheckResult::skipped, "", 0}};
  EXPECT_EQ(to_json(rows).dump(),
            R"([{"ring":"Z6","order":6,"check":"y","result":"SKIPPED","witness":"","elapsed_ms":0}])");
}
