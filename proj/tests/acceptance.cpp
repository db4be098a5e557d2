// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail += "; ";
    else detail.clear();
    pass = false;
    detail += what;
  }
};

Index lit(const FiniteRing& r, const char* text) { return parse_element(text, r).index(); }

std::vector<Index> lits(const FiniteRing& r, std::initializer_list<const char*> texts) {
  std::vector<Index> out;
  for (const char* t : texts) out.push_back(lit(r, t));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome worked_examples() {
  Outcome o;
  o.detail = "Z6 Z3 Z9 Z15 T(2,Z2) T(2,Z3) M(2,Z2)";

  const auto z6 = classify_ring(make_zn(6));
  o.require(z6.verdict("weakly_j_quasipolar") && !z6.verdict("j_quasipolar"), "Z6 verdicts");

  const auto z3 = classify_ring(make_zn(3));
  o.require(z3.verdict("weakly_j_quasipolar") && !z3.verdict("strongly_j_clean") &&
                z3.at("strongly_j_clean").witness == std::vector<Index>{2},
            "Z3 strongly_j_clean witness");

  auto z9r = make_zn(9);
  const auto z9 = classify_ring(z9r);
  o.require(z9.verdict("weakly_j_quasipolar") && !z9.verdict("j_quasipolar") &&
                !jqp_element(*z9r, 4).has_value(),
            "Z9 element 4");

  auto z15r = make_zn(15);
  const auto z15 = classify_ring(z15r);
  o.require(!z15.verdict("weakly_j_quasipolar") && !six_in_j_gate(*z15r), "Z15 verdicts");

  const auto t2 = classify_ring(make_triangular_ring(2, make_zn(2)));
  o.require(t2.verdict("weakly_j_quasipolar") && !t2.verdict("abelian") &&
                !t2.verdict("uniquely_clean"),
            "T(2,Z2) verdicts");

  auto t3r = make_triangular_ring(2, make_zn(3));
  const auto t3 = classify_ring(t3r);
  o.require(!t3.verdict("weakly_j_quasipolar") &&
                t3.at("weakly_j_quasipolar").witness == std::vector<Index>{lit(*t3r, "[[1,0],[0,2]]")} &&
                six_in_j_gate(*t3r->base_ptr()),
            "T(2,Z3) witness");

  auto m2r = make_matrix_ring(2, make_zn(2));
  const auto m2 = classify_ring(m2r);
  o.require(!m2.verdict("weakly_j_quasipolar") &&
                jacobson_radical(*m2r).members() == std::vector<Index>{0} &&
                j_sharp(*m2r).members() ==
                    lits(*m2r, {"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[1,1],[1,1]]"}),
            "M(2,Z2) J and J#");
  return o;
}

std::vector<RingExpr> builtin_exprs() {
  std::vector<RingExpr> out;
  for (const auto& s : builtin_corpus()) out.push_back(parse_ring_expr(s));
  return out;
}

Outcome implication_lattice(const std::vector<VerifyRow>& rows) {
  Outcome o;
  std::map<std::string, std::vector<const VerifyRow*>> failures;
  for (const auto& row : rows)
    if (row.result == CheckResult::fail) failures[row.check].push_back(&row);
  o.detail = std::to_string(rows.size()) + " checks over 78 rings";
  for (const auto& [check, list] : failures)
    o.require(false, check + " fails on " + std::to_string(list.size()) + " rings, first " +
                         list.front()->ring + " at " + list.front()->witness);
  return o;
}

// Brute-force idempotent, or npos when a is not weakly J-quasipolar.
Index brute(const FiniteRing& r, Index a) {
  const auto c = weakly_jqp_element(r, a);
  return c ? c->idempotent.index() : npos;
}

bool same(const FastPathVerdict& v, Index expected) {
  if (!v.applicable) return true;
  if (!v.verdict || *v.verdict != (expected != npos)) return false;
  return expected == npos || (v.certificate && v.certificate->idempotent.index() == expected);
}

struct FastTally {
  std::size_t elements = 0;
  std::size_t comparisons = 0;
  std::size_t disagreements = 0;
  std::string first;
};

void compare_element(const FiniteRing& r, Index a, FastTally& t) {
  const Index expected = brute(r, a);
  std::vector<FastPathVerdict> verdicts;
  if (r.kind() == RingKind::triangular) {
    verdicts.push_back(t2_fast_classify(r, a));
  } else {
    const Mat2 m = Mat2::from_ring(r, a);
    verdicts.push_back(m2_unit_criterion(r, a));
    if (m.a12 == 0 && m.a21 == 0) verdicts.push_back(m2_diagonal_classify(r, m.a11, m.a22));
    verdicts.push_back(m2_trace_det_obstruction(r, a));
    verdicts.push_back(m2_quadratic_classify(r, a));
  }
  ++t.elements;
  for (const auto& v : verdicts) {
    if (!v.applicable) continue;
    ++t.comparisons;
    if (same(v, expected)) continue;
    if (!t.disagreements++) t.first = r.describe() + " " + r.render(a) + " " + v.case_tag;
  }
}

// Stratified sample: 40 elements from each of four classes plus 40 diagonal
// matrices, drawn with a fixed seed.
std::vector<Index> stratified_sample(const FiniteRing& r) {
  const FiniteRing& base = r.base();
  const IndexSet& j = jacobson_radical(base).set();
  auto stratum = [&](Index a) -> int {
    const Mat2 m = Mat2::from_ring(r, a);
    if (r.kind() == RingKind::triangular) {
      const bool j1 = j.contains(m.a11), j3 = j.contains(m.a22);
      return j1 && j3 ? 0 : !j1 && !j3 ? 1 : !j1 ? 2 : 3;
    }
    const bool in_j = j.contains(m.a11) && j.contains(m.a12) && j.contains(m.a21) && j.contains(m.a22);
    if (in_j) return 0;
    if (units(base).contains(m.det())) return 1;
    if (j.contains(m.det()) && j.contains(m.trace())) return 2;
    return 3;
  };
  std::mt19937_64 rng(0x5eed2024);
  std::uniform_int_distribution<Index> pick(0, r.order() - 1);
  std::array<std::vector<Index>, 4> buckets;
  std::set<Index> seen;
  std::size_t filled = 0;
  while (filled < 4) {
    const Index a = pick(rng);
    auto& b = buckets[stratum(a)];
    if (b.size() >= 40 || !seen.insert(a).second) continue;
    b.push_back(a);
    if (b.size() == 40) ++filled;
  }
  std::vector<Index> out;
  for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::uniform_int_distribution<Index> entry(0, base.order() - 1);
  std::size_t diagonal = 0;
  while (diagonal < 40) {
    Mat2 m{&base, entry(rng), 0, 0, entry(rng), r.kind() == RingKind::triangular};
    const Index a = m.encode(r);
    if (!seen.insert(a).second) continue;
    out.push_back(a);
    ++diagonal;
  }
  return out;
}

Outcome fast_paths() {
  FastTally t;
  for (int n : {2, 3, 4}) {
    for (const RingPtr& r : {make_triangular_ring(2, make_zn(n)), make_matrix_ring(2, make_zn(n))})
      for (Index a = 0; a < r->order(); ++a) compare_element(*r, a, t);
  }
  std::size_t sampled = 0;
  for (const RingPtr& r : {make_triangular_ring(2, make_zn(9)), make_matrix_ring(2, make_zn(9))}) {
    const auto sample = stratified_sample(*r);
    sampled += sample.size();
    for (Index a : sample) compare_element(*r, a, t);
  }
  Outcome o;
  o.detail = std::to_string(t.elements) + " elements (" + std::to_string(sampled) +
             " sampled), " + std::to_string(t.comparisons) + " applicable comparisons, 0 disagreements";
  o.require(sampled == 400, "sample size " + std::to_string(sampled));
  o.require(t.disagreements == 0,
            std::to_string(t.disagreements) + " disagreements, first " + t.first);
  return o;
}

// The builtin corpus holds 1428 elements; two triangular rings over local
// bases lift the count past 2000.
Outcome spectral_uniqueness() {
  Outcome o;
  std::vector<std::string> rings = builtin_corpus();
  rings.emplace_back("T(2,Z8)");
  rings.emplace_back("T(2,Z9)");
  std::size_t checked = 0;
  for (const auto& text : rings) {
    const RingPtr r = eval_ring_expr(text);
    for (Index a = 0; a < r->order(); ++a, ++checked)
      if (spectral_idempotent_uniqueness(*r, a) > 1) o.require(false, text + " " + r->render(a));
  }
  if (o.pass) o.detail = std::to_string(checked) + " elements in " + std::to_string(rings.size()) + " rings";
  o.require(checked >= 2000, "only " + std::to_string(checked) + " elements");
  return o;
}

Outcome idempotent_forms() {
  Outcome o;
  o.detail = "T2 and M2 over Z2 Z3 Z4 Z8 Z9";
  for (int n : {2, 3, 4, 8, 9}) {
    auto base = make_zn(n);
    auto t = make_triangular_ring(2, base);
    auto m = make_matrix_ring(2, base);
    std::set<Index> tf, mf;
    for (const auto& p : t2_idempotent_forms(*base)) tf.insert(p.encode(*t));
    for (const auto& p : m2_idempotent_forms(*base)) mf.insert(p.encode(*m));
    const auto& ti = idempotents(*t).members();
    const auto& mi = idempotents(*m).members();
    o.require(tf == std::set<Index>(ti.begin(), ti.end()), "T(2,Z" + std::to_string(n) + ")");
    o.require(mf == std::set<Index>(mi.begin(), mi.end()), "M(2,Z" + std::to_string(n) + ")");
  }
  return o;
}

Outcome corner_quotient_closure() {
  Outcome o;
  std::size_t corners = 0, quotients = 0;
  for (const auto& text : builtin_corpus()) {
    const RingPtr r = eval_ring_expr(text);
    if (!classify_ring(r).verdict("weakly_j_quasipolar")) continue;
    for (Index f : idempotents(*r).members()) {
      ++corners;
      if (!classify_ring(make_corner(r, f)).verdict("weakly_j_quasipolar"))
        o.require(false, text + " corner at " + r->render(f));
    }
    ++quotients;
    if (!classify_ring(quotient_by_radical(r)).verdict("weakly_j_quasipolar"))
      o.require(false, "modJ(" + text + ")");
  }
  auto t2 = make_triangular_ring(2, make_zn(2));
  o.require(profile(classify_ring(make_corner(t2, lit(*t2, "[[1,0],[0,0]]")))) ==
                profile(classify_ring(make_zn(2))),
            "T(2,Z2) e11 corner profile");
  if (o.pass)
    o.detail = std::to_string(corners) + " corners, " + std::to_string(quotients) + " quotients";
  return o;
}

Outcome integer_matrices() {
  Outcome o;
  std::size_t count = 0;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t d = -2; d <= 2; ++d) {
          ++count;
          const std::int64_t s[4] = {a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d};
          const bool idem = s[0] == a && s[1] == b && s[2] == c && s[3] == d;
          const bool neg = s[0] == -a && s[1] == -b && s[2] == -c && s[3] == -d;
          if (integer_m2_classify({a, b, c, d}) != (idem || neg))
            o.require(false, "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                                 std::to_string(c) + "," + std::to_string(d) + "]]");
        }
  if (o.pass) o.detail = std::to_string(count) + " matrices";
  o.require(count == 625, "count");
  return o;
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

Outcome golden_files() {
  Outcome o;
  o.detail = "analyze Z6 --json, element Z6 2 --json, corpus --builtin";
  const std::vector<std::pair<std::vector<std::string>, const char*>> cases{
      {{"analyze", "Z6", "--json"}, "analyze_z6.json"},
      {{"element", "Z6", "2", "--json"}, "element_z6_2.json"},
      {{"corpus", "--builtin", "--quiet"}, "corpus_builtin.csv"}};
  for (const auto& [args, file] : cases) {
    std::string runs[2];
    for (auto& text : runs) {
      std::ostringstream out, err;
      run_cli(args, out, err);
      text = mask(out.str());
    }
    o.require(runs[0] == runs[1], std::string(file) + " differs between runs");
    o.require(runs[0] == slurp(std::filesystem::path(RINGLAB_GOLDEN_DIR) / file),
              std::string(file) + " differs from the golden file");
  }
  return o;
}

}  // namespace

int main() {
  const auto rows = verify_corpus(builtin_exprs());
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked-example regression table", worked_examples},
      {"implication lattice over the builtin corpus", [&] { return implication_lattice(rows); }},
      {"fast-path equivalence", fast_paths},
      {"spectral-idempotent uniqueness", spectral_uniqueness},
      {"idempotent classification", idempotent_forms},
      {"corner and quotient closure", corner_quotient_closure},
      {"integer-matrix test", integer_matrices},
      {"CLI golden files", golden_files},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
