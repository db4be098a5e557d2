#pragma once

// Corpus verifier: runs the theorem checks over a list of rings and
// collects one PASS/FAIL/SKIPPED row per (ring, check).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iterator>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "ringlab/dsl.hpp"
#include "ringlab/polarity.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

enum class CheckResult { pass, fail, skipped };

inline std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::pass: return "PASS";
    case CheckResult::fail: return "FAIL";
    case CheckResult::skipped: return "SKIPPED";
  }
  return "?";
}

struct VerifyRow {
  std::string ring;
  std::uint64_t order = 0;
  std::string check;
  CheckResult result = CheckResult::pass;
  std::string witness;  // element literals joined by ';'
  std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
  Limits limits;
  std::vector<std::string> checks;  // empty selects every check
  unsigned workers = 0;             // 0 selects hardware concurrency
};

/// Rings of the built-in corpus, in DSL syntax.
inline std::vector<std::string> builtin_corpus() {
  std::vector<std::string> base;
  for (int n = 2; n <= 30; ++n) base.push_back("Z" + std::to_string(n));
  for (const char* s : {"Z2 x Z2", "Z2 x Z3", "Z2 x Z4", "Z3 x Z3", "T(2,Z2)", "T(2,Z3)",
                        "T(2,Z4)", "M(2,Z2)", "M(2,Z3)", "M(2,Z4)"})
    base.emplace_back(s);
  std::vector<std::string> out = base;
  for (const auto& s : base) out.push_back("modJ(" + s + ")");
  return out;
}

namespace detail {

struct CheckOutcome {
  bool pass = true;
  std::string witness;
};

inline std::string join_literals(const FiniteRing& r, const std::vector<Index>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ";";
    out += r.render(xs[i]);
  }
  return out;
}

inline CheckOutcome fail_at(const FiniteRing& r, std::vector<Index> xs) {
  return {false, join_literals(r, xs)};
}

/// Per-ring data shared by all checks.
class RingContext {
 public:
  RingContext(RingPtr ring, const Limits& limits)
      : ring_(std::move(ring)), limits_(limits), report_(classify_ring(ring_, limits)) {}

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ptr() const { return ring_; }
  const PropertyReport& report() const { return report_; }
  const Limits& limits() const { return limits_; }
  bool weakly() const { return report_.verdict("weakly_j_quasipolar"); }

  const std::optional<PolarityCertificate>& weak_cert(Index a) const {
    return weak_.get([&] {
      std::vector<std::optional<PolarityCertificate>> out;
      for (Index x = 0; x < ring_->order(); ++x) out.push_back(weakly_jqp_element(*ring_, x));
      return out;
    })[a];
  }

  const RingPtr& mod_j() const {
    return mod_j_.get([&] { return quotient_by_radical(ring_); });
  }

 private:
  RingPtr ring_;
  Limits limits_;
  PropertyReport report_;
  Lazy<std::vector<std::optional<PolarityCertificate>>> weak_;
  Lazy<RingPtr> mod_j_;
};

// -- generic checks ---------------------------------------------------------

inline CheckOutcome check_ring_axioms(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  auto triple = [&](Index a, Index b, Index c) -> bool {
    return r.add(r.add(a, b), c) == r.add(a, r.add(b, c)) &&
           r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)) &&
           r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)) &&
           r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
  };
  for (Index a = 0; a < r.order(); ++a) {
    if (r.add(a, r.zero()) != a || r.add(a, r.neg(a)) != r.zero() || r.mul(r.one(), a) != a ||
        r.mul(a, r.one()) != a)
      return fail_at(r, {a});
    for (Index b = 0; b < r.order() && r.order() <= FiniteRing::kTableOrder; ++b)
      if (r.add(a, b) != r.add(b, a)) return fail_at(r, {a, b});
  }
  if (r.order() > 1 && r.zero() == r.one()) return fail_at(r, {r.one()});
  if (r.order() <= FiniteRing::kTableOrder) {
    for (Index a = 0; a < r.order(); ++a)
      for (Index b = 0; b < r.order(); ++b)
        for (Index c = 0; c < r.order(); ++c)
          if (!triple(a, b, c)) return fail_at(r, {a, b, c});
    return {};
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<Index> pick(0, r.order() - 1);
  for (int i = 0; i < 1000; ++i) {
    const Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (r.add(a, b) != r.add(b, a) || !triple(a, b, c)) return fail_at(r, {a, b, c});
  }
  return {};
}

inline CheckOutcome check_structure_inclusions(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const auto u = units(r);
  const auto j = jacobson_radical(r);
  const auto js = j_sharp(r);
  const auto qn = qnil_set(r);
  const auto idem = idempotents(r);
  if (!j.contains(r.zero()) || !u.contains(r.one()) || !idem.contains(r.zero()) ||
      !idem.contains(r.one()))
    return fail_at(r, {r.zero()});
  for (Index x : j.members()) {
    if (!js.contains(x) || !qn.contains(x)) return fail_at(r, {x});
    if (r.order() > 1 && u.contains(x)) return fail_at(r, {x});
    if (!u.contains(r.sub(r.one(), x))) return fail_at(r, {x});
  }
  if (!is_two_sided_ideal(r, j.set())) return {false, ""};
  for (Index a : u.members())
    for (Index b : u.members())
      if (!u.contains(r.mul(a, b))) return fail_at(r, {a, b});
  if (ctx.report().verdict("local") && idem.size() > 2) return fail_at(r, {idem.members()[2]});
  return {};
}

inline CheckOutcome check_double_commutant(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a) {
    const auto comm = commutant(r, a);
    const auto comm2 = double_commutant(r, a);
    if (!std::binary_search(comm2.begin(), comm2.end(), a)) return fail_at(r, {a});
    if (!std::includes(comm.begin(), comm.end(), comm2.begin(), comm2.end())) return fail_at(r, {a});
    for (Index b : comm2)
      for (Index c : comm)
        if (r.mul(b, c) != r.mul(c, b)) return fail_at(r, {a, b, c});
  }
  return {};
}

// jqp => weakly => quasipolar per element, certificates valid, the
// quasipolar spectral idempotent is 1 - p, radical elements take p = 0.
inline CheckOutcome check_element_hierarchy(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const auto& j = jacobson_radical(r);
  for (Index a = 0; a < r.order(); ++a) {
    const auto& weak = ctx.weak_cert(a);
    const auto jqp = jqp_element(r, a);
    if (jqp && (!weak || !validate_certificate(r, *jqp))) return fail_at(r, {a});
    if (j.contains(a) && (!jqp || jqp->idempotent.index() != r.zero())) return fail_at(r, {a});
    if (!weak) continue;
    if (!validate_certificate(r, *weak)) return fail_at(r, {a});
    const auto qp = quasipolar_element(r, a);
    if (!qp || !validate_certificate(r, *qp)) return fail_at(r, {a});
    if (qp->idempotent.index() != r.sub(r.one(), weak->idempotent.index())) return fail_at(r, {a});
  }
  return {};
}

inline CheckOutcome check_negation_closure(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a)
    if (ctx.weak_cert(a).has_value() != ctx.weak_cert(r.neg(a)).has_value()) return fail_at(r, {a});
  return {};
}

inline CheckOutcome check_unit_spectral_idempotent(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index u : units(r).members()) {
    const auto& c = ctx.weak_cert(u);
    if (c && c->idempotent.index() != r.one()) return fail_at(r, {u});
  }
  return {};
}

inline CheckOutcome check_annihilator_inclusion(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a) {
    const auto& c = ctx.weak_cert(a);
    if (!c) continue;
    const Index p = c->idempotent.index();
    for (Index t = 0; t < r.order(); ++t) {
      if (r.mul(t, a) == r.zero() && r.mul(t, p) != r.zero()) return fail_at(r, {a, t});
      if (r.mul(a, t) == r.zero() && r.mul(p, t) != r.zero()) return fail_at(r, {a, t});
    }
  }
  return {};
}

inline CheckOutcome check_spectral_uniqueness(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a)
    if (spectral_idempotent_uniqueness(r, a) > 1) return fail_at(r, {a});
  return {};
}

inline CheckOutcome check_conjugation_invariance(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a) {
    const auto& c = ctx.weak_cert(a);
    if (!c) continue;
    for (Index u : units(r).members()) {
      const auto moved = conjugate_certificate(r, *c, Element(r, u));
      if (!ctx.weak_cert(moved.element.index())) return fail_at(r, {a, u});
    }
  }
  return {};
}

inline CheckOutcome check_report_lattice(const RingContext& ctx) {
  const PropertyReport& rep = ctx.report();
  static constexpr std::pair<std::string_view, std::string_view> kEdges[] = {
      {"j_quasipolar", "weakly_j_quasipolar"}, {"weakly_j_quasipolar", "quasipolar"},
      {"quasipolar", "strongly_clean"},        {"strongly_clean", "clean"},
      {"uniquely_clean", "clean"},             {"boolean", "abelian"},
  };
  for (const auto& [from, to] : kEdges)
    if (rep.verdict(from) && !rep.verdict(to))
      return {false, join_literals(ctx.ring(), rep.at(to).witness)};
  return {};
}

inline CheckOutcome check_five_shift(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  if (!six_in_j_gate(r)) return {};
  const Index five = r.integer(5);
  for (Index a = 0; a < r.order(); ++a) {
    if (!ctx.weak_cert(a)) continue;
    if (!ctx.weak_cert(r.add(a, five)) && !ctx.weak_cert(r.sub(a, five))) return fail_at(r, {a});
  }
  return {};
}

inline CheckOutcome check_boolean_certificates(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  if (!ctx.report().verdict("boolean")) return {};
  for (Index a = 0; a < r.order(); ++a) {
    const auto cert = make_certificate(r, a, PolarityClass::weakly_j_quasipolar, a, -1);
    if (!validate_certificate(r, cert) || !ctx.weak_cert(a)) return fail_at(r, {a});
  }
  return {};
}

// -- ring-level consequences of weak J-quasipolarity ------------------------

inline CheckOutcome implied(const RingContext& ctx, std::string_view property) {
  if (!ctx.weakly() || ctx.report().verdict(property)) return {};
  return {false, join_literals(ctx.ring(), ctx.report().at(property).witness)};
}

inline CheckOutcome check_weakly_rj_periodic(const RingContext& ctx) {
  auto c = implied(ctx, "rj_commutative");
  return c.pass ? implied(ctx, "rj_cubed_identity") : c;
}

inline CheckOutcome check_weakly_modj(const RingContext& ctx) {
  if (!ctx.weakly()) return {};
  const auto rep = classify_ring(ctx.mod_j(), ctx.limits());
  if (rep.verdict("weakly_j_quasipolar")) return {};
  return {false, join_literals(*ctx.mod_j(), rep.at("weakly_j_quasipolar").witness)};
}

inline CheckOutcome check_weakly_two_in_j(const RingContext& ctx) {
  const auto& rep = ctx.report();
  if (!ctx.weakly() || rep.verdict("two_in_j") == rep.verdict("j_quasipolar")) return {};
  return fail_at(ctx.ring(), {ctx.ring().integer(2)});
}

inline CheckOutcome check_uniquely_clean_abelian(const RingContext& ctx) {
  const auto& rep = ctx.report();
  if (!rep.verdict("uniquely_clean") || (rep.verdict("abelian") && ctx.weakly())) return {};
  return {false, join_literals(ctx.ring(), rep.verdict("abelian")
                                               ? rep.at("weakly_j_quasipolar").witness
                                               : rep.at("abelian").witness)};
}

inline CheckOutcome check_weakly_abelian(const RingContext& ctx) {
  const auto& rep = ctx.report();
  if (!ctx.weakly() || !rep.verdict("abelian") || rep.verdict("uniquely_clean")) return {};
  return {false, join_literals(ctx.ring(), rep.at("uniquely_clean").witness)};
}

inline CheckOutcome check_weakly_local(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  if (!ctx.weakly()) return {};
  const auto idem = idempotents(r).members();
  const bool trivial = idem.size() <= 2;
  if (ctx.report().verdict("local") == trivial) return {};
  return fail_at(r, {idem.back()});
}

inline CheckOutcome check_weakly_corners(const RingContext& ctx) {
  if (!ctx.weakly()) return {};
  const FiniteRing& r = ctx.ring();
  for (Index f : idempotents(r).members()) {
    const auto corner = make_corner(ctx.ptr(), f);
    if (!classify_ring(corner, ctx.limits()).verdict("weakly_j_quasipolar")) return fail_at(r, {f});
  }
  return {};
}

// -- matrix-ring checks -----------------------------------------------------

inline bool is_full_matrix(const FiniteRing& r) {
  return r.kind() == RingKind::matrix && r.dim() >= 2 && r.base().order() > 1;
}
inline bool is_triangular(const FiniteRing& r) {
  return r.kind() == RingKind::triangular && r.dim() >= 2;
}
inline bool is_t2_local(const FiniteRing& r) {
  return r.kind() == RingKind::triangular && r.dim() == 2 && require_commutative_local(r.base());
}
inline bool is_m2_local(const FiniteRing& r) {
  return r.kind() == RingKind::matrix && r.dim() == 2 && require_commutative_local(r.base());
}

inline CheckOutcome check_matrix_not_weakly(const RingContext& ctx) {
  if (!ctx.weakly()) return {};
  return {false, ""};
}

// Weakly T_n(R) forces weakly R. When R is weakly but T_n(R) is not, the
// witness records the counterexample to the converse.
inline CheckOutcome check_tn_corner(const RingContext& ctx) {
  const bool base_weakly =
      classify_ring(ctx.ring().base_ptr(), ctx.limits()).verdict("weakly_j_quasipolar");
  if (ctx.weakly() && !base_weakly) return {false, ""};
  if (!ctx.weakly() && base_weakly)
    return {true, join_literals(ctx.ring(), ctx.report().at("weakly_j_quasipolar").witness)};
  return {};
}

// Fast verdict must match brute force; a positive fast verdict must name the
// same idempotent as the brute-force certificate.
inline bool agrees(const RingContext& ctx, Index a, const FastPathVerdict& v) {
  if (!v.applicable) return true;
  const auto& brute = ctx.weak_cert(a);
  if (!v.verdict || *v.verdict != brute.has_value()) return false;
  if (!brute) return true;
  return v.certificate && v.certificate->idempotent.index() == brute->idempotent.index();
}

inline CheckOutcome check_t2_fast_path(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  for (Index a = 0; a < r.order(); ++a)
    if (!agrees(ctx, a, t2_fast_classify(r, a))) return fail_at(r, {a});
  return {};
}

inline CheckOutcome check_m2_fast_paths(const RingContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const FiniteRing& base = r.base();
  const bool gate = six_in_j_gate(base);
  for (Index a = 0; a < r.order(); ++a) {
    if (!agrees(ctx, a, m2_unit_criterion(r, a))) return fail_at(r, {a});
    const Mat2 m = Mat2::from_ring(r, a);
    if (m.a12 == base.zero() && m.a21 == base.zero() &&
        !agrees(ctx, a, m2_diagonal_classify(r, m.a11, m.a22)))
      return fail_at(r, {a});
    if (!gate) continue;
    const auto quad = m2_quadratic_classify(r, a);
    if (!agrees(ctx, a, quad)) return fail_at(r, {a});
    const auto obstruction = m2_trace_det_obstruction(r, a);
    if (obstruction.applicable && (*quad.verdict || ctx.weak_cert(a))) return fail_at(r, {a});
  }
  return {};
}

inline std::set<Index> encode_all(const FiniteRing& r, const std::vector<Mat2>& forms) {
  std::set<Index> out;
  for (const auto& m : forms) out.insert(m.encode(r));
  return out;
}

inline CheckOutcome compare_forms(const FiniteRing& r, const std::set<Index>& forms) {
  const auto& brute = idempotents(r).members();
  const std::set<Index> expected(brute.begin(), brute.end());
  if (forms == expected) return {};
  std::vector<Index> diff;
  std::set_symmetric_difference(forms.begin(), forms.end(), expected.begin(), expected.end(),
                                std::back_inserter(diff));
  return fail_at(r, {diff.front()});
}

inline CheckOutcome check_t2_forms(const RingContext& ctx) {
  return compare_forms(ctx.ring(), encode_all(ctx.ring(), t2_idempotent_forms(ctx.ring().base())));
}

inline CheckOutcome check_m2_forms(const RingContext& ctx) {
  return compare_forms(ctx.ring(), encode_all(ctx.ring(), m2_idempotent_forms(ctx.ring().base())));
}

struct CheckEntry {
  std::string_view name;
  bool (*applies)(const FiniteRing&);
  CheckOutcome (*run)(const RingContext&);
};

inline bool always(const FiniteRing&) { return true; }

inline const std::vector<CheckEntry>& check_table() {
  static const std::vector<CheckEntry> table = {
      {"annihilator_inclusion", always, check_annihilator_inclusion},
      {"boolean_certificates", always, check_boolean_certificates},
      {"conjugation_invariance", always, check_conjugation_invariance},
      {"double_commutant", always, check_double_commutant},
      {"element_hierarchy", always, check_element_hierarchy},
      {"five_shift", always, check_five_shift},
      {"m2_fast_paths", is_m2_local, check_m2_fast_paths},
      {"m2_idempotent_forms", is_m2_local, check_m2_forms},
      {"matrix_not_weakly", is_full_matrix, check_matrix_not_weakly},
      {"negation_closure", always, check_negation_closure},
      {"report_lattice", always, check_report_lattice},
      {"ring_axioms", always, check_ring_axioms},
      {"spectral_uniqueness", always, check_spectral_uniqueness},
      {"structure_inclusions", always, check_structure_inclusions},
      {"t2_fast_path", is_t2_local, check_t2_fast_path},
      {"t2_idempotent_forms", is_t2_local, check_t2_forms},
      {"tn_corner_corollary", is_triangular, check_tn_corner},
      {"uniquely_clean_implies_abelian_weakly", always, check_uniquely_clean_abelian},
      {"unit_spectral_idempotent", always, check_unit_spectral_idempotent},
      {"weakly_abelian_implies_uniquely_clean", always, check_weakly_abelian},
      {"weakly_corners_weakly", always, check_weakly_corners},
      {"weakly_directly_finite",
       always, [](const RingContext& c) { return implied(c, "directly_finite"); }},
      {"weakly_feckly_reduced",
       always, [](const RingContext& c) { return implied(c, "feckly_reduced"); }},
      {"weakly_j_equals_j_sharp",
       always, [](const RingContext& c) { return implied(c, "j_equals_j_sharp"); }},
      {"weakly_local_iff_trivial_idempotents", always, check_weakly_local},
      {"weakly_modj_weakly", always, check_weakly_modj},
      {"weakly_rj_periodic", always, check_weakly_rj_periodic},
      {"weakly_six_in_j", always, [](const RingContext& c) { return implied(c, "six_in_j"); }},
      {"weakly_two_in_j_iff_jqp", always, check_weakly_two_in_j},
  };
  return table;
}

inline std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

inline bool selected(const VerifyOptions& opt, std::string_view name) {
  return opt.checks.empty() ||
         std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
}

inline std::vector<VerifyRow> verify_ring(const RingExpr& expr, const VerifyOptions& opt) {
  const std::string name = render(expr);
  RingPtr ring;
  try {
    ring = eval_ring_expr(expr, opt.limits);
    if (ring->order() > opt.limits.max_classify_order)
      throw CapExceeded(name, ring->order(), opt.limits.max_classify_order);
  } catch (const CapExceeded& cap) {
    return {{name, cap.required(), "all", CheckResult::skipped, "", 0}};
  }
  const auto start = std::chrono::steady_clock::now();
  const RingContext ctx(ring, opt.limits);
  const std::int64_t setup_ms = ms_since(start);

  std::vector<VerifyRow> rows;
  for (const auto& entry : check_table()) {
    if (!selected(opt, entry.name) || !entry.applies(*ring)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    VerifyRow row{name, ring->order(), std::string(entry.name), CheckResult::pass, "", 0};
    try {
      const CheckOutcome out = entry.run(ctx);
      row.result = out.pass ? CheckResult::pass : CheckResult::fail;
      row.witness = out.witness;
    } catch (const CapExceeded&) {
      row.result = CheckResult::skipped;
    } catch (const Error& e) {
      row.result = CheckResult::fail;
      row.witness = e.what();
    }
    row.elapsed_ms = ms_since(t0) + (rows.empty() ? setup_ms : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Names of every check, in emission order.
inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::check_table()) out.emplace_back(entry.name);
  return out;
}

/// Runs the checks over the corpus. Rows are sorted by (ring, check).
inline std::vector<VerifyRow> verify_corpus(const std::vector<RingExpr>& corpus,
                                            const VerifyOptions& opt = {}) {
  for (const auto& c : opt.checks)
    if (std::find_if(detail::check_table().begin(), detail::check_table().end(),
                     [&](const auto& s) { return s.name == c; }) == detail::check_table().end())
      throw InvalidParameter("unknown check " + c);

  std::vector<std::vector<VerifyRow>> per_ring(corpus.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        per_ring[i] = detail::verify_ring(corpus[i], opt);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned workers = opt.workers ? opt.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = unsigned(std::min<std::size_t>(workers, std::max<std::size_t>(1, corpus.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<VerifyRow> rows;
  for (auto& group : per_ring)
    for (auto& row : group) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
    return std::tie(a.ring, a.check) < std::tie(b.ring, b.check);
  });
  return rows;
}

inline bool any_failed(const std::vector<VerifyRow>& rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](const VerifyRow& r) { return r.result == CheckResult::fail; });
}

}  // namespace ringlab
