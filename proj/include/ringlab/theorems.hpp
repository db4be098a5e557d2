#pragma once

// Closed-form criteria for weak J-quasipolarity of 2x2 matrices over
// commutative local rings, and the integer-matrix test.
//
// Every fast path decides from base-ring data only (entries, trace,
// determinant, J(R), U(R)). A positive verdict carries a certificate built
// from the closed form; it is validated in the matrix ring before being
// returned and a failed validation throws InternalError.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/polarity.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

/// A 2x2 matrix over a base ring, entries as base indices.
struct Mat2 {
  const FiniteRing* base = nullptr;
  Index a11 = 0, a12 = 0, a21 = 0, a22 = 0;
  bool triangular = false;

  Index trace() const { return base->add(a11, a22); }
  Index det() const { return base->sub(base->mul(a11, a22), base->mul(a12, a21)); }

  /// Decodes an element of M2(R) or T2(R).
  static Mat2 from_ring(const FiniteRing& m2, Index x) {
    if (!m2.is_matrix_kind() || m2.dim() != 2)
      throw InvalidParameter("expected a 2x2 matrix ring, got " + m2.describe());
    const auto e = m2.to_matrix(x);
    return {&m2.base(), e[0], e[1], e[2], e[3], m2.kind() == RingKind::triangular};
  }

  Index encode(const FiniteRing& m2) const {
    if (!m2.is_matrix_kind() || m2.dim() != 2 || &m2.base() != base)
      throw InvalidParameter("matrix does not belong to " + m2.describe());
    const std::array<Index, 4> e{a11, a12, a21, a22};
    return m2.from_matrix(e);
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.base == y.base && x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 &&
           x.a22 == y.a22;
  }
};

struct FastPathVerdict {
  bool applicable = false;
  std::optional<bool> verdict;
  std::string case_tag;
  std::optional<PolarityCertificate> certificate;
};

/// R is commutative and local.
inline bool require_commutative_local(const FiniteRing& r) {
  return detail::check_commutative(r).value && detail::check_local(r).value;
}

/// 6 * 1 lies in J(R). Necessary for weak J-quasipolarity of R.
inline bool six_in_j_gate(const FiniteRing& r) {
  return jacobson_radical(r).contains(r.integer(6));
}

namespace detail {

inline void require_matrix2(const FiniteRing& m, RingKind kind, const char* what) {
  if (m.kind() != kind || m.dim() != 2)
    throw InvalidParameter(std::string(what) + " requires a " +
                           (kind == RingKind::triangular ? "T(2,R)" : "M(2,R)") + " ring, got " +
                           m.describe());
}

// Membership of v in eps + J(R), eps = +1 or -1.
inline bool in_shifted_radical(const FiniteRing& r, Index v, int eps) {
  const Index e = eps > 0 ? r.one() : r.neg(r.one());
  return jacobson_radical(r).contains(r.sub(v, e));
}

inline bool matrix_in_radical(const Mat2& m) {
  const IndexSet& j = jacobson_radical(*m.base).set();
  return j.contains(m.a11) && j.contains(m.a12) && j.contains(m.a21) && j.contains(m.a22);
}

inline Mat2 shift_identity(const Mat2& m, int eps) {
  const FiniteRing& r = *m.base;
  const Index e = eps > 0 ? r.one() : r.neg(r.one());
  Mat2 out = m;
  out.a11 = r.add(m.a11, e);
  out.a22 = r.add(m.a22, e);
  return out;
}

inline FastPathVerdict not_applicable(std::string tag) {
  return {false, std::nullopt, std::move(tag), std::nullopt};
}

inline FastPathVerdict negative(std::string tag) {
  return {true, false, std::move(tag), std::nullopt};
}

// Builds the weak certificate for (A, P, sign) in the matrix ring and checks
// it against the definitions there.
inline FastPathVerdict positive(const FiniteRing& ring, Index a, const Mat2& p, int sign,
                                std::string tag) {
  const Index pi = p.encode(ring);
  auto cert = make_certificate(ring, a, PolarityClass::weakly_j_quasipolar, pi, sign);
  const IndexSet& j = jacobson_radical(ring).set();
  cert.both_signs = j.contains(ring.add(a, pi)) && j.contains(ring.sub(a, pi));
  if (auto problem = certificate_problem(ring, cert))
    throw InternalError("fast path " + tag + " built an invalid certificate for " +
                        ring.render(a) + ": " + *problem);
  return {true, true, std::move(tag), std::move(cert)};
}

inline Mat2 scalar_mat(const FiniteRing& base, Index d1, Index d2, bool triangular) {
  return {&base, d1, 0, 0, d2, triangular};
}

}  // namespace detail

// -- idempotent forms -------------------------------------------------------

/// Idempotents of T2(R) over a commutative local R:
/// I, 0, [1 x; 0 0] and [0 x; 0 1] for x in R.
inline std::vector<Mat2> t2_idempotent_forms(const FiniteRing& r) {
  if (!require_commutative_local(r))
    throw NotApplicable("T2 idempotent forms need a commutative local ring, got " + r.describe());
  std::vector<Mat2> out;
  out.push_back(detail::scalar_mat(r, r.one(), r.one(), true));
  out.push_back(detail::scalar_mat(r, 0, 0, true));
  for (Index x = 0; x < r.order(); ++x) out.push_back({&r, r.one(), x, 0, 0, true});
  for (Index x = 0; x < r.order(); ++x) out.push_back({&r, 0, x, 0, r.one(), true});
  return out;
}

/// Idempotents of M2(R) over a commutative local R:
/// 0, I and [a b; c 1-a] with bc = a - a^2.
inline std::vector<Mat2> m2_idempotent_forms(const FiniteRing& r) {
  if (!require_commutative_local(r))
    throw NotApplicable("M2 idempotent forms need a commutative local ring, got " + r.describe());
  std::vector<Mat2> out;
  out.push_back(detail::scalar_mat(r, 0, 0, false));
  out.push_back(detail::scalar_mat(r, r.one(), r.one(), false));
  for (Index a = 0; a < r.order(); ++a) {
    const Index rhs = r.sub(a, r.mul(a, a));
    for (Index b = 0; b < r.order(); ++b)
      for (Index c = 0; c < r.order(); ++c)
        if (r.mul(b, c) == rhs) out.push_back({&r, a, b, c, r.sub(r.one(), a), false});
  }
  return out;
}

// -- fast paths -------------------------------------------------------------

/// Weak J-quasipolarity of A = [a1 a2; 0 a3] in T2(R), R commutative local.
///   case-1  a1, a3 in J            P = 0
///   case-2  a1, a3 units           P = I, needs a1, a3 in the same -+1 + J
///   case-3  a1 unit, a3 in J       P = [1 x; 0 0], x = (a1 - a3)^-1 a2
///   case-4  a1 in J, a3 unit       P = [0 x; 0 1], x = (a3 - a1)^-1 a2
/// In cases 3 and 4 A +- P lies in J exactly when the unit diagonal entry
/// lies in -+1 + J.
inline FastPathVerdict t2_fast_classify(const FiniteRing& t2, Index a) {
  detail::require_matrix2(t2, RingKind::triangular, "t2_fast_classify");
  const FiniteRing& r = t2.base();
  if (!require_commutative_local(r)) return detail::not_applicable("T2-not-local");
  const Mat2 m = Mat2::from_ring(t2, a);
  const IndexSet& j = jacobson_radical(r).set();
  const bool j1 = j.contains(m.a11);
  const bool j3 = j.contains(m.a22);

  if (j1 && j3) return detail::positive(t2, a, detail::scalar_mat(r, 0, 0, true), +1, "T2-case-1");

  if (!j1 && !j3) {
    const Mat2 id = detail::scalar_mat(r, r.one(), r.one(), true);
    for (int sign : {+1, -1})
      if (detail::in_shifted_radical(r, m.a11, -sign) && detail::in_shifted_radical(r, m.a22, -sign))
        return detail::positive(t2, a, id, sign, "T2-case-2");
    return detail::negative("T2-case-2");
  }

  const bool upper_unit = !j1;
  const Index unit_entry = upper_unit ? m.a11 : m.a22;
  const Index diff = upper_unit ? r.sub(m.a11, m.a22) : r.sub(m.a22, m.a11);
  const Index diff_inv = inverse(r, diff);
  if (diff_inv == npos) throw InternalError("unit minus radical element is not a unit");
  const Index x = r.mul(diff_inv, m.a12);
  const Mat2 p = upper_unit ? Mat2{&r, r.one(), x, 0, 0, true} : Mat2{&r, 0, x, 0, r.one(), true};
  const std::string tag = upper_unit ? "T2-case-3" : "T2-case-4";
  for (int sign : {+1, -1})
    if (detail::in_shifted_radical(r, unit_entry, -sign))
      return detail::positive(t2, a, p, sign, tag);
  return detail::negative(tag);
}

/// For a unit A of M2(R): weakly J-quasipolar iff A - I or A + I is in J(M2(R)).
inline FastPathVerdict m2_unit_criterion(const FiniteRing& m2, Index a) {
  detail::require_matrix2(m2, RingKind::matrix, "m2_unit_criterion");
  const FiniteRing& r = m2.base();
  const Mat2 m = Mat2::from_ring(m2, a);
  const bool unit = detail::check_commutative(r).value ? units(r).contains(m.det())
                                                       : units(m2).contains(a);
  if (!unit) return detail::not_applicable("M2-unit");
  const Mat2 id = detail::scalar_mat(r, r.one(), r.one(), false);
  for (int sign : {+1, -1})
    if (detail::matrix_in_radical(detail::shift_identity(m, sign)))
      return detail::positive(m2, a, id, sign, "M2-unit");
  return detail::negative("M2-unit");
}

/// Weak J-quasipolarity of diag(j, u) in M2(R), R commutative local.
/// Clauses are tried in order; the tag names the first that holds.
inline FastPathVerdict m2_diagonal_classify(const FiniteRing& m2, Index j, Index u) {
  detail::require_matrix2(m2, RingKind::matrix, "m2_diagonal_classify");
  const FiniteRing& r = m2.base();
  r.check_index(j);
  r.check_index(u);
  if (!require_commutative_local(r)) return detail::not_applicable("M2-diagonal");
  const Mat2 a_mat = detail::scalar_mat(r, j, u, false);
  const Index a = a_mat.encode(m2);
  const IndexSet& rad = jacobson_radical(r).set();
  auto in_j = [&](Index v) { return rad.contains(v); };
  auto plus_j = [&](Index v) { return detail::in_shifted_radical(r, v, +1); };
  auto minus_j = [&](Index v) { return detail::in_shifted_radical(r, v, -1); };

  const Mat2 zero = detail::scalar_mat(r, 0, 0, false);
  const Mat2 id = detail::scalar_mat(r, r.one(), r.one(), false);
  const Mat2 e11 = detail::scalar_mat(r, r.one(), 0, false);
  const Mat2 e22 = detail::scalar_mat(r, 0, r.one(), false);

  struct Clause {
    bool holds;
    const Mat2* p;
    int sign;
  };
  const std::array<Clause, 7> clauses{{
      {in_j(j) && in_j(u), &zero, +1},
      {minus_j(j) && minus_j(u), &id, +1},
      {plus_j(j) && plus_j(u), &id, -1},
      {minus_j(u) && in_j(j), &e22, +1},
      {in_j(u) && minus_j(j), &e11, +1},
      {in_j(u) && plus_j(j), &e11, -1},
      {plus_j(u) && in_j(j), &e22, -1},
  }};
  for (std::size_t k = 0; k < clauses.size(); ++k)
    if (clauses[k].holds)
      return detail::positive(m2, a, *clauses[k].p, clauses[k].sign,
                              "M2-diagonal-(" + std::to_string(k + 1) + ")");
  return detail::negative("M2-diagonal");
}

/// Over a commutative R with 6 in J(R): A outside J(M2(R)) with trace and
/// determinant in J(R) is not weakly J-quasipolar.
inline FastPathVerdict m2_trace_det_obstruction(const FiniteRing& m2, Index a) {
  detail::require_matrix2(m2, RingKind::matrix, "m2_trace_det_obstruction");
  const FiniteRing& r = m2.base();
  if (!detail::check_commutative(r).value || !six_in_j_gate(r))
    return detail::not_applicable("M2-trace-det");
  const Mat2 m = Mat2::from_ring(m2, a);
  const IndexSet& j = jacobson_radical(r).set();
  if (detail::matrix_in_radical(m) || !j.contains(m.det()) || !j.contains(m.trace()))
    return detail::not_applicable("M2-trace-det");
  return detail::negative("M2-trace-det");
}

/// Over a commutative local R with 6 in J(R), A is weakly J-quasipolar iff
///   (1) A, A - I or A + I lies in J(M2(R)), or
///   (2) x^2 - tr(A) x + det(A) splits as (x - r1)(x - r2) with r1 in J(R)
///       and r2 in -+1 + J(R).
/// In case (2) the certificate idempotent is (A - r1 I)(r2 - r1)^-1.
inline FastPathVerdict m2_quadratic_classify(const FiniteRing& m2, Index a) {
  detail::require_matrix2(m2, RingKind::matrix, "m2_quadratic_classify");
  const FiniteRing& r = m2.base();
  if (!require_commutative_local(r) || !six_in_j_gate(r))
    return detail::not_applicable("M2-quadratic");
  const Mat2 m = Mat2::from_ring(m2, a);
  const Mat2 zero = detail::scalar_mat(r, 0, 0, false);
  const Mat2 id = detail::scalar_mat(r, r.one(), r.one(), false);
  if (detail::matrix_in_radical(m)) return detail::positive(m2, a, zero, +1, "M2-quadratic-(1)");
  for (int sign : {+1, -1})
    if (detail::matrix_in_radical(detail::shift_identity(m, sign)))
      return detail::positive(m2, a, id, sign, "M2-quadratic-(1)");

  const IndexSet& j = jacobson_radical(r).set();
  const Index tr = m.trace();
  const Index det = m.det();
  for (Index r1 : j.members) {
    const Index value = r.add(r.sub(r.mul(r1, r1), r.mul(tr, r1)), det);
    if (value != r.zero()) continue;
    const Index r2 = r.sub(tr, r1);
    if (r.mul(r1, r2) != det || r.add(r1, r2) != tr) continue;
    for (int sign : {+1, -1}) {
      if (!detail::in_shifted_radical(r, r2, -sign)) continue;
      const Index gap_inv = inverse(r, r.sub(r2, r1));
      if (gap_inv == npos) throw InternalError("root gap is not a unit");
      Mat2 p = m;
      p.a11 = r.mul(r.sub(m.a11, r1), gap_inv);
      p.a12 = r.mul(m.a12, gap_inv);
      p.a21 = r.mul(m.a21, gap_inv);
      p.a22 = r.mul(r.sub(m.a22, r1), gap_inv);
      return detail::positive(m2, a, p, sign, "quadratic-root");
    }
  }
  return detail::negative("M2-quadratic");
}

inline FastPathVerdict t2_fast_classify(const FiniteRing& t2, const Mat2& a) {
  return t2_fast_classify(t2, a.encode(t2));
}
inline FastPathVerdict m2_unit_criterion(const FiniteRing& m2, const Mat2& a) {
  return m2_unit_criterion(m2, a.encode(m2));
}
inline FastPathVerdict m2_trace_det_obstruction(const FiniteRing& m2, const Mat2& a) {
  return m2_trace_det_obstruction(m2, a.encode(m2));
}
inline FastPathVerdict m2_quadratic_classify(const FiniteRing& m2, const Mat2& a) {
  return m2_quadratic_classify(m2, a.encode(m2));
}

// -- integer matrices -------------------------------------------------------

using IntMat2 = std::array<std::int64_t, 4>;  // row-major

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("integer matrix product overflows");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("integer matrix sum overflows");
  return out;
}

}  // namespace detail

/// A in M2(Z) is weakly J-quasipolar iff A^2 = A or A^2 = -A (J(M2(Z)) = 0,
/// so A -+ P = 0 for an idempotent P).
inline bool integer_m2_classify(const IntMat2& a) {
  constexpr std::int64_t kBound = std::numeric_limits<std::int32_t>::max();
  for (std::int64_t v : a)
    if (v > kBound || v < -kBound)
      throw ArithmeticOverflow("integer matrix entry exceeds 2^31 - 1 in magnitude");
  using detail::checked_add;
  using detail::checked_mul;
  const IntMat2 sq{
      checked_add(checked_mul(a[0], a[0]), checked_mul(a[1], a[2])),
      checked_add(checked_mul(a[0], a[1]), checked_mul(a[1], a[3])),
      checked_add(checked_mul(a[2], a[0]), checked_mul(a[3], a[2])),
      checked_add(checked_mul(a[2], a[1]), checked_mul(a[3], a[3])),
  };
  bool idem = true;
  bool neg_idem = true;
  for (int i = 0; i < 4; ++i) {
    idem = idem && sq[i] == a[i];
    neg_idem = neg_idem && sq[i] == -a[i];
  }
  return idem || neg_idem;
}

}  // namespace ringlab
