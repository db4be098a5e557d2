#pragma once

// Element- and ring-level decision procedures for the polarity and
// cleanness classes. Every positive answer comes with a certificate that
// validate_certificate() re-checks from the definitions.

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

enum class PolarityClass {
  weakly_j_quasipolar,
  j_quasipolar,
  quasipolar,
  strongly_j_clean,
  strongly_clean,
  clean,
  uniquely_clean,
};

inline std::string_view to_string(PolarityClass c) {
  switch (c) {
    case PolarityClass::weakly_j_quasipolar: return "weakly_j_quasipolar";
    case PolarityClass::j_quasipolar: return "j_quasipolar";
    case PolarityClass::quasipolar: return "quasipolar";
    case PolarityClass::strongly_j_clean: return "strongly_j_clean";
    case PolarityClass::strongly_clean: return "strongly_clean";
    case PolarityClass::clean: return "clean";
    case PolarityClass::uniquely_clean: return "uniquely_clean";
  }
  return "?";
}

enum class CleanVariant { clean, strongly_clean, strongly_j_clean, uniquely_clean };

/// Witness data for membership of `element` in `class_name`.
///
/// In every class `witness == element + sign * idempotent`:
///   weakly / J-quasipolar   witness in J(R), sign +1 or -1 (J-quasipolar: +1)
///   quasipolar              witness a + p in U(R), sign +1
///   strongly J-clean        witness a - e in J(R), sign -1
///   clean family            witness a - e in U(R), sign -1
struct PolarityCertificate {
  Element element;
  PolarityClass class_name;
  Element idempotent;
  int sign;
  Element witness;
  /// Weakly J-quasipolar only: a + p and a - p both lie in J.
  bool both_signs = false;
  /// Uniquely clean only: number of idempotents e with a - e a unit.
  std::optional<std::size_t> count;
};

namespace detail {

inline PolarityCertificate make_certificate(const FiniteRing& r, Index a, PolarityClass c, Index p,
                                            int sign) {
  const Index w = sign > 0 ? r.add(a, p) : r.sub(a, p);
  return {Element(r, a), c, Element(r, p), sign, Element(r, w), false, std::nullopt};
}

inline std::optional<PolarityCertificate> weakly_search(const FiniteRing& r, Index a,
                                                        const std::vector<Index>& comm,
                                                        bool plus_only) {
  const IndexSet& j = jacobson_radical(r).set();
  for (Index p : idempotents(r).members()) {
    const bool plus = j.contains(r.add(a, p));
    const bool minus = !plus_only && j.contains(r.sub(a, p));
    if (!plus && !minus) continue;
    if (!commutes_with_all(r, p, comm)) continue;
    auto cert = make_certificate(r, a,
                                 plus_only ? PolarityClass::j_quasipolar
                                           : PolarityClass::weakly_j_quasipolar,
                                 p, plus ? +1 : -1);
    cert.both_signs = plus && minus;
    return cert;
  }
  return std::nullopt;
}

inline std::size_t weakly_count(const FiniteRing& r, Index a, const std::vector<Index>& comm) {
  const IndexSet& j = jacobson_radical(r).set();
  std::size_t n = 0;
  for (Index p : idempotents(r).members())
    if ((j.contains(r.add(a, p)) || j.contains(r.sub(a, p))) && commutes_with_all(r, p, comm)) ++n;
  return n;
}

inline std::optional<PolarityCertificate> quasipolar_search(const FiniteRing& r, Index a,
                                                            const std::vector<Index>& comm) {
  const IndexSet& u = units(r).set();
  const IndexSet& qn = qnil_set(r).set();
  for (Index p : idempotents(r).members()) {
    if (!u.contains(r.add(a, p)) || !qn.contains(r.mul(a, p))) continue;
    if (!commutes_with_all(r, p, comm)) continue;
    return make_certificate(r, a, PolarityClass::quasipolar, p, +1);
  }
  return std::nullopt;
}

inline std::size_t clean_count(const FiniteRing& r, Index a) {
  const IndexSet& u = units(r).set();
  std::size_t n = 0;
  for (Index e : idempotents(r).members())
    if (u.contains(r.sub(a, e))) ++n;
  return n;
}

inline std::optional<PolarityCertificate> clean_search(const FiniteRing& r, Index a,
                                                       CleanVariant v) {
  const IndexSet& u = units(r).set();
  const IndexSet& j = jacobson_radical(r).set();
  if (v == CleanVariant::uniquely_clean) {
    std::optional<Index> found;
    std::size_t n = 0;
    for (Index e : idempotents(r).members()) {
      if (!u.contains(r.sub(a, e))) continue;
      if (!found) found = e;
      ++n;
    }
    if (n != 1) return std::nullopt;
    auto cert = make_certificate(r, a, PolarityClass::uniquely_clean, *found, -1);
    cert.count = n;
    return cert;
  }
  for (Index e : idempotents(r).members()) {
    const Index diff = r.sub(a, e);
    switch (v) {
      case CleanVariant::clean:
        if (u.contains(diff)) return make_certificate(r, a, PolarityClass::clean, e, -1);
        break;
      case CleanVariant::strongly_clean:
        if (u.contains(diff) && r.mul(a, e) == r.mul(e, a))
          return make_certificate(r, a, PolarityClass::strongly_clean, e, -1);
        break;
      case CleanVariant::strongly_j_clean:
        if (j.contains(diff) && r.mul(a, e) == r.mul(e, a))
          return make_certificate(r, a, PolarityClass::strongly_j_clean, e, -1);
        break;
      case CleanVariant::uniquely_clean: break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First idempotent p in comm^2(a), ascending, with a + p or a - p in J;
/// sign +1 is preferred.
inline std::optional<PolarityCertificate> weakly_jqp_element(const FiniteRing& r, Index a) {
  return detail::weakly_search(r, a, commutant(r, a), false);
}

inline std::optional<PolarityCertificate> jqp_element(const FiniteRing& r, Index a) {
  return detail::weakly_search(r, a, commutant(r, a), true);
}

inline std::optional<PolarityCertificate> quasipolar_element(const FiniteRing& r, Index a) {
  return detail::quasipolar_search(r, a, commutant(r, a));
}

inline std::optional<PolarityCertificate> clean_family_element(const FiniteRing& r, Index a,
                                                               CleanVariant v) {
  r.check_index(a);
  return detail::clean_search(r, a, v);
}

/// Number of uniquely-clean candidate idempotents (a - e a unit).
inline std::size_t uniquely_clean_count(const FiniteRing& r, Index a) {
  r.check_index(a);
  return detail::clean_count(r, a);
}

/// Number of distinct weakly J-spectral idempotents of a. Never above 1.
inline std::size_t spectral_idempotent_uniqueness(const FiniteRing& r, Index a) {
  return detail::weakly_count(r, a, commutant(r, a));
}

inline std::optional<PolarityCertificate> weakly_jqp_element(const Element& a) {
  return weakly_jqp_element(a.ring(), a.index());
}
inline std::optional<PolarityCertificate> jqp_element(const Element& a) {
  return jqp_element(a.ring(), a.index());
}
inline std::optional<PolarityCertificate> quasipolar_element(const Element& a) {
  return quasipolar_element(a.ring(), a.index());
}

// -- validation -------------------------------------------------------------

namespace detail {

// Definitional membership tests over the unit mask only.
inline bool in_radical_by_definition(const FiniteRing& r, Index x) {
  const IndexSet& u = units(r).set();
  for (Index t = 0; t < r.order(); ++t)
    if (!u.contains(r.sub(r.one(), r.mul(t, x)))) return false;
  return true;
}

inline bool in_qnil_by_definition(const FiniteRing& r, Index a) {
  const IndexSet& u = units(r).set();
  for (Index x = 0; x < r.order(); ++x)
    if (r.mul(a, x) == r.mul(x, a) && !u.contains(r.add(r.one(), r.mul(a, x)))) return false;
  return true;
}

inline bool in_double_commutant_by_definition(const FiniteRing& r, Index p, Index a) {
  for (Index c = 0; c < r.order(); ++c)
    if (r.mul(a, c) == r.mul(c, a) && r.mul(p, c) != r.mul(c, p)) return false;
  return true;
}

}  // namespace detail

/// Empty when the certificate is valid, otherwise the first failed condition.
inline std::optional<std::string> certificate_problem(const FiniteRing& r,
                                                      const PolarityCertificate& c) {
  if (&c.element.ring() != &r || &c.idempotent.ring() != &r || &c.witness.ring() != &r)
    return "certificate refers to another ring";
  const Index a = c.element.index();
  const Index p = c.idempotent.index();
  const Index w = c.witness.index();
  if (c.sign != 1 && c.sign != -1) return "sign must be +1 or -1";
  if (r.mul(p, p) != p) return "idempotent is not idempotent";
  if (w != (c.sign > 0 ? r.add(a, p) : r.sub(a, p))) return "witness != element + sign*idempotent";
  const IndexSet& u = units(r).set();
  const bool commute = r.mul(a, p) == r.mul(p, a);
  switch (c.class_name) {
    case PolarityClass::j_quasipolar:
      if (c.sign != 1) return "J-quasipolar certificates use sign +1";
      [[fallthrough]];
    case PolarityClass::weakly_j_quasipolar:
      if (!detail::in_double_commutant_by_definition(r, p, a)) return "idempotent not in comm^2";
      if (!detail::in_radical_by_definition(r, w)) return "witness not in J";
      return std::nullopt;
    case PolarityClass::quasipolar:
      if (c.sign != 1) return "quasipolar certificates use sign +1";
      if (!detail::in_double_commutant_by_definition(r, p, a)) return "idempotent not in comm^2";
      if (!u.contains(w)) return "a + p is not a unit";
      if (!detail::in_qnil_by_definition(r, r.mul(a, p))) return "a p is not quasinilpotent";
      return std::nullopt;
    case PolarityClass::strongly_j_clean:
      if (c.sign != -1) return "clean-family certificates use sign -1";
      if (!commute) return "element and idempotent do not commute";
      if (!detail::in_radical_by_definition(r, w)) return "a - e not in J";
      return std::nullopt;
    case PolarityClass::strongly_clean:
      if (!commute) return "element and idempotent do not commute";
      [[fallthrough]];
    case PolarityClass::clean:
      if (c.sign != -1) return "clean-family certificates use sign -1";
      if (!u.contains(w)) return "a - e is not a unit";
      return std::nullopt;
    case PolarityClass::uniquely_clean: {
      if (c.sign != -1) return "clean-family certificates use sign -1";
      if (!u.contains(w)) return "a - e is not a unit";
      std::size_t n = 0;
      for (Index e = 0; e < r.order(); ++e)
        if (r.mul(e, e) == e && u.contains(r.sub(a, e))) ++n;
      if (n != 1) return "clean idempotent is not unique";
      if (c.count && *c.count != n) return "recorded count disagrees";
      return std::nullopt;
    }
  }
  return "unknown class";
}

inline bool validate_certificate(const FiniteRing& r, const PolarityCertificate& c) {
  return !certificate_problem(r, c).has_value();
}

/// Transports a certificate for a to one for u^-1 a u.
inline PolarityCertificate conjugate_certificate(const FiniteRing& r,
                                                 const PolarityCertificate& cert,
                                                 const Element& u) {
  if (auto problem = certificate_problem(r, cert))
    throw CertificateInvalid("cannot conjugate invalid certificate: " + *problem);
  if (&u.ring() != &r) throw RingMismatch();
  const Index v = inverse(r, u.index());
  if (v == npos) throw InvalidParameter("conjugating element " + u.str() + " is not a unit");
  auto conj = [&](const Element& x) {
    return Element(r, r.mul(r.mul(v, x.index()), u.index()));
  };
  PolarityCertificate out{conj(cert.element), cert.class_name, conj(cert.idempotent), cert.sign,
                          conj(cert.witness),  cert.both_signs, cert.count};
  if (auto problem = certificate_problem(r, out))
    throw InternalError("conjugated certificate failed validation: " + *problem);
  return out;
}

// -- ring-level classification ---------------------------------------------

struct PropertyEntry {
  std::string name;
  bool verdict = true;
  std::vector<Index> witness;  // smallest-index counterexample, in the classified ring
  std::optional<std::uint64_t> count;
};

struct SetSummary {
  SetName name;
  std::vector<Index> members;
};

struct PropertyReport {
  std::string ring;
  std::uint64_t order = 0;
  std::vector<PropertyEntry> properties;
  std::vector<SetSummary> sets;
  std::int64_t elapsed_ms = 0;

  const PropertyEntry& at(std::string_view name) const {
    for (const auto& p : properties)
      if (p.name == name) return p;
    throw InvalidParameter("no property named " + std::string(name));
  }
  bool verdict(std::string_view name) const { return at(name).verdict; }
  const SetSummary& set(SetName name) const {
    for (const auto& s : sets)
      if (s.name == name) return s;
    throw InvalidParameter("no set named " + std::string(to_string(name)));
  }
};

/// Property names in report order.
inline constexpr std::array<std::string_view, 19> kPropertyNames = {
    "commutative",      "abelian",        "reduced",         "boolean",
    "local",            "directly_finite", "weakly_j_quasipolar", "j_quasipolar",
    "quasipolar",       "clean",          "strongly_clean",  "strongly_j_clean",
    "uniquely_clean",   "feckly_reduced", "rj_commutative",  "rj_cubed_identity",
    "j_equals_j_sharp", "two_in_j",       "six_in_j",
};

/// Isomorphism-invariant part of a report: verdicts and set sizes.
struct ReportProfile {
  std::uint64_t order = 0;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, std::size_t>> set_sizes;

  friend bool operator==(const ReportProfile&, const ReportProfile&) = default;
};

inline ReportProfile profile(const PropertyReport& report) {
  ReportProfile p;
  p.order = report.order;
  for (const auto& e : report.properties) p.verdicts.emplace_back(e.name, e.verdict);
  for (const auto& s : report.sets)
    p.set_sizes.emplace_back(std::string(to_string(s.name)), s.members.size());
  return p;
}

namespace detail {

inline PropertyEntry entry_from(std::string_view name, const Verdict& v) {
  return {std::string(name), v.value, v.witness, std::nullopt};
}

// Lifts quotient witnesses to their minimum representatives.
inline Verdict lift_verdict(const FiniteRing& quotient, Verdict v) {
  for (Index& w : v.witness) w = quotient.lift(w);
  return v;
}

}  // namespace detail

/// Whole-ring profile. Element predicates scan elements in ascending order
/// and keep the first counterexample of each.
inline PropertyReport classify_ring(const RingPtr& ring, const Limits& limits = {}) {
  detail::require_ring(ring, "classify_ring");
  const auto start = std::chrono::steady_clock::now();
  const FiniteRing& r = *ring;
  if (r.order() > limits.max_classify_order)
    throw CapExceeded(r.describe(), r.order(), limits.max_classify_order);

  PropertyReport report;
  report.ring = r.describe();
  report.order = r.order();

  const StructuralProfile sp = structural_predicates(r);

  enum Slot { weakly, jqp, qp, clean, sclean, sjclean, uclean, kSlots };
  std::array<Verdict, kSlots> ev{};
  std::optional<std::uint64_t> uclean_count;
  std::size_t open = kSlots;
  auto fail = [&](Slot s, Index a) {
    ev[s] = Verdict::fail({a});
    --open;
  };
  for (Index a = 0; a < r.order() && open > 0; ++a) {
    const std::vector<Index> comm = commutant(r, a);
    if (ev[weakly].value && !detail::weakly_search(r, a, comm, false)) fail(weakly, a);
    if (ev[jqp].value && !detail::weakly_search(r, a, comm, true)) fail(jqp, a);
    if (ev[qp].value && !detail::quasipolar_search(r, a, comm)) fail(qp, a);
    if (ev[clean].value && !detail::clean_search(r, a, CleanVariant::clean)) fail(clean, a);
    if (ev[sclean].value && !detail::clean_search(r, a, CleanVariant::strongly_clean))
      fail(sclean, a);
    if (ev[sjclean].value && !detail::clean_search(r, a, CleanVariant::strongly_j_clean))
      fail(sjclean, a);
    if (ev[uclean].value) {
      const std::size_t n = detail::clean_count(r, a);
      if (n != 1) {
        fail(uclean, a);
        uclean_count = n;
      }
    }
  }

  const RingPtr rj = quotient_by_radical(ring);
  const Verdict rj_reduced = detail::lift_verdict(*rj, detail::check_reduced(*rj));
  const Verdict rj_comm = detail::lift_verdict(*rj, detail::check_commutative(*rj));
  const Verdict rj_cubed = detail::lift_verdict(*rj, detail::check_cubed_identity(*rj));

  const IndexSet& j = jacobson_radical(r).set();
  Verdict j_eq;
  for (Index x : j_sharp(r).members())
    if (!j.contains(x)) {
      j_eq = Verdict::fail({x});
      break;
    }
  const Index two = r.integer(2);
  const Index six = r.integer(6);
  const Verdict two_in_j = j.contains(two) ? Verdict{} : Verdict::fail({two});
  const Verdict six_in_j = j.contains(six) ? Verdict{} : Verdict::fail({six});

  auto& props = report.properties;
  props.push_back(detail::entry_from("commutative", sp.commutative));
  props.push_back(detail::entry_from("abelian", sp.abelian));
  props.push_back(detail::entry_from("reduced", sp.reduced));
  props.push_back(detail::entry_from("boolean", sp.boolean_ring));
  props.push_back(detail::entry_from("local", sp.local));
  props.push_back(detail::entry_from("directly_finite", sp.directly_finite));
  props.push_back(detail::entry_from("weakly_j_quasipolar", ev[weakly]));
  props.push_back(detail::entry_from("j_quasipolar", ev[jqp]));
  props.push_back(detail::entry_from("quasipolar", ev[qp]));
  props.push_back(detail::entry_from("clean", ev[clean]));
  props.push_back(detail::entry_from("strongly_clean", ev[sclean]));
  props.push_back(detail::entry_from("strongly_j_clean", ev[sjclean]));
  props.push_back(detail::entry_from("uniquely_clean", ev[uclean]));
  props.back().count = uclean_count;
  props.push_back(detail::entry_from("feckly_reduced", rj_reduced));
  props.push_back(detail::entry_from("rj_commutative", rj_comm));
  props.push_back(detail::entry_from("rj_cubed_identity", rj_cubed));
  props.push_back(detail::entry_from("j_equals_j_sharp", j_eq));
  props.push_back(detail::entry_from("two_in_j", two_in_j));
  props.push_back(detail::entry_from("six_in_j", six_in_j));

  for (SetName n : {SetName::units, SetName::radical, SetName::j_sharp, SetName::idempotents,
                    SetName::center, SetName::qnil})
    report.sets.push_back({n, structural_set(r, n).members()});

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace ringlab
