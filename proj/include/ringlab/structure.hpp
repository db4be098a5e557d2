#pragma once

// Structural sets of a finite ring: units, Jacobson radical, J#,
// idempotents, center, quasinilpotents, plus commutants and the boolean
// ring-level predicates built on them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class SetName { units, radical, j_sharp, idempotents, center, qnil };

inline std::string_view to_string(SetName n) {
  switch (n) {
    case SetName::units: return "units";
    case SetName::radical: return "radical";
    case SetName::j_sharp: return "j_sharp";
    case SetName::idempotents: return "idempotents";
    case SetName::center: return "center";
    case SetName::qnil: return "qnil";
  }
  return "?";
}

/// View of a memoized set; valid as long as the ring is alive.
class StructuralSet {
 public:
  StructuralSet(const FiniteRing& ring, SetName name, const IndexSet& set)
      : ring_(&ring), name_(name), set_(&set) {}

  const FiniteRing& ring() const noexcept { return *ring_; }
  SetName name() const noexcept { return name_; }
  const std::vector<Index>& members() const noexcept { return set_->members; }
  std::size_t size() const noexcept { return set_->size(); }
  bool contains(Index x) const noexcept { return set_->contains(x); }
  const IndexSet& set() const noexcept { return *set_; }

 private:
  const FiniteRing* ring_;
  SetName name_;
  const IndexSet* set_;
};

namespace detail {

// inverse[u] = v with uv = vu = 1, or npos.
inline const std::vector<Index>& unit_inverses(const FiniteRing& r) {
  return r.memo_inverses([&] {
    const Index n = r.order();
    std::vector<Index> inv(n, npos);
    for (Index u = 0; u < n; ++u) {
      if (inv[u] != npos) continue;
      for (Index v = 0; v < n; ++v) {
        if (r.mul(u, v) != r.one()) continue;
        // Finite rings have no one-sided units; a violation is an arithmetic bug.
        if (r.mul(v, u) != r.one())
          throw InternalError("one-sided inverse in " + r.describe() + ": " + r.render(u));
        inv[u] = v;
        inv[v] = u;
        break;
      }
    }
    return inv;
  });
}

inline bool is_two_sided_ideal(const FiniteRing& r, const IndexSet& s) {
  if (!s.contains(r.zero())) return false;
  for (Index a : s.members)
    for (Index b : s.members)
      if (!s.contains(r.add(a, b))) return false;
  for (Index x : s.members)
    for (Index t = 0; t < r.order(); ++t)
      if (!s.contains(r.mul(t, x)) || !s.contains(r.mul(x, t))) return false;
  return true;
}

}  // namespace detail

inline StructuralSet units(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::units, [&] {
    const auto& inv = detail::unit_inverses(r);
    std::vector<std::uint8_t> m(r.order());
    for (Index i = 0; i < r.order(); ++i) m[i] = inv[i] != npos;
    return IndexSet::from_mask(std::move(m));
  });
  return {r, SetName::units, s};
}

/// Two-sided inverse of u, or npos when u is not a unit.
inline Index inverse(const FiniteRing& r, Index u) {
  r.check_index(u);
  return detail::unit_inverses(r)[u];
}

/// J(R) = {x : 1 - r x is a unit for every r}.
inline StructuralSet jacobson_radical(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::radical, [&] {
    const IndexSet& u = units(r).set();
    std::vector<std::uint8_t> m(r.order(), 0);
    for (Index x = 0; x < r.order(); ++x) {
      bool quasi_regular = true;
      for (Index t = 0; t < r.order() && quasi_regular; ++t)
        quasi_regular = u.contains(r.sub(r.one(), r.mul(t, x)));
      m[x] = quasi_regular;
    }
    IndexSet j = IndexSet::from_mask(std::move(m));
    if (!detail::is_two_sided_ideal(r, j))
      throw InternalError("Jacobson radical of " + r.describe() + " is not a two-sided ideal");
    return j;
  });
  return {r, SetName::radical, s};
}

/// J#(R) = {x : x^n in J(R) for some n >= 1}.
inline StructuralSet j_sharp(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::j_sharp, [&] {
    const IndexSet& j = jacobson_radical(r).set();
    std::vector<std::uint8_t> m(r.order(), 0);
    std::vector<Index> seen(r.order(), npos);
    for (Index x = 0; x < r.order(); ++x) {
      // Walk x, x^2, ... until it enters J or cycles.
      Index y = x;
      for (Index step = 0; step < r.order(); ++step) {
        if (j.contains(y)) {
          m[x] = 1;
          break;
        }
        if (seen[y] == x) break;
        seen[y] = x;
        y = r.mul(y, x);
      }
    }
    return IndexSet::from_mask(std::move(m));
  });
  return {r, SetName::j_sharp, s};
}

inline StructuralSet idempotents(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::idempotents, [&] {
    std::vector<std::uint8_t> m(r.order(), 0);
    for (Index p = 0; p < r.order(); ++p) m[p] = r.mul(p, p) == p;
    return IndexSet::from_mask(std::move(m));
  });
  return {r, SetName::idempotents, s};
}

inline StructuralSet center(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::center, [&] {
    std::vector<std::uint8_t> m(r.order(), 0);
    for (Index z = 0; z < r.order(); ++z) {
      bool central = true;
      for (Index t = 0; t < r.order() && central; ++t) central = r.mul(z, t) == r.mul(t, z);
      m[z] = central;
    }
    return IndexSet::from_mask(std::move(m));
  });
  return {r, SetName::center, s};
}

/// comm(a), ascending.
inline std::vector<Index> commutant(const FiniteRing& r, Index a) {
  r.check_index(a);
  std::vector<Index> out;
  for (Index b = 0; b < r.order(); ++b)
    if (r.mul(a, b) == r.mul(b, a)) out.push_back(b);
  return out;
}

/// True when b commutes with every member of `comm`.
inline bool commutes_with_all(const FiniteRing& r, Index b, const std::vector<Index>& comm) {
  for (Index c : comm)
    if (r.mul(b, c) != r.mul(c, b)) return false;
  return true;
}

/// comm^2(a), ascending.
inline std::vector<Index> double_commutant(const FiniteRing& r, Index a) {
  const std::vector<Index> comm = commutant(r, a);
  std::vector<Index> out;
  for (Index b = 0; b < r.order(); ++b)
    if (commutes_with_all(r, b, comm)) out.push_back(b);
  return out;
}

/// R^qnil = {a : 1 + a x is a unit for every x in comm(a)}.
inline StructuralSet qnil_set(const FiniteRing& r) {
  const IndexSet& s = r.memo(CacheSlot::qnil, [&] {
    const IndexSet& u = units(r).set();
    std::vector<std::uint8_t> m(r.order(), 0);
    for (Index a = 0; a < r.order(); ++a) {
      bool qn = true;
      for (Index x = 0; x < r.order() && qn; ++x) {
        if (r.mul(a, x) != r.mul(x, a)) continue;
        qn = u.contains(r.add(r.one(), r.mul(a, x)));
      }
      m[a] = qn;
    }
    return IndexSet::from_mask(std::move(m));
  });
  return {r, SetName::qnil, s};
}

inline StructuralSet structural_set(const FiniteRing& r, SetName name) {
  switch (name) {
    case SetName::units: return units(r);
    case SetName::radical: return jacobson_radical(r);
    case SetName::j_sharp: return j_sharp(r);
    case SetName::idempotents: return idempotents(r);
    case SetName::center: return center(r);
    case SetName::qnil: return qnil_set(r);
  }
  throw InvalidParameter("unknown structural set");
}

/// Smallest n >= 1 with x^n = 0, if any.
inline std::optional<Index> nilpotency_index(const FiniteRing& r, Index x) {
  Index y = x;
  for (Index n = 1; n <= r.order(); ++n) {
    if (y == r.zero()) return n;
    y = r.mul(y, x);
  }
  return std::nullopt;
}

/// A boolean verdict with the smallest-index counterexample when false.
struct Verdict {
  bool value = true;
  std::vector<Index> witness;

  static Verdict fail(std::vector<Index> w) { return {false, std::move(w)}; }
};

struct StructuralProfile {
  Verdict commutative;
  Verdict abelian;          // witness: non-central idempotent e, element r with er != re
  Verdict reduced;          // witness: nonzero nilpotent
  Verdict boolean_ring;     // witness: non-idempotent
  Verdict local;            // witness: element neither a unit nor in J
  Verdict directly_finite;  // witness: a, b with ab = 1 != ba
};

namespace detail {

inline Verdict check_commutative(const FiniteRing& r) {
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return Verdict::fail({a, b});
  return {};
}

inline Verdict check_abelian(const FiniteRing& r) {
  for (Index e : idempotents(r).members())
    for (Index t = 0; t < r.order(); ++t)
      if (r.mul(e, t) != r.mul(t, e)) return Verdict::fail({e, t});
  return {};
}

inline Verdict check_reduced(const FiniteRing& r) {
  for (Index a = 1; a < r.order(); ++a)
    if (nilpotency_index(r, a)) return Verdict::fail({a});
  return {};
}

inline Verdict check_boolean(const FiniteRing& r) {
  const IndexSet& idem = idempotents(r).set();
  for (Index a = 0; a < r.order(); ++a)
    if (!idem.contains(a)) return Verdict::fail({a});
  return {};
}

// Non-units lie in J. Equivalent to R \ U = J for nonzero rings and true
// for the zero ring. A finite non-local ring has a nontrivial idempotent,
// which is preferred as the witness.
inline Verdict check_local(const FiniteRing& r) {
  const IndexSet& u = units(r).set();
  const IndexSet& j = jacobson_radical(r).set();
  std::optional<Index> outside;
  for (Index a = 0; a < r.order() && !outside; ++a)
    if (!u.contains(a) && !j.contains(a)) outside = a;
  if (!outside) return {};
  for (Index e : idempotents(r).members())
    if (e != r.zero() && e != r.one()) return Verdict::fail({e});
  return Verdict::fail({*outside});
}

inline Verdict check_directly_finite(const FiniteRing& r) {
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one()) return Verdict::fail({a, b});
  return {};
}

// x^3 = x for all x.
inline Verdict check_cubed_identity(const FiniteRing& r) {
  for (Index a = 0; a < r.order(); ++a)
    if (r.mul(r.mul(a, a), a) != a) return Verdict::fail({a});
  return {};
}

}  // namespace detail

inline StructuralProfile structural_predicates(const FiniteRing& r) {
  StructuralProfile p;
  p.commutative = detail::check_commutative(r);
  p.abelian = detail::check_abelian(r);
  p.reduced = detail::check_reduced(r);
  p.boolean_ring = detail::check_boolean(r);
  p.local = detail::check_local(r);
  p.directly_finite = detail::check_directly_finite(r);
  return p;
}

/// R / J(R), described as modJ(R).
inline RingPtr quotient_by_radical(const RingPtr& r) {
  detail::require_ring(r, "quotient_by_radical");
  return detail::make_quotient(r, jacobson_radical(*r).members(), true);
}

}  // namespace ringlab
