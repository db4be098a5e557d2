#pragma once

// Finite unital rings with index-coded elements.
//
// Every ring has elements 0..order-1. Index 0 is always the zero element.
// Structural codings, most significant coordinate first:
//   Zn          residue i
//   Product     (a, b)  ->  a * |S| + b
//   Matrix      row-major entries in base |R|
//   Triangular  row-major entries on and above the diagonal
//   Quotient    cosets numbered by their minimum representative
//   Corner      members of fRf in ascending base order
// Rings of order <= 256 materialize their operation tables at construction.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

using Index = std::uint32_t;
inline constexpr Index npos = std::numeric_limits<Index>::max();

/// Order caps for construction and whole-ring classification.
struct Limits {
  std::uint64_t max_order = 65536;
  std::uint64_t max_classify_order = 4096;
};

/// Ascending member list plus an O(1) membership mask over the whole ring.
struct IndexSet {
  std::vector<Index> members;
  std::vector<std::uint8_t> mask;

  static IndexSet from_mask(std::vector<std::uint8_t> m) {
    IndexSet s;
    for (Index i = 0; i < m.size(); ++i)
      if (m[i]) s.members.push_back(i);
    s.mask = std::move(m);
    return s;
  }

  bool contains(Index i) const noexcept { return i < mask.size() && mask[i] != 0; }
  std::size_t size() const noexcept { return members.size(); }
};

enum class RingKind { zn, product, matrix, triangular, quotient, corner };

/// Memoized structural sets. Filled by the structure module.
enum class CacheSlot : std::size_t { units, radical, j_sharp, idempotents, center, qnil };
inline constexpr std::size_t kCacheSlots = 6;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

namespace detail {

// Once-only lazy value; concurrent first access computes exactly once.
template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& compute) const {
    std::call_once(flag_, [&] { value_ = compute(); });
    return value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable T value_{};
};

struct RingBuilder;

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == UINT64_MAX) break;
  }
  return r;
}

}  // namespace detail

class FiniteRing {
  struct Passkey {
    explicit Passkey() = default;
  };

 public:
  static constexpr unsigned kMaxDim = 8;
  static constexpr Index kTableOrder = 256;

  struct ZnData {
    std::uint32_t modulus;
  };
  struct ProductData {
    RingPtr left;
    RingPtr right;
  };
  struct MatrixData {
    unsigned dim;
    RingPtr base;
    bool triangular;
  };
  struct QuotientData {
    RingPtr base;
    std::vector<Index> ideal;
    std::vector<Index> reps;      // minimum representative per coset
    std::vector<Index> coset_of;  // base index -> coset index
    bool by_radical;
  };
  struct CornerData {
    RingPtr base;
    Index idempotent;
    std::vector<Index> members;   // ascending base indices of fRf
    std::vector<Index> position;  // base index -> corner index or npos
  };
  using Data = std::variant<ZnData, ProductData, MatrixData, QuotientData, CornerData>;

  FiniteRing(Passkey, Index order, Data data) : order_(order), data_(std::move(data)) {}
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  Index order() const noexcept { return order_; }
  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return one_; }
  const Data& data() const noexcept { return data_; }

  RingKind kind() const noexcept {
    switch (data_.index()) {
      case 0: return RingKind::zn;
      case 1: return RingKind::product;
      case 2: return std::get<MatrixData>(data_).triangular ? RingKind::triangular : RingKind::matrix;
      case 3: return RingKind::quotient;
      default: return RingKind::corner;
    }
  }

  bool is_matrix_kind() const noexcept {
    return std::holds_alternative<MatrixData>(data_);
  }

  std::uint32_t modulus() const { return get<ZnData>("modulus").modulus; }
  unsigned dim() const { return get<MatrixData>("dim").dim; }
  const FiniteRing& left() const { return *get<ProductData>("left").left; }
  const FiniteRing& right() const { return *get<ProductData>("right").right; }

  /// Underlying ring of a matrix, quotient or corner ring.
  const RingPtr& base_ptr() const {
    if (auto* m = std::get_if<MatrixData>(&data_)) return m->base;
    if (auto* q = std::get_if<QuotientData>(&data_)) return q->base;
    if (auto* c = std::get_if<CornerData>(&data_)) return c->base;
    throw InvalidParameter("ring " + describe() + " has no base ring");
  }
  const FiniteRing& base() const { return *base_ptr(); }

  // -- arithmetic -----------------------------------------------------------

  Index add(Index a, Index b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * order_ + b];
    return add_slow(a, b);
  }
  Index mul(Index a, Index b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * order_ + b];
    return mul_slow(a, b);
  }
  Index neg(Index a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }

  /// k * 1.
  Index integer(std::int64_t k) const {
    Index step = k < 0 ? neg(one_) : one_;
    std::uint64_t m = k < 0 ? std::uint64_t(0) - std::uint64_t(k) : std::uint64_t(k);
    Index acc = zero();
    while (m != 0) {
      if (m & 1U) acc = add(acc, step);
      step = add(step, step);
      m >>= 1U;
    }
    return acc;
  }

  Index pow(Index a, std::uint64_t e) const {
    Index acc = one_;
    Index sq = a;
    while (e != 0) {
      if (e & 1U) acc = mul(acc, sq);
      sq = mul(sq, sq);
      e >>= 1U;
    }
    return acc;
  }

  // -- structural coding ----------------------------------------------------

  std::vector<Index> coords(Index x) const {
    check_index(x);
    switch (data_.index()) {
      case 0: return {x};
      case 1: {
        const Index r = right().order();
        return {x / r, x % r};
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        std::vector<Index> out(slot_count());
        const Index b = m.base->order();
        for (std::size_t k = out.size(); k-- > 0;) {
          out[k] = x % b;
          x /= b;
        }
        return out;
      }
      case 3: return {std::get<QuotientData>(data_).reps[x]};
      default: return {std::get<CornerData>(data_).members[x]};
    }
  }

  Index from_coords(std::span<const Index> c) const {
    switch (data_.index()) {
      case 0:
        expect_coords(c, 1);
        check_index(c[0]);
        return c[0];
      case 1: {
        expect_coords(c, 2);
        left().check_index(c[0]);
        right().check_index(c[1]);
        return c[0] * right().order() + c[1];
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        expect_coords(c, slot_count());
        Index x = 0;
        for (Index v : c) {
          m.base->check_index(v);
          x = x * m.base->order() + v;
        }
        return x;
      }
      case 3: {
        expect_coords(c, 1);
        const auto& q = std::get<QuotientData>(data_);
        q.base->check_index(c[0]);
        return q.coset_of[c[0]];
      }
      default: {
        expect_coords(c, 1);
        const auto& k = std::get<CornerData>(data_);
        k.base->check_index(c[0]);
        if (k.position[c[0]] == npos)
          throw InvalidParameter("element " + k.base->render(c[0]) + " is not in corner ring " +
                                 describe());
        return k.position[c[0]];
      }
    }
  }

  /// Entry (row, col) of a matrix or triangular element, as a base index.
  Index entry(Index x, unsigned row, unsigned col) const {
    const auto& m = get<MatrixData>("entry");
    if (row >= m.dim || col >= m.dim) throw InvalidParameter("matrix entry out of range");
    EntryBuf e{};
    unpack(x, e);
    return e[row * m.dim + col];
  }

  /// Full dim*dim row-major entries.
  std::vector<Index> to_matrix(Index x) const {
    const auto& m = get<MatrixData>("to_matrix");
    check_index(x);
    EntryBuf e{};
    unpack(x, e);
    return {e.begin(), e.begin() + m.dim * m.dim};
  }

  /// Encodes dim*dim row-major base entries. Triangular rings reject nonzero
  /// entries below the diagonal.
  Index from_matrix(std::span<const Index> entries) const {
    const auto& m = get<MatrixData>("from_matrix");
    if (entries.size() != std::size_t(m.dim) * m.dim)
      throw InvalidParameter("expected " + std::to_string(m.dim * m.dim) + " matrix entries");
    EntryBuf e{};
    for (unsigned i = 0; i < entries.size(); ++i) {
      m.base->check_index(entries[i]);
      if (m.triangular && i / m.dim > i % m.dim && entries[i] != m.base->zero())
        throw InvalidParameter("nonzero entry below the diagonal of a triangular matrix");
      e[i] = entries[i];
    }
    return pack(e);
  }

  /// Representative in the base ring (quotient) or base index (corner).
  Index lift(Index x) const {
    check_index(x);
    if (auto* q = std::get_if<QuotientData>(&data_)) return q->reps[x];
    if (auto* c = std::get_if<CornerData>(&data_)) return c->members[x];
    throw InvalidParameter("lift requires a quotient or corner ring");
  }

  /// Coset of a base element (quotient) or corner position (npos if outside).
  Index project(Index base_index) const {
    if (auto* q = std::get_if<QuotientData>(&data_)) {
      q->base->check_index(base_index);
      return q->coset_of[base_index];
    }
    if (auto* c = std::get_if<CornerData>(&data_)) {
      c->base->check_index(base_index);
      return c->position[base_index];
    }
    throw InvalidParameter("project requires a quotient or corner ring");
  }

  // -- rendering ------------------------------------------------------------

  /// Ring descriptor in DSL syntax. Quotients by ideals other than J and
  /// corner rings have display-only forms.
  std::string describe() const {
    switch (data_.index()) {
      case 0: return "Z" + std::to_string(modulus());
      case 1: {
        const auto& p = std::get<ProductData>(data_);
        std::string rhs = p.right->describe();
        if (p.right->kind() == RingKind::product) rhs = "(" + rhs + ")";
        return p.left->describe() + " x " + rhs;
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        return std::string(m.triangular ? "T(" : "M(") + std::to_string(m.dim) + "," +
               m.base->describe() + ")";
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        if (q.by_radical) return "modJ(" + q.base->describe() + ")";
        std::string out = "quotient(" + q.base->describe() + ",{";
        for (std::size_t i = 0; i < q.ideal.size(); ++i) {
          if (i) out += ",";
          out += q.base->render(q.ideal[i]);
        }
        return out + "})";
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return "corner(" + c.base->describe() + "," + c.base->render(c.idempotent) + ")";
      }
    }
  }

  /// Element literal: integer, "(a,b)" or "[[..],[..]]".
  std::string render(Index x) const {
    check_index(x);
    switch (data_.index()) {
      case 0: return std::to_string(x);
      case 1: {
        const Index r = right().order();
        return "(" + left().render(x / r) + "," + right().render(x % r) + ")";
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        EntryBuf e{};
        unpack(x, e);
        std::string out = "[";
        for (unsigned r = 0; r < m.dim; ++r) {
          out += r ? ",[" : "[";
          for (unsigned c = 0; c < m.dim; ++c) {
            if (c) out += ",";
            out += m.base->render(e[r * m.dim + c]);
          }
          out += "]";
        }
        return out + "]";
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        return q.base->render(q.reps[x]);
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return c.base->render(c.members[x]);
      }
    }
  }

  // -- caches ---------------------------------------------------------------

  template <class F>
  const IndexSet& memo(CacheSlot slot, F&& compute) const {
    return caches_[static_cast<std::size_t>(slot)].get(std::forward<F>(compute));
  }

  template <class F>
  const std::vector<Index>& memo_inverses(F&& compute) const {
    return inverses_.get(std::forward<F>(compute));
  }

  void check_index(Index x) const {
    if (x >= order_)
      throw InvalidParameter("element index " + std::to_string(x) + " out of range for " +
                             describe());
  }

 private:
  friend struct detail::RingBuilder;

  static constexpr unsigned kMaxEntries = kMaxDim * kMaxDim;
  using EntryBuf = std::array<Index, kMaxEntries>;

  template <class T>
  const T& get(const char* what) const {
    if (auto* v = std::get_if<T>(&data_)) return *v;
    throw InvalidParameter(std::string(what) + " is not defined for ring " + describe());
  }

  static void expect_coords(std::span<const Index> c, std::size_t n) {
    if (c.size() != n)
      throw InvalidParameter("expected " + std::to_string(n) + " coordinates, got " +
                             std::to_string(c.size()));
  }

  std::size_t slot_count() const {
    const auto& m = std::get<MatrixData>(data_);
    return m.triangular ? std::size_t(m.dim) * (m.dim + 1) / 2 : std::size_t(m.dim) * m.dim;
  }

  void unpack(Index x, EntryBuf& e) const {
    const auto& m = std::get<MatrixData>(data_);
    const Index b = m.base->order();
    for (unsigned r = m.dim; r-- > 0;) {
      for (unsigned c = m.dim; c-- > 0;) {
        if (m.triangular && c < r) {
          e[r * m.dim + c] = 0;
          continue;
        }
        e[r * m.dim + c] = x % b;
        x /= b;
      }
    }
  }

  Index pack(const EntryBuf& e) const {
    const auto& m = std::get<MatrixData>(data_);
    const Index b = m.base->order();
    Index x = 0;
    for (unsigned r = 0; r < m.dim; ++r)
      for (unsigned c = m.triangular ? r : 0; c < m.dim; ++c) x = x * b + e[r * m.dim + c];
    return x;
  }

  Index add_slow(Index a, Index b) const {
    switch (data_.index()) {
      case 0: {
        const std::uint64_t s = std::uint64_t(a) + b;
        return Index(s % modulus());
      }
      case 1: {
        const Index r = right().order();
        return left().add(a / r, b / r) * r + right().add(a % r, b % r);
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        EntryBuf x{}, y{};
        unpack(a, x);
        unpack(b, y);
        for (unsigned i = 0; i < m.dim * m.dim; ++i) x[i] = m.base->add(x[i], y[i]);
        return pack(x);
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        return q.coset_of[q.base->add(q.reps[a], q.reps[b])];
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return corner_position(c, c.base->add(c.members[a], c.members[b]));
      }
    }
  }

  Index mul_slow(Index a, Index b) const {
    switch (data_.index()) {
      case 0: {
        const std::uint64_t p = std::uint64_t(a) * b;
        return Index(p % modulus());
      }
      case 1: {
        const Index r = right().order();
        return left().mul(a / r, b / r) * r + right().mul(a % r, b % r);
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        const FiniteRing& base = *m.base;
        EntryBuf x{}, y{}, z{};
        unpack(a, x);
        unpack(b, y);
        const unsigned n = m.dim;
        for (unsigned r = 0; r < n; ++r) {
          for (unsigned c = 0; c < n; ++c) {
            Index acc = 0;
            const unsigned lo = m.triangular ? r : 0;
            const unsigned hi = m.triangular ? c + 1 : n;
            for (unsigned k = lo; k < hi; ++k)
              acc = base.add(acc, base.mul(x[r * n + k], y[k * n + c]));
            z[r * n + c] = acc;
          }
        }
        return pack(z);
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        return q.coset_of[q.base->mul(q.reps[a], q.reps[b])];
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return corner_position(c, c.base->mul(c.members[a], c.members[b]));
      }
    }
  }

  Index neg_slow(Index a) const {
    switch (data_.index()) {
      case 0: return a == 0 ? 0 : modulus() - a;
      case 1: {
        const Index r = right().order();
        return left().neg(a / r) * r + right().neg(a % r);
      }
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        EntryBuf x{};
        unpack(a, x);
        for (unsigned i = 0; i < m.dim * m.dim; ++i) x[i] = m.base->neg(x[i]);
        return pack(x);
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        return q.coset_of[q.base->neg(q.reps[a])];
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return corner_position(c, c.base->neg(c.members[a]));
      }
    }
  }

  static Index corner_position(const CornerData& c, Index base_index) {
    const Index p = c.position[base_index];
    if (p == npos) throw InternalError("corner ring is not closed under its operations");
    return p;
  }

  Index compute_one() const {
    switch (data_.index()) {
      case 0: return modulus() == 1 ? 0 : 1;
      case 1: return left().one() * right().order() + right().one();
      case 2: {
        const auto& m = std::get<MatrixData>(data_);
        EntryBuf e{};
        for (unsigned i = 0; i < m.dim; ++i) e[i * m.dim + i] = m.base->one();
        return pack(e);
      }
      case 3: {
        const auto& q = std::get<QuotientData>(data_);
        return q.coset_of[q.base->one()];
      }
      default: {
        const auto& c = std::get<CornerData>(data_);
        return c.position[c.idempotent];
      }
    }
  }

  void build_tables() {
    one_ = compute_one();
    if (order_ > kTableOrder) return;
    const std::size_t n = order_;
    std::vector<std::uint8_t> add_t(n * n), mul_t(n * n), neg_t(n);
    for (Index a = 0; a < order_; ++a) {
      neg_t[a] = std::uint8_t(neg_slow(a));
      for (Index b = 0; b < order_; ++b) {
        add_t[a * n + b] = std::uint8_t(add_slow(a, b));
        mul_t[a * n + b] = std::uint8_t(mul_slow(a, b));
      }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
  }

  Index order_;
  Index one_ = 0;
  Data data_;
  std::vector<std::uint8_t> add_table_;
  std::vector<std::uint8_t> mul_table_;
  std::vector<std::uint8_t> neg_table_;
  std::array<detail::Lazy<IndexSet>, kCacheSlots> caches_;
  detail::Lazy<std::vector<Index>> inverses_;
};

namespace detail {

struct RingBuilder {
  static RingPtr create(Index order, FiniteRing::Data data) {
    auto ring = std::make_shared<FiniteRing>(FiniteRing::Passkey{}, order, std::move(data));
    ring->build_tables();
    return ring;
  }
};

inline Index checked_order(const std::string& subject, std::uint64_t required,
                           const Limits& limits) {
  if (required > limits.max_order || required >= npos)
    throw CapExceeded(subject, required, limits.max_order);
  return Index(required);
}

inline void require_ring(const RingPtr& r, const char* what) {
  if (!r) throw InvalidParameter(std::string(what) + ": null ring");
}

inline RingPtr make_matrix_kind(unsigned n, RingPtr base, bool triangular, const Limits& limits) {
  require_ring(base, triangular ? "make_triangular_ring" : "make_matrix_ring");
  if (n == 0) throw InvalidParameter("matrix dimension must be at least 1");
  if (n > FiniteRing::kMaxDim)
    throw InvalidParameter("matrix dimension " + std::to_string(n) + " exceeds " +
                           std::to_string(FiniteRing::kMaxDim));
  const std::uint64_t slots = triangular ? std::uint64_t(n) * (n + 1) / 2 : std::uint64_t(n) * n;
  const std::string subject =
      std::string(triangular ? "T(" : "M(") + std::to_string(n) + "," + base->describe() + ")";
  const Index order = checked_order(subject, saturating_pow(base->order(), slots), limits);
  return RingBuilder::create(order, FiniteRing::MatrixData{n, std::move(base), triangular});
}

/// Quotient without the public ideal checks' tag; `by_radical` only affects
/// the descriptor.
inline RingPtr make_quotient(RingPtr base, std::vector<Index> ideal, bool by_radical) {
  require_ring(base, "make_quotient");
  const FiniteRing& r = *base;
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  for (Index i : ideal)
    if (i >= r.order()) throw InvalidParameter("ideal member out of range");
  std::vector<std::uint8_t> in(r.order(), 0);
  for (Index i : ideal) in[i] = 1;
  if (ideal.empty() || !in[r.zero()]) throw InvalidIdeal("zero membership", "0 missing");
  for (Index a : ideal)
    for (Index b : ideal)
      if (!in[r.add(a, b)])
        throw InvalidIdeal("addition", r.render(a) + " + " + r.render(b));
  for (Index x : ideal) {
    for (Index s = 0; s < r.order(); ++s) {
      if (!in[r.mul(s, x)])
        throw InvalidIdeal("left multiplication", r.render(s) + " * " + r.render(x));
      if (!in[r.mul(x, s)])
        throw InvalidIdeal("right multiplication", r.render(x) + " * " + r.render(s));
    }
  }
  std::vector<Index> coset_of(r.order(), npos);
  std::vector<Index> reps;
  for (Index x = 0; x < r.order(); ++x) {
    if (coset_of[x] != npos) continue;
    const Index c = Index(reps.size());
    reps.push_back(x);
    for (Index i : ideal) coset_of[r.add(x, i)] = c;
  }
  const Index order = Index(reps.size());
  return RingBuilder::create(order, FiniteRing::QuotientData{std::move(base), std::move(ideal),
                                                             std::move(reps), std::move(coset_of),
                                                             by_radical});
}

}  // namespace detail

// -- constructors -----------------------------------------------------------

inline RingPtr make_zn(std::uint64_t n, const Limits& limits = {}) {
  if (n == 0) throw InvalidParameter("Zn requires n >= 1");
  const Index order = detail::checked_order("Z" + std::to_string(n), n, limits);
  return detail::RingBuilder::create(order, FiniteRing::ZnData{order});
}

inline RingPtr make_product(RingPtr left, RingPtr right, const Limits& limits = {}) {
  detail::require_ring(left, "make_product");
  detail::require_ring(right, "make_product");
  const std::string subject = left->describe() + " x " + right->describe();
  const Index order = detail::checked_order(
      subject, detail::saturating_mul(left->order(), right->order()), limits);
  return detail::RingBuilder::create(order,
                                     FiniteRing::ProductData{std::move(left), std::move(right)});
}

inline RingPtr make_matrix_ring(unsigned n, RingPtr base, const Limits& limits = {}) {
  return detail::make_matrix_kind(n, std::move(base), false, limits);
}

inline RingPtr make_triangular_ring(unsigned n, RingPtr base, const Limits& limits = {}) {
  return detail::make_matrix_kind(n, std::move(base), true, limits);
}

/// R / I for a two-sided ideal I given by member indices.
inline RingPtr make_quotient(RingPtr base, std::vector<Index> ideal) {
  return detail::make_quotient(std::move(base), std::move(ideal), false);
}

/// fRf for an idempotent f, with identity f.
inline RingPtr make_corner(RingPtr base, Index f) {
  detail::require_ring(base, "make_corner");
  const FiniteRing& r = *base;
  r.check_index(f);
  if (r.mul(f, f) != f) throw InvalidParameter("corner requires an idempotent, got " + r.render(f));
  std::vector<std::uint8_t> in(r.order(), 0);
  for (Index x = 0; x < r.order(); ++x) in[r.mul(r.mul(f, x), f)] = 1;
  std::vector<Index> members;
  std::vector<Index> position(r.order(), npos);
  for (Index x = 0; x < r.order(); ++x) {
    if (!in[x]) continue;
    position[x] = Index(members.size());
    members.push_back(x);
  }
  const Index order = Index(members.size());
  return detail::RingBuilder::create(
      order, FiniteRing::CornerData{std::move(base), f, std::move(members), std::move(position)});
}

// -- elements ---------------------------------------------------------------

/// Ring-scoped element handle. The ring must outlive the handle.
class Element {
 public:
  Element(const FiniteRing& ring, Index index) : ring_(&ring), index_(index) {
    ring.check_index(index);
  }

  const FiniteRing& ring() const noexcept { return *ring_; }
  Index index() const noexcept { return index_; }
  std::string str() const { return ring_->render(index_); }

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.ring_ == b.ring_ && a.index_ == b.index_;
  }

 private:
  const FiniteRing* ring_;
  Index index_;
};

enum class ArithOp { add, mul, neg, sub };

/// Checked element arithmetic; `neg` ignores b but still requires it in R.
inline Element ring_arith(const FiniteRing& r, ArithOp op, const Element& a, const Element& b) {
  if (&a.ring() != &r || &b.ring() != &r) throw RingMismatch();
  switch (op) {
    case ArithOp::add: return {r, r.add(a.index(), b.index())};
    case ArithOp::mul: return {r, r.mul(a.index(), b.index())};
    case ArithOp::neg: return {r, r.neg(a.index())};
    case ArithOp::sub: return {r, r.sub(a.index(), b.index())};
  }
  throw InvalidParameter("unknown arithmetic operation");
}

inline Element operator+(const Element& a, const Element& b) {
  return ring_arith(a.ring(), ArithOp::add, a, b);
}
inline Element operator-(const Element& a, const Element& b) {
  return ring_arith(a.ring(), ArithOp::sub, a, b);
}
inline Element operator*(const Element& a, const Element& b) {
  return ring_arith(a.ring(), ArithOp::mul, a, b);
}
inline Element operator-(const Element& a) { return ring_arith(a.ring(), ArithOp::neg, a, a); }

}  // namespace ringlab
