#include <gtest/gtest.h>

#include <random>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

// Random constructions with order at most 256.
RingPtr random_ring(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 4 : 0);
  std::uniform_int_distribution<int> mod(1, 12);
  for (;;) {
    try {
      RingPtr r;
      switch (kind(rng)) {
        case 1: r = make_product(random_ring(rng, depth - 1), random_ring(rng, depth - 1)); break;
        case 2: r = make_matrix_ring(2, random_ring(rng, depth - 1)); break;
        case 3: r = make_triangular_ring(2, random_ring(rng, depth - 1)); break;
        case 4: r = quotient_by_radical(random_ring(rng, depth - 1)); break;
        default: r = make_zn(mod(rng)); break;
      }
      if (r->order() <= 256) return r;
    } catch (const CapExceeded&) {
    }
  }
}

Index pick(std::mt19937& rng, const FiniteRing& r) {
  return std::uniform_int_distribution<Index>(0, r.order() - 1)(rng);
}

}  // namespace

TEST(Properties, RingAxiomsOnRandomRings) {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const RingPtr r = random_ring(rng, 2);
    for (int k = 0; k < 200; ++k) {
      const Index a = pick(rng, *r), b = pick(rng, *r), c = pick(rng, *r);
      ASSERT_EQ(r->add(a, b), r->add(b, a)) << r->describe();
      ASSERT_EQ(r->add(r->add(a, b), c), r->add(a, r->add(b, c))) << r->describe();
      ASSERT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c))) << r->describe();
      ASSERT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c))) << r->describe();
      ASSERT_EQ(r->mul(r->add(a, b), c), r->add(r->mul(a, c), r->mul(b, c))) << r->describe();
      ASSERT_EQ(r->mul(a, r->one()), a) << r->describe();
      ASSERT_EQ(r->mul(r->one(), a), a) << r->describe();
      ASSERT_EQ(r->add(a, r->neg(a)), r->zero()) << r->describe();
    }
  }
}

TEST(Properties, CodingRoundTrip) {
  for (const char* text : {"Z7", "Z2 x Z5", "Z3 x Z2 x Z2", "M(2,Z3)", "T(2,Z4)", "T(3,Z2)",
                           "M(2,Z2 x Z2)", "modJ(Z12)", "modJ(T(2,Z3))"}) {
    const RingPtr r = eval_ring_expr(text);
    for (Index i = 0; i < r->order(); ++i) {
      switch (r->kind()) {
        case RingKind::product: ASSERT_EQ(r->from_coords(r->coords(i)), i) << text; break;
        case RingKind::matrix:
        case RingKind::triangular: ASSERT_EQ(r->from_matrix(r->to_matrix(i)), i) << text; break;
        case RingKind::quotient: ASSERT_EQ(r->project(r->lift(i)), i) << text; break;
        default: break;
      }
      ASSERT_EQ(parse_element(r->render(i), *r).index(), i) << text;
    }
  }
}

TEST(Properties, LargeRingCodingRoundTrip) {
  const RingPtr r = eval_ring_expr("M(2,Z9)");
  std::mt19937 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Index i = pick(rng, *r);
    ASSERT_EQ(r->from_matrix(r->to_matrix(i)), i);
  }
}

TEST(Properties, QuotientWellDefined) {
  std::mt19937 rng(13);
  for (const char* text : {"Z36", "T(2,Z4)", "M(2,Z4)", "Z4 x Z9", "T(2,Z2 x Z4)"}) {
    const RingPtr base = eval_ring_expr(text);
    const auto& ideal = jacobson_radical(*base).members();
    const RingPtr q = quotient_by_radical(base);
    std::uniform_int_distribution<std::size_t> in_ideal(0, ideal.size() - 1);
    for (int k = 0; k < 100; ++k) {
      const Index a = pick(rng, *base), b = pick(rng, *base);
      const Index a2 = base->add(a, ideal[in_ideal(rng)]);
      const Index b2 = base->add(b, ideal[in_ideal(rng)]);
      ASSERT_EQ(q->project(a), q->project(a2)) << text;
      ASSERT_EQ(q->project(base->mul(a, b)), q->project(base->mul(a2, b2))) << text;
      ASSERT_EQ(q->project(base->add(a, b)), q->project(base->add(a2, b2))) << text;
      ASSERT_EQ(q->mul(q->project(a), q->project(b)), q->project(base->mul(a, b))) << text;
    }
  }
}

TEST(Properties, CornerClosure) {
  for (const char* text : {"T(2,Z2)", "M(2,Z2)", "Z6", "T(2,Z3)", "Z2 x Z4"}) {
    const RingPtr r = eval_ring_expr(text);
    for (Index f : idempotents(*r).members()) {
      const RingPtr c = make_corner(r, f);
      EXPECT_EQ(c->lift(c->one()), f) << text;
      for (Index x = 0; x < c->order(); ++x) {
        const Index bx = c->lift(x);
        ASSERT_EQ(r->mul(r->mul(f, bx), f), bx) << text;
        for (Index y = 0; y < c->order(); ++y) {
          const Index by = c->lift(y);
          ASSERT_EQ(c->lift(c->mul(x, y)), r->mul(bx, by)) << text;
          ASSERT_EQ(c->lift(c->add(x, y)), r->add(bx, by)) << text;
        }
      }
    }
  }
}
