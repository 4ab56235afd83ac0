#include <gtest/gtest.h>

#include <random>

#include "dtl/interval_set.hpp"
#include "dtl/rational.hpp"
#include "support.hpp"

using namespace dtl;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).to_string(), "1/2");
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "a", "1/2/3", "+1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, BigValuesStayExact) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  Rational sum = big + big - big;
  EXPECT_EQ(sum, big);
  EXPECT_EQ((big / big), Rational(1));
  EXPECT_TRUE((big / big).is_small());
  Rational m = Rational(INT64_MAX) * Rational(INT64_MAX);
  EXPECT_EQ(m / Rational(INT64_MAX), Rational(INT64_MAX));
  EXPECT_LT(Rational(INT64_MAX), m);
  EXPECT_EQ(-Rational(INT64_MIN), Rational(INT64_MAX) + Rational(1));
}

TEST(Rational, ModAndLcm) {
  EXPECT_EQ(mod(Rational(7, 3), Rational(2, 3)), Rational(1, 3));
  EXPECT_EQ(mod(Rational(-1, 3), Rational(2, 3)), Rational(1, 3));
  EXPECT_EQ(lcm(Rational(2, 3), Rational(1, 2)), Rational(2));
  EXPECT_EQ(lcm(Rational(1, 4), Rational(1, 6)), Rational(1, 2));
  EXPECT_THROW(lcm(Rational(0), Rational(1)), std::domain_error);
}

TEST(Interval, Validation) {
  EXPECT_THROW(Interval::make(Rational(1), true, Rational(0), true), interval_error);
  EXPECT_THROW(Interval::make(Rational(1), false, Rational(1), true), interval_error);
  EXPECT_THROW(Interval::make(std::nullopt, true, Rational(0), true), interval_error);
  EXPECT_THROW(Interval::make(Rational(0), true, std::nullopt, true), interval_error);
  EXPECT_NO_THROW(Interval::point(Rational(3)));
}

TEST(IntervalSet, NormalizeMergesTouching) {
  IntervalSet s{Interval::closed_open(0, 1), Interval::closed(1, 2), Interval::open(3, 4), Interval::point(4)};
  EXPECT_EQ(s.to_string(), "[0,2], (3,4]");
  IntervalSet gap{Interval::open(0, 1), Interval::open(1, 2)};
  EXPECT_EQ(gap.size(), 2u);
  EXPECT_FALSE(gap.contains(1));
  IntervalSet empty;
  EXPECT_EQ(empty.to_string(), "{}");
}

TEST(IntervalSet, ComplementOfUnbounded) {
  IntervalSet s{Interval::below(0, true), Interval::point(1), Interval::above(2, false)};
  EXPECT_EQ(complement(s).to_string(), "(0,1), (1,2]");
  EXPECT_EQ(complement(IntervalSet{}).to_string(), "(-inf,inf)");
  EXPECT_TRUE(complement(IntervalSet::of(Interval::all())).empty());
}

TEST(IntervalSet, ParseRoundTrip) {
  for (const char* text : {"{}", "[0,1)", "(-inf,0], [2,2]", "{(1/3,2/3), [1,1]}", "(1,+inf)"}) {
    IntervalSet s = IntervalSet::parse(text);
    EXPECT_EQ(IntervalSet::parse(s.to_string()), s) << text;
  }
  EXPECT_EQ(IntervalSet::parse("[1,1]").to_string(), "[1,1]");
  for (const char* bad : {"[1,0]", "(0,0)", "[0,1", "[-inf,0]", "[0,inf]", "0,1", "[a,1]"})
    EXPECT_THROW(IntervalSet::parse(bad), std::invalid_argument) << bad;
}

TEST(IntervalSet, CardinalityAtLeast) {
  IntervalSet pts{Interval::point(Rational(1, 3)), Interval::point(Rational(2, 3)), Interval::point(1)};
  Interval w = Interval::open(0, 1);
  EXPECT_TRUE(pts.cardinality_at_least(w, 2));
  EXPECT_FALSE(pts.cardinality_at_least(w, 3));
  EXPECT_TRUE(pts.cardinality_at_least(Interval::closed(0, 1), 3));
  IntervalSet stretch{Interval::open(Rational(1, 2), Rational(3, 4))};
  EXPECT_TRUE(stretch.cardinality_at_least(w, 1000));
}

namespace {

std::vector<Rational> probes() {
  std::vector<Rational> out;
  for (long long i = -30; i <= 60; ++i) out.push_back(Rational(i, 24));
  return out;
}

IntervalSet random_unbounded(gen::Rng& rng) {
  IntervalSet s = gen::random_set(rng, Rational(2), 4);
  if (gen::uniform(rng, 0, 3) == 0) s = unite(s, IntervalSet::of(Interval::below(0, false)));
  if (gen::uniform(rng, 0, 3) == 0) s = unite(s, IntervalSet::of(Interval::above(2, true)));
  return s;
}

}  // namespace

TEST(IntervalSetProperties, AlgebraMatchesMembership) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_unbounded(rng), b = random_unbounded(rng);
    IntervalSet u = unite(a, b), i = intersect(a, b), d = difference(a, b), c = complement(a);
    for (const auto& x : probes()) {
      bool ia = a.contains(x), ib = b.contains(x);
      ASSERT_EQ(u.contains(x), ia || ib);
      ASSERT_EQ(i.contains(x), ia && ib);
      ASSERT_EQ(d.contains(x), ia && !ib);
      ASSERT_EQ(c.contains(x), !ia);
    }
  }
}

TEST(IntervalSetProperties, DeMorganAndInvolution) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_unbounded(rng), b = random_unbounded(rng);
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(complement(unite(a, b)), intersect(complement(a), complement(b)));
    EXPECT_EQ(complement(intersect(a, b)), unite(complement(a), complement(b)));
  }
}

TEST(IntervalSetProperties, NormalFormIsUnique) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_unbounded(rng);
    // Rebuild the same point set from a scrambled, overlapping cover.
    std::vector<Interval> pieces;
    for (const auto& c : a.components()) {
      pieces.push_back(c);
      if (c.lo && c.hi && *c.lo < *c.hi) {
        Rational mid = (*c.lo + *c.hi) / Rational(2);
        pieces.push_back(Interval::make(c.lo, c.lo_closed, mid, true));
        pieces.push_back(Interval::make(mid, true, c.hi, c.hi_closed));
      }
    }
    std::shuffle(pieces.begin(), pieces.end(), rng);
    EXPECT_EQ(IntervalSet::normalize(pieces), a);
    for (std::size_t k = 1; k < a.size(); ++k) {
      const Interval& p = a.components()[k - 1];
      const Interval& q = a.components()[k];
      ASSERT_TRUE(*p.hi < *q.lo || (*p.hi == *q.lo && !p.hi_closed && !q.lo_closed));
    }
  }
}

TEST(IntervalSetProperties, ClipEqualsIntersect) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_unbounded(rng);
    long long lo = gen::uniform(rng, -12, 24), hi = gen::uniform(rng, lo, 36);
    bool lc = gen::uniform(rng, 0, 1) || lo == hi, hc = gen::uniform(rng, 0, 1) || lo == hi;
    Interval w = Interval::make(Rational(lo, 12), lc, Rational(hi, 12), hc);
    EXPECT_EQ(a.clip(w), intersect(a, IntervalSet::of(w)));
  }
}

TEST(IntervalSetProperties, CardinalityAntitoneInN) {
  gen::Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_unbounded(rng);
    Rational t(gen::uniform(rng, -12, 24), 12);
    Interval w = Interval::open(t, t + 1);
    for (std::size_t n = 1; n < 6; ++n)
      ASSERT_TRUE(!a.cardinality_at_least(w, n + 1) || a.cardinality_at_least(w, n));
  }
}
