#include <gtest/gtest.h>

#include "omegastar/ep_set.hpp"
#include "support.hpp"

using namespace omegastar;
using support::Word;

namespace {

const Int kSeedCount = 300;

}  // namespace

TEST(EpSet, MakeCanonicalizes) {
  const auto e = EpSet::make({}, {true, false});
  EXPECT_EQ(e, EpSet::evens());
  EXPECT_EQ(e.period(), 2);
  EXPECT_EQ(e.threshold(), 0);

  const auto r = EpSet::make({}, {true, false, true, false});
  EXPECT_EQ(r.period(), 2);
  EXPECT_EQ(r, EpSet::evens());

  // {1, 2, 3, …}
  const auto c = EpSet::make({false, true}, {true});
  EXPECT_TRUE(c.is_cofinite());
  EXPECT_FALSE(c.contains(0));
  for (Int n = 1; n < 50; ++n) EXPECT_TRUE(c.contains(n));
  EXPECT_EQ(c.threshold(), 1);
  EXPECT_EQ(c.period(), 1);
}

TEST(EpSet, EmptyPatternRejected) { EXPECT_THROW(EpSet::make({true}, {}), std::invalid_argument); }

TEST(EpSet, AbsorbsRotatedTail) {
  // prefix 0 then (10)* is the odds
  EXPECT_EQ(EpSet::make({false}, {true, false}), EpSet::odds());
  EXPECT_EQ(EpSet::make({true, false, true}, {false, true}), EpSet::evens());
}

TEST(EpSet, BooleanExamples) {
  EXPECT_EQ(set_union(EpSet::evens(), EpSet::odds()), EpSet::all());
  EXPECT_EQ(intersect(EpSet::evens(), EpSet::odds()), EpSet::empty());
  EXPECT_EQ(difference(EpSet::all(), EpSet::evens()), EpSet::odds());
  EXPECT_EQ(EpSet::empty().period(), 1);
  EXPECT_EQ(EpSet::all().period(), 1);
}

TEST(EpSet, ShiftExamples) {
  EXPECT_EQ(shift_up(EpSet::evens(), 1), EpSet::odds());
  const auto d1 = shift_up(EpSet::odds(), 1);
  for (Int n = 0; n <= 100; ++n) EXPECT_EQ(d1.contains(n), n >= 2 && n % 2 == 0) << n;
}

TEST(EpSet, PredicateExamples) {
  EXPECT_TRUE(EpSet::evens().is_infinite());
  const std::vector<Int> few{0, 2, 4};
  EXPECT_TRUE(almost_equal(EpSet::evens(), symmetric_difference(EpSet::evens(), EpSet::finite(few))));
  EXPECT_FALSE(almost_subset(EpSet::odds(), EpSet::evens()));
  EXPECT_TRUE(almost_subset(EpSet::residue_class(4, 2), EpSet::evens()));
}

TEST(EpSet, EnumerateExamples) {
  EXPECT_EQ(EpSet::evens().enumerate(3), 6);
  EXPECT_EQ(EpSet::odds().enumerate(0), 1);
  const std::vector<Int> few{3, 9};
  EXPECT_EQ(EpSet::finite(few).enumerate(1), 9);
  EXPECT_THROW(EpSet::finite(few).enumerate(2), std::out_of_range);
}

TEST(EpSet, ToString) {
  EXPECT_EQ(to_string(EpSet::evens()), "|10");
  EXPECT_EQ(to_string(EpSet::make({false, true}, {true})), "0|1");
}

// ---- properties against raw words

TEST(EpSetProperty, MembershipMatchesWord) {
  support::Rng rng(1);
  for (Int i = 0; i < kSeedCount; ++i) {
    const Word w = support::random_word(rng);
    const EpSet a = w.set();
    for (Int n = 0; n < 10 * (a.threshold() + a.period()) + 40; ++n) ASSERT_EQ(a.contains(n), w.member(n)) << n;
  }
}

TEST(EpSetProperty, CanonicalFormIsMinimalAndIdempotent) {
  support::Rng rng(2);
  for (Int i = 0; i < kSeedCount; ++i) {
    const EpSet a = support::random_word(rng).set();
    EXPECT_EQ(EpSet::make(a.prefix(), a.pattern()), a);
    // No shorter period describes the tail.
    const Int p = a.period();
    for (Int q = 1; q < p; ++q) {
      if (p % q) continue;
      bool periodic = true;
      for (Int j = 0; j < p; ++j) periodic &= a.pattern()[static_cast<std::size_t>(j)] == a.pattern()[static_cast<std::size_t>(j % q)];
      EXPECT_FALSE(periodic);
    }
    // Threshold cannot drop: the last prefix bit differs from the last pattern bit.
    if (a.threshold() > 0) EXPECT_NE(a.prefix().back(), a.pattern().back());
  }
}

TEST(EpSetProperty, StructuralEqualityIsSetEquality) {
  support::Rng rng(3);
  for (Int i = 0; i < kSeedCount; ++i) {
    const Word u = support::random_word(rng, 3, 3), v = support::random_word(rng, 3, 3);
    bool same = true;
    for (Int n = 0; n < 60; ++n) same &= u.member(n) == v.member(n);
    EXPECT_EQ(u.set() == v.set(), same);
  }
}

TEST(EpSetProperty, OperationsMatchPointwise) {
  support::Rng rng(4);
  for (Int i = 0; i < kSeedCount; ++i) {
    const Word u = support::random_word(rng), v = support::random_word(rng);
    const EpSet a = u.set(), b = v.set();
    const EpSet un = set_union(a, b), in = intersect(a, b), co = complement(a), di = difference(a, b),
                sd = symmetric_difference(a, b);
    const Int k = support::uniform(rng, 0, 7);
    const EpSet up = shift_up(a, k), down = shift_down(a, k);
    for (Int n = 0; n < 200; ++n) {
      ASSERT_EQ(un.contains(n), u.member(n) || v.member(n));
      ASSERT_EQ(in.contains(n), u.member(n) && v.member(n));
      ASSERT_EQ(co.contains(n), !u.member(n));
      ASSERT_EQ(di.contains(n), u.member(n) && !v.member(n));
      ASSERT_EQ(sd.contains(n), u.member(n) != v.member(n));
      ASSERT_EQ(up.contains(n), n >= k && u.member(n - k));
      ASSERT_EQ(down.contains(n), u.member(n + k));
    }
    EXPECT_EQ(lcm(a.period(), b.period()) % un.period(), 0);
    EXPECT_EQ(lcm(a.period(), b.period()) % in.period(), 0);
  }
}

TEST(EpSetProperty, BooleanAlgebraLaws) {
  support::Rng rng(5);
  for (Int i = 0; i < kSeedCount; ++i) {
    const EpSet a = support::random_word(rng).set(), b = support::random_word(rng).set(),
                c = support::random_word(rng).set();
    EXPECT_EQ(set_union(a, set_union(b, c)), set_union(set_union(a, b), c));
    EXPECT_EQ(intersect(a, intersect(b, c)), intersect(intersect(a, b), c));
    EXPECT_EQ(intersect(a, set_union(b, c)), set_union(intersect(a, b), intersect(a, c)));
    EXPECT_EQ(set_union(a, intersect(b, c)), intersect(set_union(a, b), set_union(a, c)));
    EXPECT_EQ(complement(set_union(a, b)), intersect(complement(a), complement(b)));
    EXPECT_EQ(complement(intersect(a, b)), set_union(complement(a), complement(b)));
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(shift_down(shift_up(a, 1), 1), a);
    EXPECT_EQ(shift_up(set_union(a, b), 1), set_union(shift_up(a, 1), shift_up(b, 1)));
    EXPECT_EQ(shift_up(intersect(a, b), 1), intersect(shift_up(a, 1), shift_up(b, 1)));
    EXPECT_EQ(shift_up(a, 1) == shift_up(b, 1), a == b);
  }
}

TEST(EpSetProperty, PredicatesMatchPointwise) {
  support::Rng rng(6);
  for (Int i = 0; i < kSeedCount; ++i) {
    const Word u = support::random_word(rng), v = support::random_word(rng);
    const EpSet a = u.set(), b = v.set();
    // Beyond both thresholds, membership is periodic with the lcm period.
    const Int from = 20, span = 4;
    const Int l = lcm(static_cast<Int>(u.pattern.size()), static_cast<Int>(v.pattern.size()));
    bool any = false, all = true, eq = true, sub = true;
    for (Int n = from; n < from + l * span; ++n) {
      any |= u.member(n);
      all &= u.member(n);
      eq &= u.member(n) == v.member(n);
      sub &= !u.member(n) || v.member(n);
    }
    EXPECT_EQ(a.is_infinite(), any);
    EXPECT_EQ(a.is_cofinite(), all);
    EXPECT_EQ(almost_equal(a, b), eq);
    EXPECT_EQ(almost_subset(a, b), sub);
  }
}

TEST(EpSetProperty, EnumerationAndCounting) {
  support::Rng rng(7);
  for (Int i = 0; i < 20; ++i) {
    const Word w = support::infinite_word(rng);
    const EpSet a = w.set();
    std::vector<Int> listed;
    for (Int n = 0; static_cast<Int>(listed.size()) < 1100; ++n)
      if (w.member(n)) listed.push_back(n);
    for (Int j = 0; j < 1000; ++j) ASSERT_EQ(a.enumerate(j), listed[static_cast<std::size_t>(j)]);
    const Int d = a.ones_per_period();
    for (Int j = a.ones_in_prefix(); j < 1000; ++j) ASSERT_EQ(a.enumerate(j + d) - a.enumerate(j), a.period());
    Int below = 0;
    for (Int n = 0; n < 300; ++n) {
      ASSERT_EQ(a.count_below(n), below);
      const auto next = a.next_at_or_after(n);
      ASSERT_TRUE(next);
      ASSERT_EQ(*next, *std::lower_bound(listed.begin(), listed.end(), n));
      below += w.member(n);
    }
  }
}

TEST(EpSetProperty, FiniteSets) {
  support::Rng rng(8);
  for (Int i = 0; i < 100; ++i) {
    std::vector<Int> xs;
    for (Int k = support::uniform(rng, 0, 8); k > 0; --k) xs.push_back(support::uniform(rng, 0, 40));
    const EpSet f = EpSet::finite(xs);
    EXPECT_FALSE(f.is_infinite());
    for (Int n = 0; n < 60; ++n) EXPECT_EQ(f.contains(n), std::count(xs.begin(), xs.end(), n) > 0);
    EXPECT_EQ(f.next_at_or_after(41), std::nullopt);
  }
}
