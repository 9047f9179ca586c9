#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtlog/interval.hpp"

#include <random>

#include "support.hpp"

using namespace mtlog;
using namespace testsupport;

namespace {

IntervalSet s(std::initializer_list<Interval> parts) { return IntervalSet::of(parts); }

}  // namespace

TEST_CASE("time bounds are totally ordered with infinities at the ends") {
  CHECK(TimeBound::neg_inf() < TimeBound::finite(-1'000'000));
  CHECK(TimeBound::finite(-1'000'000) < TimeBound::finite(0));
  CHECK(TimeBound::finite(0) < TimeBound::pos_inf());
  CHECK(TimeBound::neg_inf() < TimeBound::pos_inf());
  CHECK(TimeBound::finite(3) == TimeBound::finite(3));
  CHECK(TimeBound::neg_inf() == TimeBound::neg_inf());
}

TEST_CASE("interval normalization onto the integers") {
  auto open_both = Interval::make(TimeBound::finite(0), false, TimeBound::finite(2), false);
  REQUIRE(open_both.has_value());
  CHECK(*open_both == Interval::point(1));

  auto half_open = Interval::make(TimeBound::finite(0), false, TimeBound::finite(2), true);
  REQUIRE(half_open.has_value());
  CHECK(*half_open == Interval::closed(1, 2));

  CHECK(!Interval::make(TimeBound::finite(2), false, TimeBound::finite(3), false).has_value());
  CHECK(!Interval::make(TimeBound::finite(5), true, TimeBound::finite(3), true).has_value());
  CHECK(!Interval::make(TimeBound::neg_inf(), true, TimeBound::finite(3), true).has_value());
  CHECK(!Interval::make(TimeBound::finite(3), true, TimeBound::pos_inf(), true).has_value());

  auto full = Interval::make(TimeBound::neg_inf(), false, TimeBound::pos_inf(), false);
  REQUIRE(full.has_value());
  CHECK(*full == Interval::full());
}

TEST_CASE("contains") {
  CHECK(IntervalSet(Interval::closed(0, 5)).contains(3));
  CHECK(!IntervalSet().contains(0));
  CHECK(IntervalSet::full().contains(-1'000'000));
  IntervalSet two = s({Interval::closed(0, 1), Interval::closed(4, 5)});
  CHECK(two.contains(0));
  CHECK(!two.contains(2));
  CHECK(two.contains(4));
}

TEST_CASE("union merges integer-adjacent intervals") {
  CHECK(set_union(IntervalSet(Interval::closed(0, 2)), IntervalSet(Interval::closed(3, 5))) ==
        IntervalSet(Interval::closed(0, 5)));
  CHECK(set_intersect(IntervalSet(Interval::closed(0, 5)), IntervalSet(Interval::closed(3, 9))) ==
        IntervalSet(Interval::closed(3, 5)));
  CHECK(set_complement(IntervalSet::full()) == IntervalSet());
  CHECK(set_complement(IntervalSet()) == IntervalSet::full());
  CHECK(set_complement(IntervalSet(Interval::closed(0, 2))) ==
        s({Interval::at_most(-1), Interval::at_least(3)}));
}

TEST_CASE("dilate past") {
  CHECK(dilate_past(IntervalSet(Interval::point(8)), Interval::closed(0, 6)) ==
        IntervalSet(Interval::closed(8, 14)));
  CHECK(dilate_past(IntervalSet(), Interval::closed(0, 3)) == IntervalSet());
  CHECK(dilate_past(s({Interval::closed(0, 1), Interval::point(10)}), Interval::closed(2, 3)) ==
        s({Interval::closed(2, 4), Interval::closed(12, 13)}));
  CHECK(dilate_past(IntervalSet(Interval::closed(3, 5)),
                    Interval::from_bounds(TimeBound::finite(0), TimeBound::pos_inf())) ==
        IntervalSet(Interval::at_least(3)));
}

TEST_CASE("dilate future") {
  CHECK(dilate_future(IntervalSet(Interval::point(8)), Interval::closed(0, 6)) ==
        IntervalSet(Interval::closed(2, 8)));
  CHECK(dilate_future(IntervalSet(), Interval::closed(0, 6)) == IntervalSet());
  CHECK(dilate_future(IntervalSet::full(), Interval::point(1)) == IntervalSet::full());
}

TEST_CASE("erode past") {
  CHECK(erode_past(IntervalSet(Interval::closed(0, 10)), Interval::closed(1, 2)) ==
        IntervalSet(Interval::closed(2, 11)));
  CHECK(erode_past(IntervalSet::full(), Interval::closed(1, 2)) == IntervalSet::full());
  CHECK(erode_past(IntervalSet(Interval::closed(0, 3)), Interval::point(0)) ==
        IntervalSet(Interval::closed(0, 3)));
  // a bounded window never fits inside a set requiring infinitely much past
  CHECK(erode_past(IntervalSet(Interval::closed(0, 10)),
                   Interval::from_bounds(TimeBound::finite(0), TimeBound::pos_inf())) == IntervalSet());
  CHECK(erode_past(IntervalSet(Interval::at_most(5)),
                   Interval::from_bounds(TimeBound::finite(0), TimeBound::pos_inf())) ==
        IntervalSet(Interval::at_most(5)));
}

TEST_CASE("erode future") {
  CHECK(erode_future(IntervalSet(Interval::closed(0, 10)), Interval::closed(1, 2)) ==
        IntervalSet(Interval::closed(-1, 8)));
  CHECK(erode_future(IntervalSet(), Interval::closed(1, 2)) == IntervalSet());
  CHECK(erode_future(IntervalSet(Interval::closed(0, 3)), Interval::point(0)) ==
        IntervalSet(Interval::closed(0, 3)));
}

TEST_CASE("since") {
  CHECK(since_set(IntervalSet(Interval::closed(1, 2)), IntervalSet(Interval::point(0)),
                  Interval::closed(0, 3)) == IntervalSet(Interval::closed(0, 3)));
  CHECK(since_set(IntervalSet(Interval::closed(1, 2)), IntervalSet(), Interval::closed(0, 3)) ==
        IntervalSet());
  // The strict interior (t', t) is empty for t in {t', t'+1}, so a lone
  // witness validates both points even with an empty left operand.
  CHECK(since_set(IntervalSet(), IntervalSet(Interval::point(5)), Interval::closed(0, 2)) ==
        IntervalSet(Interval::closed(5, 6)));
  CHECK(since_set(IntervalSet::full(), IntervalSet(Interval::point(0)),
                  Interval::from_bounds(TimeBound::finite(0), TimeBound::pos_inf())) ==
        IntervalSet(Interval::at_least(0)));
}

TEST_CASE("until") {
  CHECK(until_set(IntervalSet(Interval::closed(3, 4)), IntervalSet(Interval::point(5)),
                  Interval::closed(0, 3)) == IntervalSet(Interval::closed(2, 5)));
  CHECK(until_set(IntervalSet(Interval::closed(3, 4)), IntervalSet(), Interval::closed(0, 3)) ==
        IntervalSet());
  CHECK(until_set(IntervalSet(), IntervalSet(Interval::point(0)), Interval::point(1)) ==
        IntervalSet(Interval::point(-1)));
}

TEST_CASE("random sets: set algebra agrees with pointwise membership") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 300; ++round) {
    IntervalSet a = random_bounded_set(rng, -8, 8);
    IntervalSet b = random_bounded_set(rng, -8, 8);
    IntervalSet u = set_union(a, b);
    IntervalSet n = set_intersect(a, b);
    IntervalSet c = set_complement(a);
    IntervalSet d = set_difference(a, b);
    for (TimePoint t = -10; t <= 10; ++t) {
      CAPTURE(a.to_string());
      CAPTURE(b.to_string());
      CAPTURE(t);
      CHECK(u.contains(t) == (a.contains(t) || b.contains(t)));
      CHECK(n.contains(t) == (a.contains(t) && b.contains(t)));
      CHECK(c.contains(t) == !a.contains(t));
      CHECK(d.contains(t) == (a.contains(t) && !b.contains(t)));
    }
    // re-normalizing any output is the identity
    std::vector<Interval> parts(u.parts().begin(), u.parts().end());
    CHECK(IntervalSet::of(parts) == u);
    CHECK(is_subset(n, a));
    CHECK(is_subset(a, u));
  }
}

TEST_CASE("random sets: temporal transforms agree with the pointwise oracle") {
  std::mt19937_64 rng(77001);
  for (int round = 0; round < 350; ++round) {
    IntervalSet s1 = random_tailed_set(rng, -6, 9);
    IntervalSet s2 = random_tailed_set(rng, -6, 9);
    Interval d = random_delta(rng, 4, true);
    IntervalSet dp = dilate_past(s2, d);
    IntervalSet df = dilate_future(s2, d);
    IntervalSet ep = erode_past(s2, d);
    IntervalSet ef = erode_future(s2, d);
    IntervalSet sn = since_set(s1, s2, d);
    IntervalSet un = until_set(s1, s2, d);
    for (TimePoint t = -14; t <= 17; ++t) {
      CAPTURE(s1.to_string());
      CAPTURE(s2.to_string());
      CAPTURE(d.to_string());
      CAPTURE(t);
      CHECK(dp.contains(t) == oracle_dilate_past_at(s2, d, t));
      CHECK(df.contains(t) == oracle_dilate_future_at(s2, d, t));
      CHECK(ep.contains(t) == oracle_erode_past_at(s2, d, t));
      CHECK(ef.contains(t) == oracle_erode_future_at(s2, d, t));
      CHECK(sn.contains(t) == oracle_since_at(s1, s2, d, t));
      CHECK(un.contains(t) == oracle_until_at(s1, s2, d, t));
    }
  }
}

TEST_CASE("erosion is the complement-dual of dilation") {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 200; ++round) {
    IntervalSet a = random_bounded_set(rng, -7, 7);
    Interval d = random_delta(rng, 4, true);
    CHECK(erode_past(a, d) == set_complement(dilate_past(set_complement(a), d)));
    CHECK(erode_future(a, d) == set_complement(dilate_future(set_complement(a), d)));
  }
}

TEST_CASE("future transforms are reflections of past transforms") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 200; ++round) {
    IntervalSet a = random_bounded_set(rng, -7, 7);
    Interval d = random_delta(rng, 4);
    CHECK(dilate_future(a, d) == reflect(dilate_past(reflect(a), d)));
    CHECK(erode_future(a, d) == reflect(erode_past(reflect(a), d)));
    CHECK(reflect(reflect(a)) == a);
    CHECK(shift(shift(a, 3), -3) == a);
  }
}

TEST_CASE("transforms are monotone in every set argument") {
  std::mt19937_64 rng(90210);
  for (int round = 0; round < 150; ++round) {
    IntervalSet small = random_bounded_set(rng, -6, 6, 30);
    IntervalSet big = set_union(small, random_bounded_set(rng, -6, 6, 30));
    IntervalSet other = random_bounded_set(rng, -6, 6);
    Interval d = random_delta(rng, 3, true);
    CHECK(is_subset(dilate_past(small, d), dilate_past(big, d)));
    CHECK(is_subset(dilate_future(small, d), dilate_future(big, d)));
    CHECK(is_subset(erode_past(small, d), erode_past(big, d)));
    CHECK(is_subset(erode_future(small, d), erode_future(big, d)));
    CHECK(is_subset(since_set(small, other, d), since_set(big, other, d)));
    CHECK(is_subset(since_set(other, small, d), since_set(other, big, d)));
    CHECK(is_subset(until_set(small, other, d), until_set(big, other, d)));
    CHECK(is_subset(until_set(other, small, d), until_set(other, big, d)));
  }
}

TEST_CASE("printing round-trips through the canonical forms") {
  CHECK(Interval::closed(0, 5).to_string() == "[0,5]");
  CHECK(Interval::at_least(2).to_string() == "[2,+inf)");
  CHECK(Interval::at_most(-3).to_string() == "(-inf,-3]");
  CHECK(Interval::full().to_string() == "(-inf,+inf)");
  CHECK(s({Interval::closed(0, 1), Interval::point(5)}).to_string() == "[0,1];[5,5]");
  CHECK(IntervalSet().to_string() == "");
}
