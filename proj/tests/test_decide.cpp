#include <doctest.h>

#include "gen.hpp"
#include "polystab/decide.hpp"
#include "polystab/moduli.hpp"

using namespace polystab;

namespace {

PR P(const char* s) { return PR::parse(s); }

bool truth(const PR& a, const PR& b, const PR& x) { return a >= PR(2) || b >= x; }

}  // namespace

TEST_CASE("decide examples") {
  auto v = decide_stabilized(P("3"), P("3/2"), P("5/2"), 3);
  CHECK(v.embeds == Embeds::No);
  CHECK(v.reason == Reason::Obstruction);
  v = decide_stabilized(P("3"), P("2"), P("2"), 3);
  CHECK(v.embeds == Embeds::Yes);
  CHECK(v.reason == Reason::AGe2);
  v = decide_stabilized(P("3/2"), P("3/2"), P("3/2"), 3);
  CHECK(v.embeds == Embeds::Yes);
  CHECK(v.reason == Reason::BGeX);
  CHECK_THROWS_AS(decide_stabilized(P("3"), P("1/2"), P("5/2"), 3), Error);
  DecideOptions opt;
  opt.cross_check = true;
  CHECK(decide_stabilized(P("3"), P("3/2"), P("5/2"), 3, opt).embeds == Embeds::No);
}

TEST_CASE("Case 1 scaling") {
  auto r = reduce_to_big_x(P("2"), P("3/2"), P("7/4"));
  REQUIRE_FALSE(r.verdict);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].case_no == 1);
  CHECK(r.trace[0].lambda == P("1/8"));
  CHECK(r.x == P("16/7"));
  CHECK(r.a == P("12/7"));
  CHECK(r.b == P("2"));
  const PR s = PR(1) - r.trace[0].lambda;
  CHECK(P("3/2") / s < PR(2));
  CHECK(P("2") / s > PR(2));
  CHECK_THROWS_AS(reduce_to_big_x(P("3"), P("3/2"), P("5/2")), Error);
}

TEST_CASE("Cases 3 and 5 settle by non-squeezing") {
  // target P(lambda, lambda*b) with lambda < 1
  auto r = reduce_to_big_x(P("3/2"), P("9/10"), P("9/5"));  // b/a = 2: Case 3
  REQUIRE(r.verdict);
  CHECK(r.verdict->embeds == Embeds::No);
  CHECK(r.verdict->reason == Reason::NonSqueezing);
  CHECK(r.verdict->trace.back().case_no == 3);
  r = reduce_to_big_x(P("3/2"), P("9/10"), P("27/20"));  // b/a = 3/2 >= x: Case 5
  REQUIRE(r.verdict);
  CHECK(r.verdict->embeds == Embeds::No);
  CHECK(r.verdict->trace.back().case_no == 5);
  r = reduce_to_big_x(P("3/2"), P("1"), P("3/2"));
  REQUIRE(r.verdict);
  CHECK(r.verdict->embeds == Embeds::Yes);
}

TEST_CASE("nonsqueezing") {
  CHECK(nonsqueezing_obstruction(P("1"), P("9/10")));
  CHECK_FALSE(nonsqueezing_obstruction(P("1"), P("1")));
  CHECK_FALSE(nonsqueezing_obstruction(P("2"), P("3")));
  CHECK_THROWS_AS(nonsqueezing_obstruction(P("0"), P("1")), Error);
}

TEST_CASE("Hutchings window") {
  CHECK(hutchings_window_bound(P("1"), P("1")) == P("2"));
  CHECK(hutchings_admissible(P("2"), P("1"), P("1")));
  CHECK_FALSE(hutchings_admissible(P("2~+"), P("1"), P("1")));
  // b/a = 2 + eta: ceiling 3, so 4*3-1 = 11 and the bound is
  // 2*11*(2+eta)/(12+eta) = 11/3 + O(eta)
  PR bound = hutchings_window_bound(P("1"), P("2~+"));
  CHECK(bound.q() == Rational(11, 3));
  CHECK(bound == P("22") * P("2~+") / P("12~+"));
  // b/a = 2 exactly: ceiling 2, bound 2*2/(1+1/7) = 7/2
  CHECK(hutchings_window_bound(P("1"), P("2")) == P("7/2"));
  CHECK(hutchings_admissible(P("3"), P("1"), P("2~+")));
  CHECK(hutchings_admissible(P("1"), P("3/2"), P("7/3")));
  for (int num = 10; num <= 100; ++num) {
    PR beta(Rational(num, 10));
    CHECK(hutchings_window_bound(P("1"), beta) >= P("2"));
  }
}

TEST_CASE("4d mode") {
  CHECK(decide_4d(P("3/2"), P("1"), P("5/4")).reason == Reason::HutchingsWindow);
  CHECK(decide_4d(P("3/2"), P("1"), P("5/4")).embeds == Embeds::No);
  CHECK(decide_4d(P("3"), P("3/2"), P("5/2")).embeds == Embeds::No);
  CHECK(decide_4d(P("3"), P("1"), P("3")).embeds == Embeds::Yes);
  CHECK(decide_4d(P("5"), P("2"), P("3")).embeds == Embeds::Unknown);
}

TEST_CASE("embedding function") {
  auto f = embedding_function(P("3"), P("3/2"));
  CHECK(f.exact());
  CHECK(f.lower == P("3"));
  f = embedding_function(P("3"), P("2"));
  CHECK_FALSE(f.upper);
  CHECK(f.lower == P("2"));
  CHECK(f.reason == Reason::FoldingRegime);
  CHECK(embedding_function(P("1"), P("1")).lower == P("1"));
}

TEST_CASE("property: grid truth table, monotonicity, scaling, reduction") {
  std::vector<PR> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(PR(1) + PR(Rational(i, 5)));  // 1 .. 4.8
  for (const auto& x : grid)
    for (const auto& a : grid)
      for (const auto& b : grid) {
        if (b < a) continue;
        auto v = decide_stabilized(x, a, b, 3);
        CHECK((v.embeds == Embeds::Yes) == truth(a, b, x));
        if (v.embeds == Embeds::Yes) {
          CHECK(decide_stabilized(x, a, b + P("1/5"), 3).embeds == Embeds::Yes);
          if (x - P("1/5") >= PR(1)) CHECK(decide_stabilized(x - P("1/5"), a, b, 3).embeds == Embeds::Yes);
        }
        // source scaled by lambda, then renormalized to capacity 1
        PR lambda = P("7/3");
        PR sx = lambda * x, sa = lambda * a, sb = lambda * b;
        CHECK(decide_stabilized(sx / lambda, sa / lambda, sb / lambda, 3).embeds == v.embeds);
        if (x <= PR(2) && a < PR(2)) {
          auto r = reduce_to_big_x(x, a, b);
          Embeds via = r.verdict ? r.verdict->embeds : decide_stabilized(r.x, r.a, r.b, 3).embeds;
          CHECK(via == v.embeds);
          auto replay = replay_trace(r.trace, x, a, b);
          if (!r.verdict) {
            CHECK(replay[0] == r.x);
            CHECK(replay[1] == r.a);
            CHECK(replay[2] == r.b);
            CHECK(r.x > PR(2));
            CHECK(r.a < PR(2));
          }
        }
      }
}

TEST_CASE("engine agrees with the verdict on a grid with b < x") {
  for (const char* x : {"5/2", "3", "7/2"})
    for (const char* a : {"1", "5/4", "3/2"})
      for (const char* b : {"3/2", "2", "9/4"}) {
        PR px = P(x), pa = P(a), pb = P(b);
        if (pb < pa || !(pb < px)) continue;
        CAPTURE(x);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(decide_stabilized(px, pa, pb, 3).embeds == Embeds::No);
        CHECK(contradiction_check(select_regime(3, px, pa, pb)).contradiction);
      }
}
