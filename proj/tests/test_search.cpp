#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsurf/errors.hpp"
#include "tsurf/search.hpp"

using namespace tsurf;

TEST_CASE("octagon from four sides") {
  const std::array<Vec2, 4> regular{unit(0), unit(kPi / 4), unit(kPi / 2), unit(3 * kPi / 4)};
  const SurfaceAnalysis a = analyze(octagon_surface(regular));
  CHECK(a.stratum == std::vector<int>{2});
  CHECK(a.genus == 2);
  CHECK(concavities(regular) == 0);
  // v2 turns back: one reflex corner pair
  const std::array<Vec2, 4> bent{unit(0), unit(1.2), unit(0.6), unit(2.5)};
  CHECK(concavities(bent) == 2);
}

TEST_CASE("trials must be positive") {
  CHECK_THROWS_AS(run_search(0, 7, CircleStrategy::one_cone_circle), DomainError);
  CHECK_THROWS_AS(strategy_from_string("three_circles"), DomainError);
  CHECK(strategy_from_string("two_circles") == CircleStrategy::two_circles);
}

TEST_CASE("every trial is accounted for and bounds hold") {
  for (auto s : {CircleStrategy::one_cone_circle, CircleStrategy::two_circles,
                 CircleStrategy::cone_plus_regular}) {
    CAPTURE(to_string(s));
    const SearchReport r = run_search(400, 7, s);
    CHECK(r.discarded + r.rejected + r.accepted == 400);
    CHECK(r.by_concavities[0] + r.by_concavities[1] + r.by_concavities[2] == r.accepted);
    CHECK(r.accepted > 0);
    CHECK(r.max_multiedges_found <= 8);
    CHECK(r.max_multiloops_found <= 9);
    if (r.argmax_multiloops) {
      CHECK(r.argmax_multiloops->stats.max_loops == r.max_multiloops_found);
      CHECK(analyze(r.argmax_multiloops->packing.surface->spec()).stratum == std::vector<int>{2});
    }
  }
}

TEST_CASE("injected constructions reach the bounds exactly") {
  SearchOptions opt;
  opt.inject_extremal = true;
  const SearchReport r = run_search(50, 1, CircleStrategy::cone_plus_regular, opt);
  CHECK(r.injected == 2);
  CHECK(r.max_multiedges_found == 8);
  CHECK(r.max_multiloops_found == 9);
  REQUIRE(r.argmax_multiloops);
  CHECK(r.argmax_multiloops->source == "nine-loops");
  CHECK(r.argmax_multiloops->concavities == 2);
  CHECK(r.argmax_multiedges->source == "edges-min");
}

TEST_CASE("reports do not depend on the thread count") {
  SearchOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const SearchReport a = run_search(300, 42, CircleStrategy::two_circles, one);
  const SearchReport b = run_search(300, 42, CircleStrategy::two_circles, many);
  CHECK(a.discarded == b.discarded);
  CHECK(a.rejected == b.rejected);
  CHECK(a.max_multiedges_found == b.max_multiedges_found);
  CHECK(a.by_concavities == b.by_concavities);
  REQUIRE(a.argmax_multiedges.has_value() == b.argmax_multiedges.has_value());
  if (a.argmax_multiedges) {
    CHECK(a.argmax_multiedges->trial == b.argmax_multiedges->trial);
    CHECK(a.argmax_multiedges->packing.circles[1].radius == b.argmax_multiedges->packing.circles[1].radius);
  }
}
