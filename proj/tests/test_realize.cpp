#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsurf/constructions.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/realize.hpp"

using namespace tsurf;

namespace {

std::shared_ptr<const Surface> shared(SurfaceSpec spec) { return std::make_shared<const Surface>(spec); }

// Hand solution on the 4/3-stretched four-square surface: red touches itself
// across the unit-width top square, orange and blue are sized so every contact
// of c3 survives.
std::vector<SurfaceCircle> stretched_solution() {
  return {{0, SurfacePoint::at(0, {0.5, 2.0}), 0.5},
          {1, SurfacePoint::at(0, {0.5, 2.0 / 3.0}), 5.0 / 6.0},
          {2, SurfacePoint::at(0, {2.0, 2.0 / 3.0}), 2.0 / 3.0}};
}

}  // namespace

TEST_CASE("reference configurations have zero residual") {
  const Packing c3 = c3_packing();
  const RealizationProblem own = problem_from_packing(c3.surface, c3);
  CHECK(residual_norm(own, c3.circles) < 1e-12);

  const auto stretched = shared(four_square_surface(4.0 / 3.0));
  const RealizationProblem p = problem_from_packing(stretched, c3);
  CHECK(residual_norm(p, stretched_solution()) < 1e-12);
  const Packing hand = make_packing(stretched->spec(), stretched_solution());
  CHECK(check_packing(hand).ok);
  CHECK(equivalent(hand, c3).equivalent);
}

TEST_CASE("shrinking a solution raises the residual") {
  const auto stretched = shared(four_square_surface(4.0 / 3.0));
  const RealizationProblem p = problem_from_packing(stretched, c3_packing());
  auto circles = stretched_solution();
  const double base = residual_norm(p, circles);
  for (size_t i = 0; i < circles.size(); ++i) {
    auto shrunk = circles;
    shrunk[i].radius -= 10 * kDefaultTol;
    CHECK(residual_norm(p, shrunk) > base);
  }
}

TEST_CASE("c3 is found again on its own surface") {
  const Packing c3 = c3_packing();
  RealizeOptions opt;
  opt.attempts = 8;
  opt.seed = 3;
  const RealizationResult r = solve(problem_from_packing(c3.surface, c3), opt);
  REQUIRE(r.found);
  CHECK(r.residual <= 1e-8);
  REQUIRE(r.packing);
  CHECK(check_packing(*r.packing).ok);
  CHECK(equivalent(*r.packing, c3).equivalent);
  CHECK(r.log.size() == 8);
}

TEST_CASE("attempt logs do not depend on the thread count") {
  const auto stretched = shared(four_square_surface(4.0 / 3.0));
  const RealizationProblem p = problem_from_packing(stretched, c3_packing());
  RealizeOptions opt;
  opt.attempts = 6;
  opt.seed = 11;
  opt.threads = 1;
  const RealizationResult a = solve(p, opt);
  opt.threads = 3;
  const RealizationResult b = solve(p, opt);
  REQUIRE(a.log.size() == b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].residual == b.log[i].residual);
    CHECK(a.log[i].iterations == b.log[i].iterations);
    for (size_t k = 0; k < a.log[i].circles.size(); ++k)
      CHECK(a.log[i].circles[k].radius == b.log[i].circles[k].radius);
  }
  CHECK(a.found == b.found);
  CHECK(a.best_attempt == b.best_attempt);
}

TEST_CASE("invalid targets are reported, not thrown") {
  const Packing c3 = c3_packing();
  RealizationProblem p = problem_from_packing(c3.surface, c3);
  p.cone_centers[0] = 7;
  RealizeOptions opt;
  opt.attempts = 2;
  const RealizationResult r = solve(p, opt);
  CHECK_FALSE(r.found);
  CHECK_FALSE(r.diagnostic.empty());

  RealizationProblem empty;
  empty.surface = c3.surface;
  CHECK_FALSE(solve(empty, opt).found);

  opt.attempts = 0;
  CHECK_THROWS_AS(solve(problem_from_packing(c3.surface, c3), opt), DomainError);
}
