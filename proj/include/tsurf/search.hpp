// Randomized search for large multi-loop / multi-edge counts on genus-2
// surfaces with a single cone point, presented as centrally symmetric octagons.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/contacts.hpp"

namespace tsurf {

/// Octagon with sides v1, v2, v3, v4, -v1, -v2, -v3, -v4, opposite sides paired.
SurfaceSpec octagon_surface(const std::array<Vec2, 4>& sides);

/// Number of reflex corners of the octagon (0, 2 or 4 for a simple one).
int concavities(const std::array<Vec2, 4>& sides);

enum class CircleStrategy { one_cone_circle, two_circles, cone_plus_regular };

std::string to_string(CircleStrategy s);
CircleStrategy strategy_from_string(const std::string& name);

struct SearchSample {
  int trial = -1;  // negative for injected constructions
  std::string source;  // "random", or the injected construction's name
  std::array<Vec2, 4> sides{};
  int concavities = 0;
  Packing packing;
  GraphStats stats;
};

struct SearchOptions {
  int threads = 0;
  /// Also evaluate the known extremal packings as forced trials.
  bool inject_extremal = false;
  double tol = kDefaultTol;
};

struct SearchReport {
  int trials = 0;
  std::uint64_t seed = 0;
  CircleStrategy strategy = CircleStrategy::one_cone_circle;
  int discarded = 0;  // octagon rejected: not simple, or stratum other than {2}
  int rejected = 0;   // circle configuration inadmissible or not developable
  int accepted = 0;
  int injected = 0;
  std::array<int, 3> by_concavities{};  // accepted trials with 0, 2, 4 concavities
  int max_multiedges_found = 0;
  int max_multiloops_found = 0;
  std::optional<SearchSample> argmax_multiedges;
  std::optional<SearchSample> argmax_multiloops;
};

/// Throws DomainError when trials <= 0.
SearchReport run_search(int trials, std::uint64_t seed, CircleStrategy strategy,
                        const SearchOptions& options = {});

}  // namespace tsurf
