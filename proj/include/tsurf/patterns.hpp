// Tangency segments, their intersection pattern, and packing equivalence.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/contacts.hpp"

namespace tsurf {

/// Part of a segment inside one disk: the chord between two angular
/// positions of the circle. On a cone-centered circle a chord spanning at
/// least a straight angle runs through the center.
struct Chord {
  int circle = 0;
  double from = 0.0;
  double to = 0.0;
};

struct TangencySegment {
  int id = 0;
  int a = 0;  // circle pair, a <= b
  int b = 0;
  std::array<int, 2> endpoints{};  // tangency ids; equal for a self-chord
  std::vector<Chord> chords;
};

struct TangencyPattern {
  std::vector<TangencySegment> segments;
  std::vector<std::array<int, 2>> intersecting;  // segment ids, sorted pairs
  bool ambiguous = false;  // some pair has three or more tangency points
};

std::vector<TangencySegment> compute_segments(const Packing& packing,
                                              const std::vector<TangencyPoint>& tangencies,
                                              bool* ambiguous = nullptr);

TangencyPattern compute_pattern(const Packing& packing,
                                const std::vector<TangencyPoint>& tangencies);
TangencyPattern compute_pattern(const Packing& packing, double tol = kDefaultTol);

/// Whether two chords of the same circle meet. `total` is the circle's full
/// angle (2π, or the cone angle).
bool chords_meet(const Chord& p, const Chord& q, double total);

/// Combinatorial data that equivalence compares: the contacts multigraph and
/// the intersection relation of segments keyed by circle pair.
struct PackingSignature {
  int circles = 0;
  std::vector<std::array<int, 2>> edges;     // circle pairs, one per tangency point
  std::vector<std::array<int, 2>> segments;  // circle pair of each segment
  std::vector<std::array<int, 2>> intersecting;
  bool ambiguous = false;
};

PackingSignature signature(const Packing& packing, double tol = kDefaultTol);
PackingSignature signature(const Packing& packing, const ContactsGraph& graph,
                           const TangencyPattern& pattern);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<std::vector<int>> witness;  // circle i of the first -> witness[i]
  std::string reason;                       // "", "graph mismatch", "pattern mismatch"
  bool ambiguous = false;
};

EquivalenceResult equivalent(const PackingSignature& p, const PackingSignature& q);
EquivalenceResult equivalent(const Packing& p, const Packing& q, double tol = kDefaultTol);

}  // namespace tsurf
