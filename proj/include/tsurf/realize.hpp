// Numerical realization of a contacts graph and tangency pattern on a given
// surface by multistart Levenberg-Marquardt.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/patterns.hpp"

namespace tsurf {

struct RealizationProblem {
  std::shared_ptr<const Surface> surface;
  /// Target graph and pattern; circle i of the target is unknown i.
  PackingSignature target;
  /// Per circle: cone point id its center is pinned to, or -1 for a free center.
  std::vector<int> cone_centers;
  /// Per circle: fixed radius, or empty to solve for it.
  std::vector<std::optional<double>> fixed_radii;
};

/// Target taken from a reference packing. Centers at cone points stay at cone
/// points on the new surface (same cone point id).
RealizationProblem problem_from_packing(std::shared_ptr<const Surface> surface,
                                        const Packing& reference, double tol = kDefaultTol);

struct RealizeOptions {
  int attempts = 64;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  int max_iterations = 300;
  int kicks = 0;                // restarts from perturbed best point when stalled
  double success = 1e-8;        // residual norm accepted as a solution
  double evidence = 1e-3;       // all attempts above this = strong evidence
  double separation = 1e-4;     // required slack on unwanted contacts
  double tol = kDefaultTol;     // tangency tolerance of the validation pass
};

struct AttemptLog {
  int attempt = 0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;  // residual <= success
  bool validated = false;  // passed the full contacts/pattern pipeline
  std::string note;
  std::vector<SurfaceCircle> circles;  // final configuration
};

struct RealizationResult {
  bool found = false;
  std::optional<Packing> packing;
  double residual = 0.0;  // best (minimum) attempt residual
  int best_attempt = -1;
  int attempts = 0;
  bool strong_evidence = false;  // not found and every attempt >= evidence
  std::vector<AttemptLog> log;
  std::string diagnostic;
};

RealizationResult solve(const RealizationProblem& problem, const RealizeOptions& options);

/// Residual norm of a configuration against the problem (same definition the
/// solver minimizes). Exposed for tests and diagnostics.
double residual_norm(const RealizationProblem& problem, const std::vector<SurfaceCircle>& circles,
                     double separation = 1e-4);

}  // namespace tsurf
