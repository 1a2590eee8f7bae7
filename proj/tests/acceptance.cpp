// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "tsurf/constructions.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/json_io.hpp"

using namespace tsurf;

namespace {

constexpr double kTangencyTol = 1e-9;
constexpr double kSuccess = 1e-8;
constexpr double kEvidence = 1e-3;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run(int id, const char* title, double limit, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  const double dt = seconds_since(t0);
  if (limit > 0 && dt >= limit) v.require(false, "runtime " + std::to_string(dt) + " s");
  std::printf("criterion %2d: %s  %s (%.2f s)%s\n", id, v.pass ? "PASS" : "FAIL", title, dt,
              v.detail.str().c_str());
  std::fflush(stdout);
  return v.pass;
}

// Cycles of the commutator r u r^-1 u^-1 are the vertices of a square-tiled
// surface; a cycle of length k is a cone angle of 2πk.
std::vector<int> commutator_cycles(const std::vector<int>& r, const std::vector<int>& u) {
  const int n = static_cast<int>(r.size());
  std::vector<int> ri(n), ui(n);
  for (int i = 0; i < n; ++i) ri[r[i]] = i, ui[u[i]] = i;
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = r[u[ri[ui[i]]]];
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = c[j]) seen[j] = true, ++len;
    lengths.push_back(len);
  }
  return lengths;
}

bool transitive(const std::vector<int>& r, const std::vector<int>& u) {
  const int n = static_cast<int>(r.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j : {r[i], u[i]})
      if (!seen[j]) seen[j] = true, ++count, stack.push_back(j);
  }
  return count == n;
}

SurfaceSpec square_tiled(const std::vector<int>& r, const std::vector<int>& u) {
  SurfaceSpec s;
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i) {
    const double x = 2.0 * i;
    s.polygons.push_back({{{x, 0}, {x + 1, 0}, {x + 1, 1}, {x, 1}}});
  }
  for (int i = 0; i < n; ++i) {
    s.pairings.push_back({{i, 1}, {r[i], 3}});
    s.pairings.push_back({{i, 2}, {u[i], 0}});
  }
  return s;
}

GraphStats stats_of(const Packing& p) { return graph_stats(build_graph(p, kTangencyTol)); }

}  // namespace

int main() {
  int failures = 0;
  auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

  tally(run(1, "stratum analysis of torus, L tromino, octagon, 10-gon", 1.0, [](Verdict& v) {
    const SurfaceAnalysis torus = analyze(torus_surface());
    v.require(torus.genus == 1 && torus.stratum.empty(), "torus genus 1, no singular points");
    const SurfaceAnalysis l3 = analyze(three_square_surface());
    v.require(l3.genus == 2 && l3.stratum == std::vector<int>{2}, "L tromino genus 2, stratum {2}");
    int singular = 0;
    for (const auto& c : l3.cone_points)
      if (c.singular()) {
        ++singular;
        v.require(std::abs(c.cone_angle - 6 * kPi) < 1e-9, "L tromino cone angle 6π");
      }
    v.require(singular == 1, "L tromino has one singular point");
    v.require(analyze(regular_ngon_surface(8)).stratum == std::vector<int>{2}, "octagon {2}");
    v.require(analyze(regular_ngon_surface(10)).stratum == std::vector<int>{1, 1}, "10-gon {1,1}");
    v.detail << " genus " << torus.genus << "/" << l3.genus;
  }));

  tally(run(2, "Gauss-Bonnet vs V - E + F on 100 random square-tiled surfaces", 10.0, [](Verdict& v) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 100) {
      const int n = 1 + static_cast<int>(rng() % 12);
      std::vector<int> r(n), u(n);
      std::iota(r.begin(), r.end(), 0);
      std::iota(u.begin(), u.end(), 0);
      std::shuffle(r.begin(), r.end(), rng);
      std::shuffle(u.begin(), u.end(), rng);
      if (!transitive(r, u)) continue;
      const auto cycles = commutator_cycles(r, u);
      int excess = 0;
      for (int k : cycles) excess += k - 1;  // Gauss-Bonnet: sum (k - 1) = 2g - 2
      const int genus_gb = excess / 2 + 1;
      const int chi_cw = static_cast<int>(cycles.size()) - 2 * n + n;
      const SurfaceAnalysis a = analyze(square_tiled(r, u));
      v.require(excess % 2 == 0, "even total excess");
      v.require(chi_cw == 2 - 2 * genus_gb, "oracle V-E+F matches Gauss-Bonnet");
      v.require(a.euler_characteristic == chi_cw, "analysis Euler characteristic");
      v.require(a.genus == genus_gb, "analysis genus");
      ++checked;
    }
    v.detail << " " << checked << " surfaces";
  }));

  tally(run(3, "generator counts for g = 2..6", 30.0, [](Verdict& v) {
    for (int g = 2; g <= 6; ++g) {
      const std::string at = " at g=" + std::to_string(g);
      v.require(stats_of(gen_multiloops_minimal_stratum(g)).max_loops == 4 * g, "4g loops" + at);
      v.require(stats_of(gen_multiedges_minimal_stratum(g, 0.3)).max_multiedges == 4 * g, "4g edges" + at);
      v.require(stats_of(gen_multiloops_principal_stratum(g)).max_loops == 2 * g + 1, "2g+1 loops" + at);
      v.require(stats_of(gen_multiedges_principal_stratum(g)).max_multiedges == 2 * g + 2, "2g+2 edges" + at);
    }
  }));

  tally(run(4, "genus-two extremal witnesses (8, 0) and (0, 9)", 0, [](Verdict& v) {
    const GraphStats e = stats_of(gen_multiedges_minimal_stratum(2, 0.3));
    v.require(e.max_multiedges == 8 && e.max_loops == 0, "edges witness (8, 0)");
    const Packing nine = nine_loop_octagon();
    const auto ts = find_tangencies(nine, kTangencyTol);
    const GraphStats l = graph_stats(build_graph(nine, ts));
    v.require(l.max_multiedges == 0 && l.max_loops == 9, "loops witness (0, 9)");
    int on_edges = 0;
    for (const auto& t : ts) on_edges += nine.surface->presentations(t.location).size() == 2;
    v.require(on_edges == 4 && static_cast<int>(ts.size()) - on_edges == 5, "4 edge + 5 interior");
    v.detail << " edges " << e.max_multiedges << ", loops " << l.max_loops << " (" << ts.size() - on_edges
             << " interior + " << on_edges << " edge)";
  }));

  tally(run(5, "principal stratum at g = 2: 5 loops, 6 edges", 0, [](Verdict& v) {
    v.require(stats_of(gen_multiloops_principal_stratum(2)).max_loops == 5, "5 loops");
    v.require(stats_of(gen_multiedges_principal_stratum(2)).max_multiedges == 6, "6 edges");
  }));

  tally(run(6, "c3 tangencies, graph and crossing pattern", 0, [](Verdict& v) {
    const Packing c3 = c3_packing();
    const auto ts = find_tangencies(c3, kTangencyTol);
    v.require(ts.size() == 6, "6 tangency points");
    const auto m = multiplicity_matrix(build_graph(c3, ts));
    // 0 red, 1 orange, 2 blue
    v.require(m[0][0] == 1 && m[2][2] == 1 && m[1][1] == 0, "loops on red and blue");
    v.require(m[0][1] == 2 && m[1][2] == 2 && m[0][2] == 0, "red-orange x2, blue-orange x2");
    const TangencyPattern p = compute_pattern(c3, ts);
    int red_self = -1, red_orange = -1;
    for (const auto& s : p.segments) {
      if (s.a == 0 && s.b == 0) red_self = s.id;
      if (s.a == 0 && s.b == 1) red_orange = s.id;
    }
    bool crossing = false;
    for (const auto& pr : p.intersecting)
      crossing |= (pr[0] == std::min(red_self, red_orange) && pr[1] == std::max(red_self, red_orange));
    v.require(red_self >= 0 && red_orange >= 0 && crossing, "red self-chord crosses red-orange segment");
  }));

  RealizationResult stretched;
  tally(run(7, "realize c3 on the 4/3-stretched four-square surface", 60.0, [&](Verdict& v) {
    const auto surface = std::make_shared<const Surface>(four_square_surface(4.0 / 3.0));
    const Packing c3 = c3_packing();
    RealizeOptions opt;
    opt.seed = 7;
    opt.attempts = 64;
    opt.success = kSuccess;
    opt.evidence = kEvidence;
    stretched = solve(problem_from_packing(surface, c3, kTangencyTol), opt);
    v.require(stretched.found, "found");
    v.require(stretched.residual <= kSuccess, "residual <= 1e-8");
    v.require(stretched.packing && equivalent(*stretched.packing, c3, kTangencyTol).equivalent,
              "equivalent to c3");
    v.detail << " residual " << stretched.residual << ", attempt " << stretched.best_attempt;
  }));

  tally(run(8, "no c3 realization on the unit four-square surface (evidence)", 0, [](Verdict& v) {
    const auto surface = std::make_shared<const Surface>(four_square_surface(1.0));
    RealizeOptions opt;
    opt.seed = 7;
    opt.attempts = 200;
    opt.success = kSuccess;
    opt.evidence = kEvidence;
    const RealizationResult r = solve(problem_from_packing(surface, c3_packing(), kTangencyTol), opt);
    v.require(!r.found, "not found");
    double lowest = 1e300;
    for (const auto& a : r.log) lowest = std::min(lowest, a.residual);
    v.require(lowest >= kEvidence, "every attempt residual >= 1e-3");
    v.require(r.strong_evidence, "strong evidence flag");
    v.detail << " min residual " << lowest << " over " << r.log.size() << " attempts";
  }));

  tally(run(9, "octagon search: bounds 8 / 9 hold, injected maxima exact", 600.0, [](Verdict& v) {
    for (auto s : {CircleStrategy::one_cone_circle, CircleStrategy::two_circles,
                   CircleStrategy::cone_plus_regular}) {
      const SearchReport plain = run_search(10000, 7, s);
      v.require(plain.max_multiedges_found <= 8 && plain.max_multiloops_found <= 9,
                "bounds for " + to_string(s));
      SearchOptions inject;
      inject.inject_extremal = true;
      const SearchReport forced = run_search(10000, 7, s, inject);
      v.require(forced.max_multiedges_found == 8 && forced.max_multiloops_found == 9,
                "injected maxima for " + to_string(s));
      v.detail << " " << to_string(s) << ": random (" << plain.max_multiedges_found << ","
               << plain.max_multiloops_found << ") accepted " << plain.accepted << " discarded "
               << plain.discarded << " rejected " << plain.rejected << ";";
    }
  }));

  tally(run(10, "bit-identical realize and search reports across thread counts", 0, [](Verdict& v) {
    const auto surface = std::make_shared<const Surface>(four_square_surface(4.0 / 3.0));
    const RealizationProblem problem = problem_from_packing(surface, c3_packing(), kTangencyTol);
    std::string realized[2], searched[2];
    const int threads[2] = {1, 4};
    for (int k = 0; k < 2; ++k) {
      RealizeOptions opt;
      opt.seed = 7;
      opt.attempts = 64;
      opt.threads = threads[k];
      realized[k] = to_json(solve(problem, opt)).dump();
      SearchOptions sopt;
      sopt.threads = threads[k];
      sopt.inject_extremal = true;
      for (auto s : {CircleStrategy::one_cone_circle, CircleStrategy::two_circles,
                     CircleStrategy::cone_plus_regular})
        searched[k] += to_json(run_search(2000, 11, s, sopt)).dump();
    }
    v.require(realized[0] == realized[1], "realize report");
    v.require(searched[0] == searched[1], "search reports");
    v.detail << " threads 1 vs 4, " << realized[0].size() + searched[0].size() << " bytes compared";
  }));

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
