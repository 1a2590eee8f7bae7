#include "tsurf/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace tsurf {

namespace {

constexpr double kAngleTol = 1e-9;

double total_angle(const Packing& packing, int circle) {
  const SurfacePoint& c = packing.circles[circle].center;
  return c.is_cone_point() ? packing.surface->cone_point(c.cone_point).cone_angle : kTwoPi;
}

// Open arc from `from` counter-clockwise to `to` contains x.
bool in_open_arc(double from, double to, double x, double total) {
  const double span = wrap_total(to - from, total);
  const double off = wrap_total(x - from, total);
  return off > kAngleTol && off < span - kAngleTol;
}

bool through_center(const Chord& c, double total) {
  return total > kTwoPi + 1e-6 && cyclic_gap(c.from, c.to, total) >= kPi - kAngleTol;
}

// The shorter arc spanned by a straight chord, as (start, end).
std::array<double, 2> short_arc(const Chord& c, double total) {
  if (wrap_total(c.to - c.from, total) <= total / 2) return {c.from, c.to};
  return {c.to, c.from};
}

bool same_angle(double a, double b, double total) { return cyclic_gap(a, b, total) <= kAngleTol; }

}  // namespace

bool chords_meet(const Chord& p, const Chord& q, double total) {
  const bool pc = through_center(p, total);
  const bool qc = through_center(q, total);
  if (pc && qc) return true;
  if (pc || qc) {
    const Chord& apex = pc ? p : q;
    const Chord& flat = pc ? q : p;
    const auto arc = short_arc(flat, total);
    return in_open_arc(arc[0], arc[1], apex.from, total) ||
           in_open_arc(arc[0], arc[1], apex.to, total);
  }
  for (double x : {p.from, p.to})
    for (double y : {q.from, q.to})
      if (same_angle(x, y, total)) return false;
  if (total > kTwoPi + 1e-6) {
    const auto arc = short_arc(p, total);
    return in_open_arc(arc[0], arc[1], q.from, total) != in_open_arc(arc[0], arc[1], q.to, total);
  }
  return in_open_arc(p.from, p.to, q.from, total) != in_open_arc(p.from, p.to, q.to, total);
}

std::vector<TangencySegment> compute_segments(const Packing& packing,
                                              const std::vector<TangencyPoint>& tangencies,
                                              bool* ambiguous) {
  std::vector<TangencySegment> out;
  std::map<std::array<int, 2>, std::vector<const TangencyPoint*>> by_pair;
  for (const TangencyPoint& t : tangencies) {
    if (t.a == t.b) continue;
    by_pair[{t.a, t.b}].push_back(&t);
  }
  bool amb = false;
  for (const auto& [pair, pts] : by_pair) {
    if (pts.size() < 2) continue;
    if (pts.size() > 2) amb = true;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        TangencySegment s;
        s.a = pair[0];
        s.b = pair[1];
        s.endpoints = {pts[i]->id, pts[j]->id};
        s.chords.push_back({s.a, pts[i]->angle_a, pts[j]->angle_a});
        s.chords.push_back({s.b, pts[i]->angle_b, pts[j]->angle_b});
        out.push_back(s);
      }
  }
  for (const TangencyPoint& t : tangencies) {
    if (t.a != t.b) continue;
    TangencySegment s;
    s.a = s.b = t.a;
    s.endpoints = {t.id, t.id};
    s.chords.push_back({t.a, t.angle_a, t.angle_b});
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const TangencySegment& x, const TangencySegment& y) {
    return std::tie(x.a, x.b, x.endpoints) < std::tie(y.a, y.b, y.endpoints);
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  (void)packing;
  if (ambiguous) *ambiguous = amb;
  return out;
}

TangencyPattern compute_pattern(const Packing& packing,
                                const std::vector<TangencyPoint>& tangencies) {
  TangencyPattern pat;
  pat.segments = compute_segments(packing, tangencies, &pat.ambiguous);
  const auto& segs = pat.segments;
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      bool meet = false;
      for (const Chord& p : segs[i].chords)
        for (const Chord& q : segs[j].chords)
          if (!meet && p.circle == q.circle && chords_meet(p, q, total_angle(packing, p.circle)))
            meet = true;
      if (meet) pat.intersecting.push_back({segs[i].id, segs[j].id});
    }
  }
  return pat;
}

TangencyPattern compute_pattern(const Packing& packing, double tol) {
  return compute_pattern(packing, find_tangencies(packing, tol));
}

PackingSignature signature(const Packing& packing, const ContactsGraph& graph,
                           const TangencyPattern& pattern) {
  PackingSignature sig;
  sig.circles = static_cast<int>(packing.circles.size());
  for (const GraphEdge& e : graph.edges) sig.edges.push_back({e.a, e.b});
  for (const TangencySegment& s : pattern.segments) sig.segments.push_back({s.a, s.b});
  sig.intersecting = pattern.intersecting;
  sig.ambiguous = pattern.ambiguous;
  return sig;
}

PackingSignature signature(const Packing& packing, double tol) {
  const auto tangencies = find_tangencies(packing, tol);
  return signature(packing, build_graph(packing, tangencies), compute_pattern(packing, tangencies));
}

namespace {

std::vector<std::vector<int>> count_matrix(int n, const std::vector<std::array<int, 2>>& edges) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    ++m[e[0]][e[1]];
    if (e[0] != e[1]) ++m[e[1]][e[0]];
  }
  return m;
}

std::array<int, 2> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

class Matcher {
 public:
  Matcher(const PackingSignature& p, const PackingSignature& q) : p_(p), q_(q) {
    n_ = p.circles;
    mp_ = count_matrix(n_, p.edges);
    mq_ = count_matrix(n_, q.edges);
    for (int i = 0; i < n_; ++i) {
      int dp = 0, dq = 0;
      for (int j = 0; j < n_; ++j) {
        dp += mp_[i][j];
        dq += mq_[i][j];
      }
      deg_p_.push_back(dp);
      deg_q_.push_back(dq);
    }
    ip_ = relation(p);
    iq_ = relation(q);
  }

  // Returns true when a graph isomorphism exists at all; `found` is set when
  // one of them also carries the segment pattern.
  bool run(std::vector<int>& found, bool& pattern_ok) {
    std::vector<int> sigma(n_, -1);
    std::vector<bool> used(n_, false);
    bool any_graph = false;
    pattern_ok = false;
    std::function<bool(int)> place = [&](int i) -> bool {
      if (i == n_) {
        any_graph = true;
        if (segments_match(sigma)) {
          found = sigma;
          pattern_ok = true;
          return true;
        }
        return false;
      }
      for (int c = 0; c < n_; ++c) {
        if (used[c] || deg_p_[i] != deg_q_[c] || mp_[i][i] != mq_[c][c]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = mp_[i][j] == mq_[c][sigma[j]];
        if (!ok) continue;
        sigma[i] = c;
        used[c] = true;
        if (place(i + 1)) return true;
        used[c] = false;
        sigma[i] = -1;
      }
      return false;
    };
    place(0);
    return any_graph;
  }

 private:
  static std::set<std::array<int, 2>> relation(const PackingSignature& s) {
    std::set<std::array<int, 2>> r;
    for (const auto& e : s.intersecting) r.insert(key(e[0], e[1]));
    return r;
  }

  bool segments_match(const std::vector<int>& sigma) const {
    const int m = static_cast<int>(p_.segments.size());
    if (m != static_cast<int>(q_.segments.size())) return false;
    std::vector<int> tau(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> place = [&](int s) -> bool {
      if (s == m) return true;
      const auto want = key(sigma[p_.segments[s][0]], sigma[p_.segments[s][1]]);
      for (int c = 0; c < m; ++c) {
        if (used[c] || key(q_.segments[c][0], q_.segments[c][1]) != want) continue;
        bool ok = true;
        for (int t = 0; t < s && ok; ++t)
          ok = ip_.count(key(s, t)) == iq_.count(key(c, tau[t]));
        if (!ok) continue;
        tau[s] = c;
        used[c] = true;
        if (place(s + 1)) return true;
        used[c] = false;
      }
      return false;
    };
    return place(0);
  }

  const PackingSignature& p_;
  const PackingSignature& q_;
  int n_ = 0;
  std::vector<std::vector<int>> mp_, mq_;
  std::vector<int> deg_p_, deg_q_;
  std::set<std::array<int, 2>> ip_, iq_;
};

}  // namespace

EquivalenceResult equivalent(const PackingSignature& p, const PackingSignature& q) {
  EquivalenceResult r;
  r.ambiguous = p.ambiguous || q.ambiguous;
  if (p.circles != q.circles || p.edges.size() != q.edges.size()) {
    r.reason = "graph mismatch";
    return r;
  }
  Matcher m(p, q);
  std::vector<int> sigma;
  bool pattern_ok = false;
  if (!m.run(sigma, pattern_ok)) {
    r.reason = "graph mismatch";
    return r;
  }
  if (!pattern_ok) {
    r.reason = "pattern mismatch";
    return r;
  }
  r.equivalent = true;
  r.witness = sigma;
  return r;
}

EquivalenceResult equivalent(const Packing& p, const Packing& q, double tol) {
  return equivalent(signature(p, tol), signature(q, tol));
}

}  // namespace tsurf
