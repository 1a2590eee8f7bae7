#include "tsurf/realize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <random>

#include "tsurf/errors.hpp"
#include "tsurf/parallel.hpp"

namespace tsurf {

namespace {

// A scalar with a sparse gradient over the solver's unknowns.
struct Lin {
  double v = 0.0;
  std::vector<std::pair<int, double>> g;

  void add(int var, double c) {
    if (var >= 0 && c != 0.0) g.emplace_back(var, c);
  }
  Lin operator-(const Lin& o) const {
    Lin r = *this;
    r.v -= o.v;
    for (auto [k, c] : o.g) r.g.emplace_back(k, -c);
    return r;
  }
  Lin operator+(const Lin& o) const {
    Lin r = *this;
    r.v += o.v;
    r.g.insert(r.g.end(), o.g.begin(), o.g.end());
    return r;
  }
  Lin scaled(double s) const {
    Lin r{v * s, {}};
    for (auto [k, c] : g) r.g.emplace_back(k, c * s);
    return r;
  }
};

Lin constant(double v) { return Lin{v, {}}; }

Lin product(const Lin& a, const Lin& b) {
  Lin r{a.v * b.v, {}};
  for (auto [k, c] : a.g) r.g.emplace_back(k, c * b.v);
  for (auto [k, c] : b.g) r.g.emplace_back(k, c * a.v);
  return r;
}

Lin lin_cyclic_gap(const Lin& x, const Lin& y, double total) {
  const double d = wrap_total(x.v - y.v, total);
  if (d <= total / 2) return Lin{d, (x - y).g};
  return Lin{total - d, (y - x).g};
}

Lin lin_abs(const Lin& x) { return x.v >= 0 ? x : x.scaled(-1.0); }

struct Vars {
  int x = -1, y = -1, r = -1;
};

struct PathInfo {
  Lin length;
  Lin depart;
  Lin arrive;
};

// Equalities should vanish; inequalities should be nonnegative. Inequalities
// are reported while close to active so each step sees them coming.
struct Residuals {
  std::vector<Lin> eq;
  std::vector<Lin> ineq;
};

struct ChordLin {
  int circle;
  Lin from, to;
};

class Model {
 public:
  Model(const RealizationProblem& p, double separation) : p_(p), s_(*p.surface), sep_(separation) {
    n_ = p.target.circles;
    if (n_ <= 0) throw DomainError("target graph has no circles");
    if (static_cast<int>(p.cone_centers.size()) != n_ ||
        static_cast<int>(p.fixed_radii.size()) != n_)
      throw DomainError("problem arrays do not match the target circle count");
    const auto& cones = s_.analysis().cone_points;
    for (int i = 0; i < n_; ++i) {
      const int c = p.cone_centers[i];
      if (c >= 0 && (c >= static_cast<int>(cones.size()) || !cones[c].singular()))
        throw DomainError("circle " + std::to_string(i) + " is pinned to a point that is not a cone point");
      if (p.fixed_radii[i] && !(*p.fixed_radii[i] > 0.0))
        throw DomainError("circle " + std::to_string(i) + " has a non-positive fixed radius");
    }
    m_.assign(n_, std::vector<int>(n_, 0));
    for (const auto& e : p.target.edges) {
      if (e[0] < 0 || e[1] < 0 || e[0] >= n_ || e[1] >= n_)
        throw DomainError("target edge references an unknown circle");
      const int a = std::min(e[0], e[1]);
      const int b = std::max(e[0], e[1]);
      ++m_[a][b];
    }
    for (int i = 0; i < n_; ++i) {
      Vars v;
      if (p.cone_centers[i] < 0) {
        v.x = nvars_++;
        v.y = nvars_++;
      }
      if (!p.fixed_radii[i]) v.r = nvars_++;
      vars_.push_back(v);
    }
    for (const auto& e : p.target.intersecting) required_.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    r_min_ = 0.01 * s_.min_edge();
    r_max_ = std::sqrt(s_.area());
  }

  int nvars() const { return nvars_; }
  int circles() const { return n_; }
  const Vars& vars(int i) const { return vars_[i]; }
  const Surface& surface() const { return s_; }

  double total_angle(const SurfaceCircle& c) const {
    return c.center.is_cone_point() ? s_.cone_point(c.center.cone_point).cone_angle : kTwoPi;
  }

  // Empty optional when the configuration cannot be developed.
  std::optional<Residuals> evaluate(const std::vector<SurfaceCircle>& cfg) const {
    Residuals out;
    double rmax = 0.0;
    for (const auto& c : cfg) rmax = std::max(rmax, c.radius);
    for (int i = 0; i < n_; ++i) {
      const double r = cfg[i].radius;
      if (r <= 0.0 || r > 2 * r_max_) return std::nullopt;
      if (vars_[i].r < 0) continue;
      out.ineq.push_back(radius(i, cfg) - constant(r_min_));
      out.ineq.push_back(constant(r_max_) - radius(i, cfg));
    }

    std::vector<std::vector<std::vector<PathInfo>>> slots(n_, std::vector<std::vector<PathInfo>>(n_));
    try {
      for (int i = 0; i < n_; ++i) {
        double reach = cfg[i].radius + rmax + 2 * sep_;
        for (int round = 0; round < 4; ++round) {
          DevelopmentOptions opt;
          opt.reach = reach;
          const Development dev(s_, cfg[i].center, opt);
          bool enough = true;
          for (int j = i; j < n_; ++j) {
            slots[i][j] = paths(dev, cfg, i, j, reach);
            if (static_cast<int>(slots[i][j].size()) < m_[i][j]) enough = false;
          }
          if (round == 0) visits(dev, cfg, i, out.ineq);
          if (enough) break;
          reach *= 2;
        }
        for (int j = i; j < n_; ++j) {
          const Lin rsum = radius(i, cfg) + radius(j, cfg);
          const auto& list = slots[i][j];
          const double window = 0.5 * std::min(cfg[i].radius, cfg[j].radius);
          for (int k = 0; k < static_cast<int>(list.size()); ++k) {
            if (k < m_[i][j]) {
              out.eq.push_back(list[k].length - rsum);
            } else if (list[k].length.v < rsum.v + sep_ + window) {
              out.ineq.push_back(list[k].length - rsum - constant(sep_));
            }
          }
          for (int k = static_cast<int>(list.size()); k < m_[i][j]; ++k)
            out.eq.push_back(constant(reach - rsum.v));
        }
      }
    } catch (const RadiusTooLargeError&) {
      return std::nullopt;
    }
    pattern_terms(cfg, slots, out.eq);
    return out;
  }

 private:
  Lin radius(int i, const std::vector<SurfaceCircle>& cfg) const {
    Lin l = constant(cfg[i].radius);
    l.add(vars_[i].r, 1.0);
    return l;
  }

  // Direction-dependent gradients of a straight path from circle i's center
  // to a point that moves with circle j's center (j < 0: fixed point).
  PathInfo path_info(const PathHit& h, double arrive, int i, int j) const {
    PathInfo info;
    const Vec2 u = unit(h.direction);
    const Vec2 perp = Vec2{-u.y, u.x} / h.length;
    info.length = constant(h.length);
    info.depart = constant(h.angle);
    info.arrive = constant(arrive);
    auto attach = [&](int circle, double sign) {
      const Vars& v = vars_[circle];
      info.length.add(v.x, sign * u.x);
      info.length.add(v.y, sign * u.y);
      for (Lin* a : {&info.depart, &info.arrive}) {
        a->add(v.x, sign * perp.x);
        a->add(v.y, sign * perp.y);
      }
    };
    if (j != i) {
      attach(i, -1.0);
      if (j >= 0) attach(j, 1.0);
    }
    return info;
  }

  std::vector<PathInfo> paths(const Development& dev, const std::vector<SurfaceCircle>& cfg, int i,
                              int j, double reach) const {
    std::vector<PathInfo> out;
    for (const PathHit& h : dev.paths_to(cfg[j].center, reach)) {
      const double arrive = Development::arrival_angle(s_, h);
      if (i == j && !(h.angle < arrive)) continue;  // each loop once
      out.push_back(path_info(h, arrive, i, j));
    }
    return out;
  }

  void visits(const Development& dev, const std::vector<SurfaceCircle>& cfg, int i,
              std::vector<Lin>& out) const {
    const double reach = 1.5 * cfg[i].radius;
    for (const ConePoint& cp : s_.analysis().cone_points) {
      if (!cp.singular() || cfg[i].center.cone_point == cp.id) continue;
      for (const PathHit& h : dev.paths_to(SurfacePoint::at_cone(cp.id), reach)) {
        const PathInfo info = path_info(h, 0.0, i, -1);
        out.push_back(info.length - radius(i, cfg));
      }
    }
  }

  // Chord relation penalties between current segments and the target ones.
  void pattern_terms(const std::vector<SurfaceCircle>& cfg,
                     const std::vector<std::vector<std::vector<PathInfo>>>& slots,
                     std::vector<Lin>& out) const {
    const auto& target = p_.target.segments;
    const int ns = static_cast<int>(target.size());
    // current chords per target segment, for keys with a well defined segment
    std::vector<std::vector<ChordLin>> chords(ns);
    std::vector<bool> usable(ns, false);
    std::map<std::array<int, 2>, std::vector<int>> by_key;
    for (int s = 0; s < ns; ++s) {
      const int a = std::min(target[s][0], target[s][1]);
      const int b = std::max(target[s][0], target[s][1]);
      by_key[{a, b}].push_back(s);
    }
    std::vector<std::vector<int>> self_groups;
    for (const auto& [key, segs] : by_key) {
      const int a = key[0];
      const int b = key[1];
      const auto& list = slots[a][b];
      if (a != b) {
        if (m_[a][b] != 2 || segs.size() != 1 || list.size() < 2) continue;
        chords[segs[0]] = {{a, list[0].depart, list[1].depart}, {b, list[0].arrive, list[1].arrive}};
        usable[segs[0]] = true;
      } else {
        if (static_cast<int>(segs.size()) != m_[a][a] || static_cast<int>(list.size()) < m_[a][a])
          continue;
        for (size_t k = 0; k < segs.size(); ++k) {
          chords[segs[k]] = {{a, list[k].depart, list[k].arrive}};
          usable[segs[k]] = true;
        }
        if (segs.size() > 1) self_groups.push_back(segs);
      }
    }

    // Within a circle's self-chords any matching is allowed; try the
    // permutations when there are few, keep the cheapest.
    size_t combos = 1;
    for (const auto& g : self_groups) {
      size_t f = 1;
      for (size_t k = 2; k <= g.size(); ++k) f *= k;
      combos *= f;
    }
    const bool enumerate = !self_groups.empty() && combos <= 120;

    auto penalties = [&](const std::vector<std::vector<ChordLin>>& ch) {
      std::vector<Lin> terms;
      for (int s = 0; s < ns; ++s) {
        if (!usable[s]) continue;
        for (int t = s + 1; t < ns; ++t) {
          if (!usable[t]) continue;
          const bool want = required_.count({s, t}) > 0;
          bool meets = false;
          std::vector<Lin> margins;
          for (const ChordLin& p : ch[s])
            for (const ChordLin& q : ch[t]) {
              if (p.circle != q.circle) continue;
              const double total = total_angle(cfg[p.circle]);
              const bool m = chords_meet({p.circle, p.from.v, p.to.v}, {q.circle, q.from.v, q.to.v}, total);
              Lin margin = flip_margin(p, q, total);
              Lin term = product(margin, radius(p.circle, cfg));
              if (m) meets = true;
              if (m == want) continue;
              margins.push_back(term);
            }
          if (meets == want || margins.empty()) continue;
          if (want) {
            terms.push_back(*std::min_element(margins.begin(), margins.end(),
                                              [](const Lin& a, const Lin& b) { return a.v < b.v; }));
          } else {
            for (const Lin& m : margins) terms.push_back(m);
          }
        }
      }
      return terms;
    };

    if (!enumerate) {
      const auto terms = penalties(chords);
      out.insert(out.end(), terms.begin(), terms.end());
      return;
    }
    std::vector<Lin> best;
    double best_cost = -1.0;
    std::function<void(size_t, std::vector<std::vector<ChordLin>>&)> rec =
        [&](size_t gi, std::vector<std::vector<ChordLin>>& ch) {
          if (gi == self_groups.size()) {
            auto terms = penalties(ch);
            double c = 0.0;
            for (const Lin& l : terms) c += l.v * l.v;
            if (best_cost < 0 || c < best_cost) {
              best_cost = c;
              best = std::move(terms);
            }
            return;
          }
          const auto& g = self_groups[gi];
          std::vector<int> perm(g.size());
          for (size_t k = 0; k < g.size(); ++k) perm[k] = static_cast<int>(k);
          std::vector<std::vector<ChordLin>> saved;
          for (int s : g) saved.push_back(ch[s]);
          do {
            for (size_t k = 0; k < g.size(); ++k) ch[g[k]] = saved[perm[k]];
            rec(gi + 1, ch);
          } while (std::next_permutation(perm.begin(), perm.end()));
          for (size_t k = 0; k < g.size(); ++k) ch[g[k]] = saved[k];
        };
    auto ch = chords;
    rec(0, ch);
    out.insert(out.end(), best.begin(), best.end());
  }

  // Smallest angular change of one endpoint that flips whether two chords meet.
  static Lin flip_margin(const ChordLin& p, const ChordLin& q, double total) {
    std::vector<Lin> c;
    for (const Lin* x : {&p.from, &p.to})
      for (const Lin* y : {&q.from, &q.to}) c.push_back(lin_cyclic_gap(*x, *y, total));
    if (total > kTwoPi + 1e-6) {
      c.push_back(lin_abs(lin_cyclic_gap(p.from, p.to, total) - constant(kPi)));
      c.push_back(lin_abs(lin_cyclic_gap(q.from, q.to, total) - constant(kPi)));
    }
    return *std::min_element(c.begin(), c.end(), [](const Lin& a, const Lin& b) { return a.v < b.v; });
  }

  const RealizationProblem& p_;
  const Surface& s_;
  double sep_;
  int n_ = 0;
  int nvars_ = 0;
  std::vector<Vars> vars_;
  std::vector<std::vector<int>> m_;
  std::set<std::array<int, 2>> required_;
  double r_min_ = 0.0;
  double r_max_ = 0.0;
};

double cost_of(const Residuals& res) {
  double c = 0.0;
  for (const Lin& l : res.eq) c += l.v * l.v;
  for (const Lin& l : res.ineq)
    if (l.v < 0.0) c += l.v * l.v;
  return c;
}

Eigen::MatrixXd jacobian(const std::vector<Lin>& rows, int nv) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), nv);
  for (size_t k = 0; k < rows.size(); ++k)
    for (auto [var, c] : rows[k].g) J(static_cast<Eigen::Index>(k), var) += c;
  return J;
}

Eigen::VectorXd values(const std::vector<Lin>& rows) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(rows.size()));
  for (size_t k = 0; k < rows.size(); ++k) v[static_cast<Eigen::Index>(k)] = rows[k].v;
  return v;
}

// Damped Gauss-Newton step for  |r + J d|^2 + |min(0, g + G d)|^2: the set of
// linearized inequalities counted is iterated to a fixed point.
double kIsotropic = 0.01;

Eigen::VectorXd lm_step(const Eigen::MatrixXd& J, const Eigen::VectorXd& r, const Eigen::MatrixXd& G,
                        const Eigen::VectorXd& g, double lambda) {
  const Eigen::Index nv = J.cols();
  const Eigen::MatrixXd JtJ = J.transpose() * J;
  const Eigen::VectorXd Jtr = J.transpose() * r;
  const Eigen::MatrixXd GtG_full = G.transpose() * G;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(nv);
  std::vector<bool> active(static_cast<size_t>(g.size()));
  for (Eigen::Index k = 0; k < g.size(); ++k) active[k] = g[k] < 0.0;
  for (int round = 0; round < 20; ++round) {
    Eigen::MatrixXd A = JtJ;
    Eigen::VectorXd b = -Jtr;
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      if (!active[k]) continue;
      A += G.row(k).transpose() * G.row(k);
      b -= G.row(k).transpose() * g[k];
    }
    const Eigen::VectorXd diag = (JtJ + GtG_full).diagonal();
    const double floor = kIsotropic * diag.mean() + 1e-9;
    for (Eigen::Index i = 0; i < nv; ++i) A(i, i) += lambda * (diag[i] + floor);
    d = A.ldlt().solve(b);
    bool changed = false;
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      const bool now = g[k] + G.row(k).dot(d) < 0.0;
      if (now != active[k]) {
        active[k] = now;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

SurfacePoint random_point(const Surface& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  const double total = s.area();
  double pick = unit01(rng) * total;
  int poly = 0;
  for (; poly + 1 < s.polygon_count(); ++poly) {
    pick -= s.polygon_area(poly);
    if (pick <= 0) break;
  }
  double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;
  for (const PlanarPoint& v : s.vertices(poly)) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  for (int guard = 0; guard < 100000; ++guard) {
    const PlanarPoint q{lox + unit01(rng) * (hix - lox), loy + unit01(rng) * (hiy - loy)};
    if (!s.contains(poly, q)) continue;
    bool near_edge = false;
    for (int e = 0; e < s.size(poly) && !near_edge; ++e)
      near_edge = point_segment_distance(q, s.edge_start({poly, e}), s.edge_end({poly, e})) < 1e-6;
    if (!near_edge) return SurfacePoint::at(poly, q);
  }
  throw InternalConsistencyError("could not sample a point of the surface");
}

std::optional<std::vector<SurfaceCircle>> apply_step(const Model& model,
                                                     const std::vector<SurfaceCircle>& cfg,
                                                     const Eigen::VectorXd& step) {
  std::vector<SurfaceCircle> next = cfg;
  for (int i = 0; i < model.circles(); ++i) {
    const Vars& v = model.vars(i);
    if (v.x >= 0) {
      const Vec2 d{step[v.x], step[v.y]};
      if (norm(d) > 0.0) {
        auto moved = model.surface().move(cfg[i].center, d);
        if (!moved) moved = model.surface().move(cfg[i].center, d * (1.0 - 1e-7));
        if (!moved) return std::nullopt;
        next[i].center = model.surface().canonicalize(*moved);
      }
    }
    if (v.r >= 0) next[i].radius += step[v.r];
  }
  return next;
}

struct AttemptOutcome {
  AttemptLog log;
  std::vector<SurfaceCircle> circles;
};

AttemptOutcome run_attempt(const RealizationProblem& problem, const Model& model,
                           const RealizeOptions& opt, int attempt) {
  const Surface& s = model.surface();
  std::mt19937_64 rng(stream_seed(opt.seed, static_cast<std::uint64_t>(attempt)));
  const int n = model.circles();
  const double scale = std::sqrt(s.area() / (kPi * n));
  std::uniform_real_distribution<double> rdist(0.3 * scale, 1.0 * scale);

  std::vector<SurfaceCircle> cfg(n);
  for (int i = 0; i < n; ++i) {
    cfg[i].id = i;
    cfg[i].center = problem.cone_centers[i] >= 0 ? SurfacePoint::at_cone(problem.cone_centers[i])
                                                 : random_point(s, rng);
    cfg[i].radius = problem.fixed_radii[i] ? *problem.fixed_radii[i] : rdist(rng);
  }

  AttemptOutcome out;
  out.log.attempt = attempt;
  auto res = model.evaluate(cfg);
  for (int retry = 0; !res && retry < 20; ++retry) {
    for (int i = 0; i < n; ++i)
      if (!problem.fixed_radii[i]) cfg[i].radius *= 0.5;
    res = model.evaluate(cfg);
  }
  if (!res) {
    out.log.residual = std::numeric_limits<double>::infinity();
    out.log.note = "initial configuration could not be developed";
    out.circles = cfg;
    return out;
  }
  double cost = cost_of(*res);
  const int nv = model.nvars();
  const double cap = 0.25 * s.min_edge();
  int it = 0;

  // Damped Gauss-Newton descent from (c, r); returns when no damping helps.
  auto descend = [&](std::vector<SurfaceCircle>& c, std::optional<Residuals>& r, double& f) {
    double lambda = 1e-3;
    bool stalled = false;
    for (; it < opt.max_iterations && f > 1e-30 && !stalled; ++it) {
      const Eigen::MatrixXd J = jacobian(r->eq, nv);
      const Eigen::VectorXd rv = values(r->eq);
      const Eigen::MatrixXd G = jacobian(r->ineq, nv);
      const Eigen::VectorXd g = values(r->ineq);
      bool accepted = false;
      for (int inner = 0; inner < 12 && !accepted; ++inner) {
        Eigen::VectorXd step = lm_step(J, rv, G, g, lambda);
        if (!step.allFinite()) {
          lambda *= 10;
          continue;
        }
        const double big = step.cwiseAbs().maxCoeff();
        if (big > cap) step *= cap / big;
        auto next = apply_step(model, c, step);
        std::optional<Residuals> next_res;
        if (next) next_res = model.evaluate(*next);
        const double next_cost = next_res ? cost_of(*next_res) : std::numeric_limits<double>::infinity();
        if (next_cost < f) {
          const double gain = f - next_cost;
          c = std::move(*next);
          r = std::move(next_res);
          f = next_cost;
          lambda = std::max(lambda / 3.0, 1e-12);
          accepted = true;
          stalled = gain <= 1e-6 * f && f < opt.success * opt.success;
        } else {
          lambda *= 4.0;
        }
      }
      if (!accepted) return;
    }
  };

  descend(cfg, res, cost);
  // Stalled short of a solution: restart from random kicks of the best point.
  std::normal_distribution<double> kick(0.0, 0.05 * scale);
  for (int k = 0; k < opt.kicks && it < opt.max_iterations && cost > opt.success * opt.success; ++k) {
    Eigen::VectorXd step(nv);
    for (int v = 0; v < nv; ++v) step[v] = kick(rng);
    auto trial = apply_step(model, cfg, step);
    if (!trial) continue;
    auto trial_res = model.evaluate(*trial);
    if (!trial_res) continue;
    double trial_cost = cost_of(*trial_res);
    descend(*trial, trial_res, trial_cost);
    if (trial_cost < cost) {
      cfg = std::move(*trial);
      res = std::move(trial_res);
      cost = trial_cost;
    }
  }
  out.log.iterations = it;
  out.log.residual = std::sqrt(cost);
  out.log.converged = out.log.residual <= opt.success;
  out.circles = cfg;
  return out;
}

}  // namespace

RealizationProblem problem_from_packing(std::shared_ptr<const Surface> surface,
                                        const Packing& reference, double tol) {
  RealizationProblem p;
  p.surface = std::move(surface);
  p.target = signature(reference, tol);
  for (const SurfaceCircle& c : reference.circles) {
    p.cone_centers.push_back(c.center.is_cone_point() ? c.center.cone_point : -1);
    p.fixed_radii.push_back(std::nullopt);
  }
  return p;
}

double residual_norm(const RealizationProblem& problem, const std::vector<SurfaceCircle>& circles,
                     double separation) {
  const Model model(problem, separation);
  const auto res = model.evaluate(circles);
  if (!res) return std::numeric_limits<double>::infinity();
  return std::sqrt(cost_of(*res));
}

RealizationResult solve(const RealizationProblem& problem, const RealizeOptions& options) {
  if (options.attempts <= 0) throw DomainError("attempts must be positive");
  if (!problem.surface) throw DomainError("problem has no surface");
  RealizationResult result;
  result.attempts = options.attempts;
  std::unique_ptr<Model> model;
  try {
    model = std::make_unique<Model>(problem, options.separation);
  } catch (const DomainError& e) {
    result.diagnostic = e.what();
    result.residual = std::numeric_limits<double>::infinity();
    return result;
  }

  std::vector<AttemptOutcome> outcomes(options.attempts);
  parallel_for(options.attempts, options.threads, [&](int a) {
    AttemptOutcome o = run_attempt(problem, *model, options, a);
    if (o.log.converged) {
      const double vtol = std::max(options.tol, 10 * o.log.residual);
      try {
        const Packing candidate = make_packing(problem.surface->spec(), o.circles, problem.surface->tol());
        const CheckReport check = check_packing(candidate, vtol);
        if (!check.ok) {
          o.log.note = "overlap: " + check.witnesses.front().kind;
        } else {
          const EquivalenceResult eq = equivalent(signature(candidate, vtol), problem.target);
          o.log.validated = eq.equivalent;
          if (!eq.equivalent) o.log.note = eq.reason;
        }
      } catch (const Error& e) {
        o.log.note = e.what();
      }
    }
    o.log.circles = o.circles;
    outcomes[a] = std::move(o);
  });

  result.residual = std::numeric_limits<double>::infinity();
  bool all_above = true;
  for (const AttemptOutcome& o : outcomes) {
    result.log.push_back(o.log);
    if (o.log.residual < options.evidence) all_above = false;
  }
  int best = -1;
  for (int a = 0; a < options.attempts; ++a) {
    const AttemptLog& l = outcomes[a].log;
    if (l.validated && (best < 0 || l.residual < outcomes[best].log.residual)) best = a;
  }
  if (best >= 0) {
    result.found = true;
    result.best_attempt = best;
    result.residual = outcomes[best].log.residual;
    result.packing = make_packing(problem.surface->spec(), outcomes[best].circles, problem.surface->tol());
  } else {
    for (int a = 0; a < options.attempts; ++a)
      if (best < 0 || outcomes[a].log.residual < outcomes[best].log.residual) best = a;
    result.best_attempt = best;
    result.residual = outcomes[best].log.residual;
    result.strong_evidence = all_above;
    result.diagnostic = all_above ? "every attempt ended with residual >= " + std::to_string(options.evidence)
                                  : "no attempt passed validation";
  }
  return result;
}

}  // namespace tsurf
