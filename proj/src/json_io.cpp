#include "tsurf/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tsurf/constructions.hpp"
#include "tsurf/errors.hpp"

namespace tsurf {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw StructuralError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw StructuralError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw StructuralError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array");
  return j;
}

Json pair_json(const std::array<int, 2>& p) { return Json::array({p[0], p[1]}); }

Json location_json(const SurfacePoint& p) {
  if (p.is_cone_point()) return Json{{"cone_point", p.cone_point}};
  return Json::array({p.polygon, p.position.x, p.position.y});
}

SurfacePoint location_from_json(const Json& j) {
  if (j.is_object()) return SurfacePoint::at_cone(integer(member(j, "cone_point"), "cone_point"));
  if (!j.is_array() || j.size() != 3) throw StructuralError("tangency must be [polygon, x, y]");
  return SurfacePoint::at(integer(j[0], "polygon"), {number(j[1], "x"), number(j[2], "y")});
}

Json circles_json(const std::vector<SurfaceCircle>& circles) {
  Json out = Json::array();
  for (const auto& c : circles) out.push_back(Json{{"center", to_json(c.center)}, {"radius", c.radius}});
  return out;
}

Json sides_json(const std::array<Vec2, 4>& sides) {
  Json out = Json::array();
  for (const auto& v : sides) out.push_back(Json::array({v.x, v.y}));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const SurfaceSpec& spec) {
  Json polygons = Json::array();
  for (const auto& poly : spec.polygons) {
    Json vs = Json::array();
    for (const auto& v : poly.vertices) vs.push_back(Json::array({v.x, v.y}));
    polygons.push_back(std::move(vs));
  }
  Json pairings = Json::array();
  for (const auto& p : spec.pairings)
    pairings.push_back(Json{{"a", Json::array({p.a.polygon, p.a.edge})},
                            {"b", Json::array({p.b.polygon, p.b.edge})}});
  return Json{{"polygons", std::move(polygons)}, {"pairings", std::move(pairings)}};
}

Json to_json(const ValidationReport& report) {
  Json vs = Json::array();
  for (const auto& v : report.violations) {
    Json o{{"kind", v.kind}, {"message", v.message}};
    if (v.a) o["a"] = Json::array({v.a->polygon, v.a->edge});
    if (v.b) o["b"] = Json::array({v.b->polygon, v.b->edge});
    o["discrepancy"] = v.discrepancy;
    vs.push_back(std::move(o));
  }
  return Json{{"ok", report.ok}, {"violations", std::move(vs)}};
}

Json to_json(const SurfaceAnalysis& a) {
  Json cones = Json::array();
  for (const auto& c : a.cone_points) {
    Json cycle = Json::array();
    for (const auto& corner : c.vertex_cycle) cycle.push_back(Json::array({corner.polygon, corner.vertex}));
    cones.push_back(Json{{"id", c.id}, {"cone_angle", c.cone_angle}, {"order", c.order},
                         {"vertex_cycle", std::move(cycle)}});
  }
  return Json{{"genus", a.genus},
              {"stratum", a.stratum},
              {"euler_characteristic", a.euler_characteristic},
              {"cone_points", std::move(cones)}};
}

Json to_json(const SurfacePoint& p) {
  if (p.is_cone_point()) return Json{{"cone_point", p.cone_point}};
  return Json{{"polygon", p.polygon}, {"x", p.position.x}, {"y", p.position.y}};
}

Json to_json(const Packing& packing) {
  return Json{{"surface", to_json(packing.surface->spec())}, {"circles", circles_json(packing.circles)}};
}

Json to_json(const CheckReport& report) {
  Json ws = Json::array();
  for (const auto& w : report.witnesses)
    ws.push_back(Json{{"kind", w.kind}, {"a", w.a}, {"b", w.b}, {"depth", w.depth},
                      {"where", to_json(w.where)}});
  return Json{{"ok", report.ok}, {"witnesses", std::move(ws)}};
}

Json to_json(const TangencyPoint& t) {
  return Json{{"id", t.id},         {"a", t.a},
              {"b", t.b},           {"location", location_json(t.location)},
              {"angle_a", t.angle_a}, {"angle_b", t.angle_b},
              {"at_cone_point", t.at_cone_point}};
}

Json to_json(const ContactsGraph& graph, const std::vector<TangencyPoint>& tangencies) {
  Json edges = Json::array();
  for (const auto& e : graph.edges)
    edges.push_back(Json{{"a", e.a}, {"b", e.b},
                         {"tangency", location_json(tangencies.at(static_cast<size_t>(e.tangency)).location)}});
  return Json{{"vertices", graph.vertices}, {"edges", std::move(edges)}};
}

Json to_json(const TangencyPattern& pattern, const std::vector<TangencyPoint>& tangencies) {
  Json ts = Json::array();
  for (const auto& t : tangencies) ts.push_back(to_json(t));
  Json segs = Json::array();
  for (const auto& s : pattern.segments) {
    Json chords = Json::array();
    for (const auto& c : s.chords)
      chords.push_back(Json{{"circle", c.circle}, {"from", c.from}, {"to", c.to}});
    segs.push_back(Json{{"id", s.id}, {"a", s.a}, {"b", s.b},
                        {"endpoints", pair_json(s.endpoints)}, {"chords", std::move(chords)}});
  }
  Json inter = Json::array();
  for (const auto& p : pattern.intersecting) inter.push_back(pair_json(p));
  return Json{{"tangencies", std::move(ts)},
              {"segments", std::move(segs)},
              {"intersecting", std::move(inter)},
              {"ambiguous", pattern.ambiguous}};
}

Json to_json(const EquivalenceResult& r) {
  Json out{{"equivalent", r.equivalent}};
  if (!r.equivalent) out["reason"] = r.reason;
  if (r.witness) out["witness"] = *r.witness;
  if (r.ambiguous) out["ambiguous"] = true;
  return out;
}

Json to_json(const RealizationResult& r) {
  Json log = Json::array();
  for (const auto& a : r.log)
    log.push_back(Json{{"attempt", a.attempt},     {"residual", a.residual},
                       {"iterations", a.iterations}, {"converged", a.converged},
                       {"validated", a.validated}, {"note", a.note},
                       {"circles", circles_json(a.circles)}});
  Json out{{"status", r.found ? "found" : "not_found"},
           {"residual", r.residual},
           {"best_attempt", r.best_attempt},
           {"attempts", r.attempts},
           {"strong_evidence", r.strong_evidence},
           {"diagnostic", r.diagnostic}};
  if (r.packing) out["packing"] = to_json(*r.packing);
  out["log"] = std::move(log);
  return out;
}

Json to_json(const SearchSample& s) {
  return Json{{"trial", s.trial},
              {"source", s.source},
              {"sides", sides_json(s.sides)},
              {"concavities", s.concavities},
              {"max_multiedges", s.stats.max_multiedges},
              {"max_loops", s.stats.max_loops},
              {"packing", to_json(s.packing)}};
}

Json to_json(const SearchReport& r) {
  Json out{{"trials", r.trials},
           {"seed", r.seed},
           {"strategy", to_string(r.strategy)},
           {"discarded", r.discarded},
           {"rejected", r.rejected},
           {"accepted", r.accepted},
           {"injected", r.injected},
           {"by_concavities", Json{{"0", r.by_concavities[0]}, {"2", r.by_concavities[1]},
                                   {"4", r.by_concavities[2]}}},
           {"max_multiedges_found", r.max_multiedges_found},
           {"max_multiloops_found", r.max_multiloops_found}};
  out["argmax_multiedges"] = r.argmax_multiedges ? to_json(*r.argmax_multiedges) : Json();
  out["argmax_multiloops"] = r.argmax_multiloops ? to_json(*r.argmax_multiloops) : Json();
  return out;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{
      "torus",     "three-square", "four-square",     "ngon",            "c3",        "c3-noncrossing",
      "loops-min", "edges-min",    "loops-principal", "edges-principal", "nine-loops"};
  return names;
}

Json construct_json(const std::string& n, const ConstructParams& c) {
  if (n == "torus") return to_json(torus_surface());
  if (n == "three-square") return to_json(three_square_surface());
  if (n == "four-square") return to_json(four_square_surface(c.stretch));
  if (n == "ngon") return to_json(regular_ngon_surface(c.sides, c.side));
  if (n == "c3") return to_json(c3_packing());
  if (n == "c3-noncrossing") return to_json(c3_noncrossing_packing());
  if (n == "loops-min") return to_json(gen_multiloops_minimal_stratum(c.genus, c.side));
  if (n == "edges-min")
    return to_json(gen_multiedges_minimal_stratum(c.genus, c.radius.value_or(0.3 * c.side), c.side));
  if (n == "loops-principal") return to_json(gen_multiloops_principal_stratum(c.genus, c.side));
  if (n == "edges-principal") return to_json(gen_multiedges_principal_stratum(c.genus, c.side));
  if (n == "nine-loops") return to_json(nine_loop_octagon());
  throw StructuralError("unknown construction: " + n);
}

SurfaceSpec surface_from_json(const Json& j) {
  SurfaceSpec spec;
  for (const auto& poly : array(member(j, "polygons"), "polygons")) {
    PolygonSpec p;
    for (const auto& v : array(poly, "polygon")) {
      if (!v.is_array() || v.size() != 2) throw StructuralError("vertex must be [x, y]");
      p.vertices.push_back({number(v[0], "x"), number(v[1], "y")});
    }
    spec.polygons.push_back(std::move(p));
  }
  auto edge = [](const Json& e) {
    if (!e.is_array() || e.size() != 2) throw StructuralError("edge must be [polygon, edge]");
    return EdgeRef{integer(e[0], "polygon"), integer(e[1], "edge")};
  };
  for (const auto& p : array(member(j, "pairings"), "pairings"))
    spec.pairings.push_back({edge(member(p, "a")), edge(member(p, "b"))});
  return spec;
}

SurfacePoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("cone_point"))
    return SurfacePoint::at_cone(integer(j["cone_point"], "cone_point"));
  return SurfacePoint::at(integer(member(j, "polygon"), "polygon"),
                          {number(member(j, "x"), "x"), number(member(j, "y"), "y")});
}

Packing packing_from_json(const Json& j, const std::filesystem::path& base, double tol) {
  if (j.is_object() && j.contains("packing") && !j.contains("circles"))
    return packing_from_json(j["packing"], base, tol);
  const Json& s = member(j, "surface");
  SurfaceSpec spec;
  if (s.is_string()) {
    const auto path = base / s.get<std::string>();
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot read surface file " + path.string());
    std::stringstream text;
    text << in.rdbuf();
    spec = surface_from_json(parse_json(text.str()));
  } else {
    spec = surface_from_json(s);
  }
  std::vector<SurfaceCircle> circles;
  for (const auto& c : array(member(j, "circles"), "circles")) {
    SurfaceCircle circle;
    circle.id = static_cast<int>(circles.size());
    circle.center = point_from_json(member(c, "center"));
    circle.radius = number(member(c, "radius"), "radius");
    circles.push_back(circle);
  }
  const Surface probe(spec, tol);
  for (const auto& c : circles) {
    if (c.center.is_cone_point()) {
      if (c.center.cone_point >= static_cast<int>(probe.analysis().cone_points.size()))
        throw StructuralError("cone point id out of range");
    } else if (c.center.polygon < 0 || c.center.polygon >= probe.polygon_count()) {
      throw StructuralError("polygon index out of range");
    }
  }
  return make_packing(std::move(spec), std::move(circles), tol);
}

GraphDocument graph_from_json(const Json& j) {
  GraphDocument doc;
  for (const auto& v : array(member(j, "vertices"), "vertices")) doc.graph.vertices.push_back(integer(v, "vertex"));
  int index = 0;
  for (const auto& e : array(member(j, "edges"), "edges")) {
    doc.graph.edges.push_back({index++, integer(member(e, "a"), "a"), integer(member(e, "b"), "b")});
    doc.locations.push_back(location_from_json(member(e, "tangency")));
  }
  return doc;
}

PatternDocument pattern_from_json(const Json& j) {
  PatternDocument doc;
  for (const auto& t : array(member(j, "tangencies"), "tangencies")) {
    TangencyPoint p;
    p.id = integer(member(t, "id"), "id");
    p.a = integer(member(t, "a"), "a");
    p.b = integer(member(t, "b"), "b");
    p.location = location_from_json(member(t, "location"));
    p.angle_a = number(member(t, "angle_a"), "angle_a");
    p.angle_b = number(member(t, "angle_b"), "angle_b");
    p.at_cone_point = member(t, "at_cone_point").get<bool>();
    doc.tangencies.push_back(std::move(p));
  }
  auto pair = [](const Json& p) {
    if (!p.is_array() || p.size() != 2) throw StructuralError("expected a pair");
    return std::array<int, 2>{integer(p[0], "id"), integer(p[1], "id")};
  };
  for (const auto& s : array(member(j, "segments"), "segments")) {
    TangencySegment seg;
    seg.id = integer(member(s, "id"), "id");
    seg.a = integer(member(s, "a"), "a");
    seg.b = integer(member(s, "b"), "b");
    seg.endpoints = pair(member(s, "endpoints"));
    for (const auto& c : array(member(s, "chords"), "chords"))
      seg.chords.push_back({integer(member(c, "circle"), "circle"), number(member(c, "from"), "from"),
                            number(member(c, "to"), "to")});
    doc.pattern.segments.push_back(std::move(seg));
  }
  for (const auto& p : array(member(j, "intersecting"), "intersecting"))
    doc.pattern.intersecting.push_back(pair(p));
  doc.pattern.ambiguous = member(j, "ambiguous").get<bool>();
  return doc;
}

}  // namespace tsurf
