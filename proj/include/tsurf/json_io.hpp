// JSON forms of surfaces, packings, reports. Doubles print as the shortest
// decimal that reads back to the same value.
#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "tsurf/realize.hpp"
#include "tsurf/search.hpp"

namespace tsurf {

using Json = nlohmann::ordered_json;

/// Parse text; syntax errors become StructuralError.
Json parse_json(const std::string& text);

Json to_json(const SurfaceSpec& spec);
Json to_json(const ValidationReport& report);
Json to_json(const SurfaceAnalysis& analysis);
Json to_json(const SurfacePoint& p);
Json to_json(const Packing& packing);
Json to_json(const CheckReport& report);
Json to_json(const TangencyPoint& t);
Json to_json(const ContactsGraph& graph, const std::vector<TangencyPoint>& tangencies);
Json to_json(const TangencyPattern& pattern, const std::vector<TangencyPoint>& tangencies);
Json to_json(const EquivalenceResult& result);
Json to_json(const RealizationResult& result);
Json to_json(const SearchSample& sample);
Json to_json(const SearchReport& report);

struct ConstructParams {
  int genus = 2;
  int sides = 8;  // polygon size for "ngon"
  double side = 1.0;
  double stretch = 1.0;
  std::optional<double> radius;  // cone circle radius for "edges-min", default 0.3 * side
};

/// Names accepted by construct_json.
const std::vector<std::string>& construction_names();
/// A built-in surface (surface document) or packing (packing document).
/// Unknown names throw StructuralError.
Json construct_json(const std::string& name, const ConstructParams& params = {});

/// Missing fields, wrong types and bad indices throw StructuralError.
SurfaceSpec surface_from_json(const Json& j);
SurfacePoint point_from_json(const Json& j);
/// "surface" may be an inline object or a path relative to `base`. An object
/// with a "packing" member (a realize result) is also accepted.
Packing packing_from_json(const Json& j, const std::filesystem::path& base = {},
                          double tol = kDefaultTol);

struct GraphDocument {
  ContactsGraph graph;
  std::vector<SurfacePoint> locations;  // per edge
};
GraphDocument graph_from_json(const Json& j);

struct PatternDocument {
  std::vector<TangencyPoint> tangencies;
  TangencyPattern pattern;
};
PatternDocument pattern_from_json(const Json& j);

}  // namespace tsurf
