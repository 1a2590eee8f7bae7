// Python bindings. Documents cross the boundary as JSON text; the package
// wrapper turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsurf/errors.hpp"
#include "tsurf/json_io.hpp"
#include "tsurf/render.hpp"

namespace py = pybind11;
using namespace tsurf;

namespace {

Packing packing_of(const std::string& text, double tol) { return packing_from_json(parse_json(text), {}, tol); }

SurfaceSpec surface_of(const std::string& text, double tol) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("polygons")) return surface_from_json(j);
  return packing_from_json(j, {}, tol).surface->spec();
}

}  // namespace

PYBIND11_MODULE(_tsurf, m) {
  m.doc() = "Circle packings on translation surfaces";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InvalidSurfaceError>(m, "InvalidSurfaceError", base.ptr());
  py::register_exception<InconsistentSurfaceError>(m, "InconsistentSurfaceError", base.ptr());
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", base.ptr());
  py::register_exception<RadiusTooLargeError>(m, "RadiusTooLargeError", base.ptr());
  py::register_exception<InadmissibleCircleError>(m, "InadmissibleCircleError", base.ptr());

  m.attr("default_tol") = kDefaultTol;

  m.def("construction_names", &construction_names);

  m.def(
      "construct",
      [](const std::string& name, int genus, int sides, double side, double stretch, std::optional<double> radius) {
        ConstructParams p;
        p.genus = genus;
        p.sides = sides;
        p.side = side;
        p.stretch = stretch;
        p.radius = radius;
        return construct_json(name, p).dump();
      },
      py::arg("name"), py::arg("genus") = 2, py::arg("sides") = 8, py::arg("side") = 1.0,
      py::arg("stretch") = 1.0, py::arg("radius") = py::none());

  m.def(
      "validate",
      [](const std::string& surface, double tol) { return to_json(validate_spec(surface_of(surface, tol), tol)).dump(); },
      py::arg("surface"), py::arg("tol") = kDefaultTol);

  m.def(
      "analyze",
      [](const std::string& surface, double tol) { return to_json(analyze(surface_of(surface, tol), tol)).dump(); },
      py::arg("surface"), py::arg("tol") = kDefaultTol);

  m.def(
      "check_packing",
      [](const std::string& packing, double tol) { return to_json(check_packing(packing_of(packing, tol), tol)).dump(); },
      py::arg("packing"), py::arg("tol") = kDefaultTol);

  m.def(
      "graph",
      [](const std::string& packing, double tol) {
        const Packing p = packing_of(packing, tol);
        const auto ts = find_tangencies(p, tol);
        return to_json(build_graph(p, ts), ts).dump();
      },
      py::arg("packing"), py::arg("tol") = kDefaultTol);

  m.def(
      "graph_stats",
      [](const std::string& packing, double tol) {
        const GraphStats s = graph_stats(build_graph(packing_of(packing, tol), tol));
        return std::make_pair(s.max_multiedges, s.max_loops);
      },
      py::arg("packing"), py::arg("tol") = kDefaultTol);

  m.def(
      "pattern",
      [](const std::string& packing, double tol) {
        const Packing p = packing_of(packing, tol);
        const auto ts = find_tangencies(p, tol);
        return to_json(compute_pattern(p, ts), ts).dump();
      },
      py::arg("packing"), py::arg("tol") = kDefaultTol);

  m.def(
      "compare",
      [](const std::string& a, const std::string& b, double tol) {
        return to_json(equivalent(packing_of(a, tol), packing_of(b, tol), tol)).dump();
      },
      py::arg("first"), py::arg("second"), py::arg("tol") = kDefaultTol);

  m.def(
      "realize",
      [](const std::string& surface, const std::string& target, std::uint64_t seed, int attempts, int threads,
         double tol) {
        RealizeOptions opt;
        opt.seed = seed;
        opt.attempts = attempts;
        opt.threads = threads;
        opt.tol = tol;
        const auto s = std::make_shared<const Surface>(surface_of(surface, tol), tol);
        const RealizationProblem problem = problem_from_packing(s, packing_of(target, tol), tol);
        RealizationResult r;
        {
          py::gil_scoped_release release;
          r = solve(problem, opt);
        }
        return to_json(r).dump();
      },
      py::arg("surface"), py::arg("target"), py::arg("seed") = 0, py::arg("attempts") = 64,
      py::arg("threads") = 0, py::arg("tol") = kDefaultTol);

  m.def(
      "search",
      [](int trials, std::uint64_t seed, const std::string& strategy, bool inject, int threads, double tol) {
        SearchOptions opt;
        opt.inject_extremal = inject;
        opt.threads = threads;
        opt.tol = tol;
        const CircleStrategy s = strategy_from_string(strategy);
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = run_search(trials, seed, s, opt);
        }
        return to_json(r).dump();
      },
      py::arg("trials"), py::arg("seed") = 0, py::arg("strategy") = "one_cone_circle",
      py::arg("inject") = false, py::arg("threads") = 0, py::arg("tol") = kDefaultTol);

  m.def(
      "render",
      [](const std::string& document, double width, bool tangencies, double tol) {
        RenderOptions opt;
        opt.width = width;
        opt.tangencies = tangencies;
        opt.tol = tol;
        const Json j = parse_json(document);
        if (j.is_object() && j.contains("polygons")) return render_svg(surface_from_json(j), nullptr, opt);
        const Packing p = packing_from_json(j, {}, tol);
        return render_svg(p.surface->spec(), &p, opt);
      },
      py::arg("document"), py::arg("width") = 640.0, py::arg("tangencies") = true, py::arg("tol") = kDefaultTol);
}
