// tsurf command-line front end. Exit codes: 0 success, 1 domain or
// validation failure, 2 malformed input or usage.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/json_io.hpp"
#include "tsurf/render.hpp"

using namespace tsurf;

namespace {

struct Failure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{2, "cannot read " + path};
    text << in.rdbuf();
  }
  return text.str();
}

std::filesystem::path base_of(const std::string& path) {
  return path == "-" ? std::filesystem::path(".") : std::filesystem::path(path).parent_path();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{2, "cannot write " + path};
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_output(path, j.dump(2) + "\n"); }

bool is_surface(const Json& j) { return j.is_object() && j.contains("polygons"); }

SurfaceSpec load_surface(const std::string& path, double tol) {
  const Json j = parse_json(read_input(path));
  if (is_surface(j)) return surface_from_json(j);
  return packing_from_json(j, base_of(path), tol).surface->spec();
}

Packing load_packing(const std::string& path, double tol) {
  return packing_from_json(parse_json(read_input(path)), base_of(path), tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle packings on translation surfaces"};
  app.require_subcommand(1);
  double tol = kDefaultTol;
  app.add_option("--tol", tol, "Tangency and validation tolerance")->capture_default_str();

  std::string input = "-", input_b, output = "-";

  auto* validate = app.add_subcommand("validate", "Check a surface or packing");
  validate->add_option("input", input, "Surface or packing JSON ('-' for stdin)");
  validate->add_option("-o,--output", output);

  auto* analyze_cmd = app.add_subcommand("analyze", "Cone points, genus and stratum");
  analyze_cmd->add_option("input", input, "Surface or packing JSON");
  analyze_cmd->add_option("-o,--output", output);

  auto* graph = app.add_subcommand("graph", "Contacts graph of a packing");
  graph->add_option("input", input, "Packing JSON");
  graph->add_option("-o,--output", output);

  auto* pattern = app.add_subcommand("pattern", "Tangency segments and their intersections");
  pattern->add_option("input", input, "Packing JSON");
  pattern->add_option("-o,--output", output);

  auto* compare = app.add_subcommand("compare", "Equivalence of two packings");
  compare->add_option("first", input, "Packing JSON")->required();
  compare->add_option("second", input_b, "Packing JSON")->required();
  compare->add_option("-o,--output", output);

  ConstructParams cons;
  std::string cons_name;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a built-in surface or packing");
  construct_cmd->add_option("name", cons_name)->required()->check(CLI::IsMember(construction_names()));
  construct_cmd->add_option("--genus,-g", cons.genus, "Genus for the generators")->capture_default_str();
  construct_cmd->add_option("--sides,-n", cons.sides, "Polygon size for ngon")->capture_default_str();
  construct_cmd->add_option("--side", cons.side, "Side length")->capture_default_str();
  construct_cmd->add_option("--stretch", cons.stretch, "Vertical stretch for four-square")->capture_default_str();
  construct_cmd->add_option("--radius,-r", cons.radius, "Cone circle radius for edges-min (default 0.3 * side)");
  construct_cmd->add_option("-o,--output", output);

  std::string surface_path, target_path;
  RealizeOptions ropt;
  auto* realize = app.add_subcommand("realize", "Solve for a packing matching a target");
  realize->add_option("--surface", surface_path, "Surface (or packing) JSON to realize on")->required();
  realize->add_option("--target", target_path, "Packing whose graph and pattern are the target")->required();
  realize->add_option("--seed", ropt.seed)->capture_default_str();
  realize->add_option("--attempts", ropt.attempts)->capture_default_str();
  realize->add_option("--threads", ropt.threads, "0 = all cores")->capture_default_str();
  realize->add_option("--max-iterations", ropt.max_iterations)->capture_default_str();
  realize->add_option("-o,--output", output);

  int trials = 1000;
  std::uint64_t seed = 0;
  std::string strategy = "one_cone_circle";
  SearchOptions sopt;
  auto* search = app.add_subcommand("search", "Random octagon search for multi-loops and multi-edges");
  search->add_option("--trials", trials)->capture_default_str();
  search->add_option("--seed", seed)->capture_default_str();
  search->add_option("--strategy", strategy, "one_cone_circle, two_circles or cone_plus_regular")
      ->capture_default_str();
  search->add_option("--threads", sopt.threads, "0 = all cores")->capture_default_str();
  search->add_flag("--inject", sopt.inject_extremal, "Add the extremal constructions as trials");
  search->add_option("-o,--output", output);

  RenderOptions view;
  bool no_dots = false;
  auto* render = app.add_subcommand("render", "SVG of a surface or packing");
  render->add_option("input", input, "Surface or packing JSON");
  render->add_option("--width", view.width)->capture_default_str();
  render->add_flag("--no-tangencies", no_dots);
  render->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*validate) {
      const Json j = parse_json(read_input(input));
      Json out;
      bool ok;
      if (is_surface(j)) {
        const auto report = validate_spec(surface_from_json(j), tol);
        ok = report.ok;
        out = Json{{"ok", ok}, {"surface", to_json(report)}};
      } else {
        const Json& pj = j.contains("packing") && !j.contains("circles") ? j["packing"] : j;
        const Json& sj = pj.at("surface");
        const SurfaceSpec spec = sj.is_string() ? load_surface((base_of(input) / sj.get<std::string>()).string(), tol)
                                                : surface_from_json(sj);
        const auto sreport = validate_spec(spec, tol);
        out = Json{{"ok", sreport.ok}, {"surface", to_json(sreport)}};
        ok = sreport.ok;
        if (ok) {
          const auto preport = check_packing(packing_from_json(j, base_of(input), tol), tol);
          ok = preport.ok;
          out["ok"] = ok;
          out["packing"] = to_json(preport);
        }
      }
      write_json(output, out);
      return ok ? 0 : 1;
    }
    if (*analyze_cmd) {
      write_json(output, to_json(analyze(load_surface(input, tol), tol)));
      return 0;
    }
    if (*graph) {
      const Packing p = load_packing(input, tol);
      const auto ts = find_tangencies(p, tol);
      write_json(output, to_json(build_graph(p, ts), ts));
      return 0;
    }
    if (*pattern) {
      const Packing p = load_packing(input, tol);
      const auto ts = find_tangencies(p, tol);
      write_json(output, to_json(compute_pattern(p, ts), ts));
      return 0;
    }
    if (*compare) {
      const Packing a = load_packing(input, tol);
      const Packing b = load_packing(input_b, tol);
      write_json(output, to_json(equivalent(a, b, tol)));
      return 0;
    }
    if (*construct_cmd) {
      write_json(output, construct_json(cons_name, cons));
      return 0;
    }
    if (*realize) {
      ropt.tol = tol;
      const auto surface = std::make_shared<const Surface>(load_surface(surface_path, tol), tol);
      const Packing target = load_packing(target_path, tol);
      write_json(output, to_json(solve(problem_from_packing(surface, target, tol), ropt)));
      return 0;
    }
    if (*search) {
      sopt.tol = tol;
      write_json(output, to_json(run_search(trials, seed, strategy_from_string(strategy), sopt)));
      return 0;
    }
    if (*render) {
      view.tol = tol;
      view.tangencies = !no_dots;
      const Json j = parse_json(read_input(input));
      if (is_surface(j)) {
        write_output(output, render_svg(surface_from_json(j), nullptr, view));
      } else {
        const Packing p = packing_from_json(j, base_of(input), tol);
        write_output(output, render_svg(p.surface->spec(), &p, view));
      }
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "tsurf: " << f.message << "\n";
    return f.code;
  } catch (const StructuralError& e) {
    std::cerr << "tsurf: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "tsurf: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "tsurf: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
