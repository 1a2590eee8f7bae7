#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>
#include <vector>

#include "tsurf/constructions.hpp"
#include "tsurf/render.hpp"

using namespace tsurf;

namespace {

int count(const std::string& svg, const std::string& needle) {
  int n = 0;
  for (size_t at = svg.find(needle); at != std::string::npos; at = svg.find(needle, at + 1)) ++n;
  return n;
}

// Tags nest properly and every element is closed.
bool balanced(const std::string& svg) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else {
      stack.push_back(m[2]);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("c3 drawing") {
  const Packing p = c3_packing();
  const std::string svg = render_svg(p.surface->spec(), &p);
  CHECK(balanced(svg));
  CHECK(count(svg, "class=\"polygon\"") == 1);
  CHECK(count(svg, "class=\"circle\"") == 3);
  CHECK(count(svg, "class=\"tangency\"") == 6);
  CHECK(count(svg, "class=\"edge pair-") == 8);
  CHECK(svg.find("<script") == std::string::npos);
  CHECK(render_svg(p.surface->spec(), &p) == svg);
}

TEST_CASE("surface only") {
  const std::string svg = render_svg(regular_ngon_surface(8));
  CHECK(balanced(svg));
  CHECK(count(svg, "class=\"polygon\"") == 1);
  CHECK(count(svg, "class=\"circle\"") == 0);
  CHECK(count(svg, "class=\"tangency\"") == 0);
  for (int k = 0; k < 4; ++k) CHECK(count(svg, "pair-" + std::to_string(k) + "\"") == 2);
}

TEST_CASE("nine loops drawing") {
  const Packing p = nine_loop_octagon();
  const std::string svg = render_svg(p.surface->spec(), &p);
  CHECK(balanced(svg));
  CHECK(count(svg, "class=\"sector\"") == 8);
  CHECK(count(svg, "class=\"tangency\"") == 9);
}

TEST_CASE("numbers have six decimals") {
  const Packing p = c3_noncrossing_packing();
  const std::string svg = render_svg(p.surface->spec(), &p);
  const std::regex attr(R"(\s(x1|y1|x2|y2|cx|cy|r|width|height|viewBox)="([^"]*)\")");
  const std::regex fixed(R"(-?\d+\.\d{6})");
  int checked = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
    std::istringstream tokens((*it)[2].str());
    for (std::string v; tokens >> v;) {
      if (v == "0") continue;  // viewBox origin
      CHECK(std::regex_match(v, fixed));
      ++checked;
    }
  }
  CHECK(checked > 10);
}
