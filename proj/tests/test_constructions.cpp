#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsurf/constructions.hpp"
#include "tsurf/contacts.hpp"
#include "tsurf/errors.hpp"

using namespace tsurf;

namespace {

std::vector<int> stratum(const Packing& p) { return p.surface->analysis().stratum; }

}  // namespace

TEST_CASE("fixed surfaces") {
  CHECK(analyze(three_square_surface()).stratum == std::vector<int>{2});
  CHECK(analyze(four_square_surface()).stratum == std::vector<int>{2});
  CHECK(analyze(four_square_surface(4.0 / 3.0)).stratum == std::vector<int>{2});
  CHECK(analyze(regular_ngon_surface(8)).stratum == std::vector<int>{2});
  CHECK(analyze(regular_ngon_surface(10)).stratum == std::vector<int>{1, 1});
  CHECK(analyze(regular_ngon_surface(12)).stratum == std::vector<int>{4});
  CHECK_THROWS_AS(regular_ngon_surface(7), DomainError);
  CHECK_THROWS_AS(four_square_surface(0.0), DomainError);
}

TEST_CASE("generator counts for g = 2..6") {
  for (int g = 2; g <= 6; ++g) {
    CAPTURE(g);
    const Packing lm = gen_multiloops_minimal_stratum(g);
    const Packing em = gen_multiedges_minimal_stratum(g, 0.3);
    const Packing lp = gen_multiloops_principal_stratum(g);
    const Packing ep = gen_multiedges_principal_stratum(g);
    CHECK(stratum(lm) == std::vector<int>{2 * g - 2});
    CHECK(stratum(em) == std::vector<int>{2 * g - 2});
    CHECK(stratum(lp) == std::vector<int>{g - 1, g - 1});
    CHECK(stratum(ep) == std::vector<int>{g - 1, g - 1});
    for (const Packing* p : {&lm, &em, &lp, &ep}) CHECK(check_packing(*p).ok);
    CHECK(graph_stats(build_graph(lm)).max_loops == 4 * g);
    CHECK(graph_stats(build_graph(em)).max_multiedges == 4 * g);
    CHECK(graph_stats(build_graph(lp)).max_loops == 2 * g + 1);
    CHECK(graph_stats(build_graph(ep)).max_multiedges == 2 * g + 2);
  }
  CHECK_THROWS_AS(gen_multiloops_minimal_stratum(1), DomainError);
  CHECK_THROWS_AS(gen_multiedges_minimal_stratum(2, 0.01), DomainError);
}

TEST_CASE("genus-two extremal witnesses") {
  const GraphStats e = graph_stats(build_graph(gen_multiedges_minimal_stratum(2, 0.3)));
  CHECK(e.max_multiedges == 8);
  CHECK(e.max_loops == 0);

  const Packing nine = nine_loop_octagon();
  CHECK(stratum(nine) == std::vector<int>{2});
  CHECK(check_packing(nine).ok);
  const auto ts = find_tangencies(nine);
  const GraphStats l = graph_stats(build_graph(nine, ts));
  CHECK(l.max_multiedges == 0);
  CHECK(l.max_loops == 9);
  int on_edges = 0, interior = 0;
  for (const auto& t : ts) (nine.surface->presentations(t.location).size() == 2 ? on_edges : interior)++;
  CHECK(on_edges == 4);
  CHECK(interior == 5);
}

TEST_CASE("principal stratum at genus two") {
  CHECK(graph_stats(build_graph(gen_multiloops_principal_stratum(2))).max_loops == 5);
  CHECK(graph_stats(build_graph(gen_multiedges_principal_stratum(2))).max_multiedges == 6);
}

TEST_CASE("c3 packings") {
  const Packing a = c3_packing();
  CHECK(a.circles.size() == 3);
  for (const auto& c : a.circles) CHECK(c.radius == 0.5);
  const Packing b = c3_noncrossing_packing();
  CHECK(b.circles[1].center.is_cone_point());
  CHECK(multiplicity_matrix(build_graph(a)) == multiplicity_matrix(build_graph(b)));
}
