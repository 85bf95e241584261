#include "doctest.h"
#include "support.hpp"

#include "ditopo/plmaps.hpp"

using namespace testsupport;

namespace {
RectRegion swiss() {
  RectRegion r = unit_square();
  r.forbidden = {Box::open(P(1, 2, 5), P(4, 3, 5)), Box::open(P(2, 1, 5), P(3, 4, 5))};
  return r;
}
RectRegion square_removed() {
  RectRegion r = unit_square();
  r.forbidden = {Box::open(P(1, 1, 3), P(2, 2, 3))};
  return r;
}
}  // namespace

TEST_CASE("grid complex of the unit square") {
  DiComplex c = build_grid_complex(unit_square(), {uniform_lines(1), uniform_lines(1)}, false);
  CHECK(c.vertices.size() == 4);
  CHECK(c.edges.size() == 4);
  CHECK(c.cells.size() == 1);
  DiComplex t = build_grid_complex(unit_square(), {uniform_lines(1), uniform_lines(1)}, true);
  CHECK(t.edges.size() == 5);
  CHECK(t.cells.size() == 3);
}

TEST_CASE("grid complex with the central third removed") {
  DiComplex c = build_grid_complex(square_removed(), {uniform_lines(3), uniform_lines(3)}, false);
  CHECK(c.vertices.size() == 16);
  CHECK(c.edges.size() == 24);
  CHECK(c.cells.size() == 8);
  // Independent count: the 3x3 squares minus the centre, and every grid
  // segment is on the boundary of some retained square.
  std::size_t retained = 0;
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      if (!(i == 1 && j == 1)) ++retained;
  CHECK(c.cells.size() == retained);
}

TEST_CASE("grid complex of the Swiss flag") {
  DiComplex c = build_grid_complex(swiss(), {uniform_lines(5), uniform_lines(5)}, false);
  CHECK(c.has_vertex(V(2, 2, 5)));
  CHECK(c.has_vertex(V(3, 3, 5)));
  CHECK(c.out_degree(V(2, 2, 5)) == 0);
  CHECK(c.in_degree(V(3, 3, 5)) == 0);
  CHECK_FALSE(c.has_edge(V(2, 2, 5) + "->" + V(3, 2, 5)));
  CHECK_FALSE(c.has_vertex(V(1, 1, 2)));
  // Centre and four arm cells are absent: 25 - 5 squares remain.
  CHECK(c.cells.size() == 20);
  ValidationReport r = validate_complex(c);
  CHECK(r.acyclic);
  CHECK(r.faceClosed);
  CHECK(r.embeddingMonotone);
}

TEST_CASE("missing grid lines are reported") {
  CHECK_THROWS_AS(build_grid_complex(square_removed(), {uniform_lines(2), uniform_lines(2)}, false), GridError);
  CHECK_THROWS_AS(build_grid_complex(unit_square(), {{q(0)}, uniform_lines(1)}, false), GridError);
}

TEST_CASE("standard spaces") {
  DiComplex dI = standard_space("dI");
  CHECK(dI.vertices.size() == 2);
  CHECK(dI.edges.size() == 1);
  DiComplex dX = standard_space("dX");
  CHECK(dX.vertices.size() == 5);
  CHECK(dX.edges.size() == 4);
  CHECK(dX.cells.empty());
  CHECK(dX.in_degree("mid") == 2);
  CHECK(dX.out_degree("mid") == 2);
  DiComplex dO = standard_space("dO");
  CHECK(dO.vertices.size() == 2);
  CHECK(dO.edges.size() == 2);
  CHECK(dO.cells.empty());
  DiComplex dS1 = standard_space("dS1");
  CHECK_FALSE(dS1.loopFree);
  CHECK(dS1.localOnly);
  ValidationReport r = validate_complex(dS1);
  CHECK_FALSE(r.acyclic);
  CHECK(r.cycles.size() == 1);
  DiComplex g3 = standard_space("dIIgrid:3");
  CHECK(g3.vertices.size() == 16);
  CHECK(g3.cells.size() == 9);
  CHECK(standard_space("dIIgrid(2)").cells.size() == 4);
  CHECK(standard_space("dII").cells.size() == 4);
  CHECK_THROWS_AS(standard_space("dQ"), UnknownNameError);
  CHECK_THROWS_AS(standard_space("dIIgrid:0"), UnknownNameError);
}

TEST_CASE("validation flags") {
  ValidationReport g = validate_complex(standard_space("dII"));
  CHECK(g.acyclic);
  CHECK(g.embeddingMonotone);
  CHECK(g.faceClosed);

  DiComplex bad;
  bad.dimension = 2;
  bad.vertices = {{"p", P(1, 0, 1)}, {"r", P(0, 1, 1)}};
  bad.edges = {{"e", "p", "r", EdgeKind::Directed}};
  bad.reindex();
  CHECK_FALSE(validate_complex(bad).embeddingMonotone);

  DiComplex open;
  open.vertices = {{"a", std::nullopt}, {"b", std::nullopt}};
  open.edges = {{"e", "a", "b", EdgeKind::Directed}};
  open.cells = {{"c", {"e"}, {"missing"}}};
  open.reindex();
  CHECK_FALSE(validate_complex(open).faceClosed);
}

TEST_CASE("mark_context") {
  DiComplex dI = standard_space("dI");
  ContextedComplex s0 = mark_context(dI, discrete_context({"a", "b"}), {{"a", "(0)"}, {"b", "(1)"}});
  CHECK(s0.at("a") == "(0)");
  CHECK(s0.at("b") == "(1)");
  CHECK(s0.context_vertices() == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(mark_context(dI, discrete_context({"a"}), {{"a", "(1/2)"}}), MarkingError);
  CHECK_THROWS_AS(s0.at("z"), MarkingError);

  DiComplex sw = build_grid_complex(swiss(), {uniform_lines(5), uniform_lines(5)}, false);
  ContextedComplex s = mark_context(sw, discrete_context({"a", "b", "c", "d"}),
                                    {{"a", V(0, 0, 1)}, {"b", V(1, 1, 1)}, {"c", V(2, 2, 5)}, {"d", V(3, 3, 5)}});
  CHECK(s.marking.size() == 4);
}

TEST_CASE("isomorphism test") {
  CHECK(isomorphic(standard_space("dO"), standard_space("dO")));
  CHECK_FALSE(isomorphic(standard_space("dO"), standard_space("dI")));
  CHECK_FALSE(isomorphic(standard_space("dX"), standard_space("dIIgrid:1")));
}

TEST_CASE("grid complexes always validate, and reachability is a partial order") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    RandomGrid g = random_grid(rng, 1, 4, 0.3, it % 2 == 1);
    ValidationReport r = validate_complex(g.cx);
    CHECK(r.faceClosed);
    CHECK(r.embeddingMonotone);
    CHECK(r.acyclic);
    std::size_t n = g.cx.vertices.size();
    std::vector<std::vector<bool>> reach;
    for (std::size_t v = 0; v < n; ++v) reach.push_back(reachable_from(g.cx, static_cast<int>(v)));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && reach[a][b]) CHECK_FALSE(reach[b][a]);
  }
}

TEST_CASE("removing a forbidden box never removes cells") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    RandomGrid g = random_grid(rng, 2, 4, 0.4);
    if (g.holes.empty()) continue;
    RectRegion fewer = g.region;
    fewer.forbidden.erase(fewer.forbidden.begin());
    DiComplex richer = build_grid_complex(fewer, {uniform_lines(g.k), uniform_lines(g.k)}, false);
    for (const auto& v : g.cx.vertices) CHECK(richer.has_vertex(v.id));
    for (const auto& e : g.cx.edges) CHECK(richer.has_edge(e.id));
    CHECK(richer.cells.size() >= g.cx.cells.size());
  }
}
