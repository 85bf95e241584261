#include <random>

#include "doctest.h"
#include "support.hpp"

#include "ditopo/examples.hpp"
#include "ditopo/glue.hpp"

using namespace testsupport;

namespace {

DiComplex halves() {
  RectRegion r;
  r.outer = Box::closed(Point{q(0)}, Point{q(1)});
  return build_grid_complex(r, {uniform_lines(2)}, false);
}

GlueSpec two_copies(const DiComplex& part) {
  GlueSpec s;
  s.names = {"P", "Q"};
  s.parts = {part, part};
  return s;
}

DiComplex points(const std::vector<std::string>& ids) {
  DiComplex c;
  for (const auto& v : ids) c.vertices.push_back({v, std::nullopt});
  c.reindex();
  return c;
}

}  // namespace

TEST_CASE("gluing two intervals") {
  GlueSpec mid = two_copies(halves());
  mid.vertices = {{{0, "(1/2)"}, {1, "(1/2)"}}};
  GlueResult x = pushout_identify(mid);
  CHECK(x.space.vertices.size() == 5);
  CHECK(isomorphic(x.space, standard_space("dX")));
  CHECK(x.report.acyclic);

  GlueSpec ends = two_copies(standard_space("dI"));
  ends.vertices = {{{0, "(0)"}, {1, "(0)"}}, {{0, "(1)"}, {1, "(1)"}}};
  GlueResult o = pushout_identify(ends);
  CHECK(isomorphic(o.space, standard_space("dO")));
  CHECK(hom_set(o.space, o.vertexMap[0].at("(0)"), o.vertexMap[0].at("(1)")).class_count() == 2);

  GlueSpec loop;
  loop.names = {"I"};
  loop.parts = {standard_space("dI")};
  loop.vertices = {{{0, "(0)"}, {0, "(1)"}}};
  GlueResult s = pushout_identify(loop);
  CHECK_FALSE(s.report.acyclic);
  CHECK(s.space.localOnly);
  CHECK_FALSE(s.space.loopFree);

  GlueSpec bad = two_copies(standard_space("dI"));
  bad.vertices = {{{0, "(0)"}, {1, "(7)"}}};
  CHECK_THROWS_AS(pushout_identify(bad), UnknownVertexError);
}

TEST_CASE("gluing by coordinates and induced edges") {
  DiComplex sq = standard_space("dIIgrid:1");
  GlueSpec s = two_copies(sq);
  identify_by_coordinates(s, 0, 1);
  GlueResult r = pushout_identify(s);
  CHECK(r.space.vertices.size() == 4);
  CHECK(r.space.edges.size() == 4);
  CHECK_FALSE(r.geometryDropped);
}

TEST_CASE("pushout along the identity reproduces the space") {
  DiComplex D = standard_space("dIIgrid:2");
  DiComplex B = standard_space("dIIgrid:1");
  // B sits in D as the lower-left quarter square.
  std::map<std::string, std::string> vm;
  for (const auto& v : B.vertices) {
    Point p = *v.coords;
    vm[v.id] = point_str(Point{p[0] / q(2), p[1] / q(2)});
  }
  CombMap inc = route_vertex_map(B, D, vm);
  PushoutResult pr = pushout_along_map(D, B, inc, B, identity_comb_map(B));
  CHECK(isomorphic(pr.space, D));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& a : D.vertices)
    for (const auto& b : D.vertices) pairs.push_back({a.id, b.id});
  for (const auto& row : hom_diff(D, pr.space, pairs, pr.induced.vmap)) CHECK(row.before == row.after);
}

TEST_CASE("non-injective inclusions are rejected") {
  DiComplex D = standard_space("dI");
  DiComplex B = points({"u", "v"});
  CombMap inc;
  inc.vmap = {{"u", "(0)"}, {"v", "(0)"}};
  DiComplex Bp = points({"w"});
  CombMap f;
  f.vmap = {{"u", "w"}, {"v", "w"}};
  CHECK_THROWS_AS(pushout_along_map(D, B, inc, Bp, f), InclusionError);
}

namespace {

// Exhaustive check of the pushout universal property at the level of
// vertex sets: for every pair of maps h: V(D) -> T, k: V(B') -> T agreeing
// on B, there is exactly one u: V(E) -> T with u o i = h and u o j = k.
void check_universal(const DiComplex& D, const DiComplex& B, const CombMap& inc, const DiComplex& Bp,
                     const CombMap& f) {
  PushoutResult pr = pushout_along_map(D, B, inc, Bp, f);
  const std::size_t T = 2;
  std::size_t nD = D.vertices.size(), nP = Bp.vertices.size(), nE = pr.space.vertices.size();
  REQUIRE(nD + nP <= 12);
  std::size_t cones = 0;
  for (std::size_t code = 0; code < (1u << (nD + nP)); ++code) {
    std::map<std::string, std::size_t> h, k;
    for (std::size_t i = 0; i < nD; ++i) h[D.vertices[i].id] = (code >> i) & 1u;
    for (std::size_t i = 0; i < nP; ++i) k[Bp.vertices[i].id] = (code >> (nD + i)) & 1u;
    bool cone = true;
    for (const auto& v : B.vertices) cone = cone && h[inc.vmap.at(v.id)] == k[f.vmap.at(v.id)];
    if (!cone) continue;
    ++cones;
    std::size_t mediating = 0;
    for (std::size_t uc = 0; uc < (std::size_t{1} << nE); ++uc) {
      auto u = [&](const std::string& e) { return (uc >> pr.space.vertex(e)) & 1u; };
      bool ok = true;
      for (const auto& v : D.vertices) ok = ok && u(pr.induced.vmap.at(v.id)) == h[v.id];
      for (const auto& v : Bp.vertices) ok = ok && u(pr.targetMap.at(v.id)) == k[v.id];
      mediating += ok;
    }
    CHECK(mediating == 1);
  }
  (void)T;
  CHECK(cones > 0);
}

}  // namespace

TEST_CASE("pushout universal property on small instances") {
  DiComplex sq = standard_space("dIIgrid:1");
  DiComplex edge = standard_space("dI");
  CombMap bottom;
  bottom.vmap = {{"(0)", V(0, 0, 1)}, {"(1)", V(1, 0, 1)}};
  bottom.routing = {{"(0)->(1)", {V(0, 0, 1) + "->" + V(1, 0, 1)}}};
  DiComplex pt = points({"p"});
  CombMap crush;
  crush.vmap = {{"(0)", "p"}, {"(1)", "p"}};
  crush.routing = {{"(0)->(1)", {}}};
  check_universal(sq, edge, bottom, pt, crush);
  check_universal(sq, edge, bottom, edge, identity_comb_map(edge));
  PushoutResult crushed = pushout_along_map(sq, edge, bottom, pt, crush);
  CHECK(crushed.space.vertices.size() == 3);

  DiComplex dX = standard_space("dX");
  DiComplex two = points({"u", "v"});
  CombMap sources;
  sources.vmap = {{"u", "0_1"}, {"v", "0_2"}};
  DiComplex one = points({"w"});
  CombMap merge;
  merge.vmap = {{"u", "w"}, {"v", "w"}};
  check_universal(dX, two, sources, one, merge);
  PushoutResult m = pushout_along_map(dX, two, sources, one, merge);
  CHECK(m.space.vertices.size() == 4);
  // Merged sources reach 1_1 through either incoming edge of the midpoint.
  CHECK(hom_set(m.space, m.induced.vmap.at("0_1"), m.induced.vmap.at("1_1")).class_count() == 2);

  CombMap sink;
  sink.vmap = {{"u", "0_1"}, {"v", "1_2"}};
  check_universal(dX, two, sink, one, merge);
  PushoutResult loop = pushout_along_map(dX, two, sink, one, merge);
  CHECK_FALSE(loop.report.acyclic);
}

TEST_CASE("gluing never removes dipaths") {
  std::mt19937_64 rng(17);
  std::size_t cases = 0;
  for (int it = 0; it < 200; ++it) {
    RandomGrid g = random_grid(rng, 1, 3, 0.3);
    std::uniform_int_distribution<std::size_t> pick(0, g.cx.vertices.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    ++cases;
    DiComplex two = points({"u", "v"});
    CombMap inc;
    inc.vmap = {{"u", g.cx.vertices[a].id}, {"v", g.cx.vertices[b].id}};
    DiComplex one = points({"w"});
    CombMap merge;
    merge.vmap = {{"u", "w"}, {"v", "w"}};
    PushoutResult pr = pushout_along_map(g.cx, two, inc, one, merge);
    for (std::size_t x = 0; x < g.cx.vertices.size(); ++x) {
      auto before = reachable_from(g.cx, static_cast<int>(x));
      auto after = reachable_from(pr.space, pr.space.vertex(pr.induced.vmap.at(g.cx.vertices[x].id)));
      for (std::size_t y = 0; y < g.cx.vertices.size(); ++y)
        if (before[y]) CHECK(after[pr.space.vertex(pr.induced.vmap.at(g.cx.vertices[y].id))]);
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("attachment example: a dipath appears only after collapsing") {
  AttachmentExample ex = build_attachment_example();
  std::size_t changed = 0;
  for (const auto& row : ex.diff) {
    if (!row.emptinessChanged()) continue;
    ++changed;
    CHECK(row.from == ex.a1);
    CHECK(row.to == ex.b2);
    CHECK(row.before == 0);
    CHECK(row.after > 0);
    CHECK(row.witness.has_value());
  }
  CHECK(changed == 1);
  CHECK(hom_set(ex.B, ex.a1, ex.b2).class_count() == 0);
  CHECK(hom_set(ex.C, ex.induced.vmap.at(ex.a1), ex.induced.vmap.at(ex.b2)).class_count() > 0);
}

TEST_CASE("Z model law and its pushouts") {
  for (long n : {4, 5}) {
    ZModel z = build_z_model(n);
    CHECK(z.glue.report.acyclic);
    for (long s = 0; s <= n; ++s)
      for (long t = 0; t <= n; ++t) {
        CAPTURE(s);
        CAPTURE(t);
        bool nonempty = hom_set(z.Z, z.p0(s), z.p1(t)).pathCount > 0;
        CHECK(nonempty == (s == t));
      }
    for (long a = 0; a <= n; ++a)
      for (long b = a + 1; b <= n; ++b) {
        ZPushout zp = push_z_along_collapse(z, a, b);
        CHECK(hom_set(zp.pushout.space, zp.p0a, zp.p1b).pathCount > 0);
        auto rows = hom_diff(z.Z, zp.pushout.space, {{z.p0(a), z.p1(b)}}, zp.pushout.induced.vmap);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].before == 0);
        CHECK(rows[0].emptinessChanged());
        CHECK(rows[0].witness.has_value());
      }
  }
  CHECK_THROWS_AS(z_collapse(build_z_model(4), 3, 1), GridError);
}

TEST_CASE("hom_diff on an unchanged space") {
  DiComplex sq = standard_space("dII");
  auto rows = hom_diff(sq, sq, {{V(0, 0, 1), V(1, 1, 1)}, {V(1, 1, 1), V(0, 0, 1)}});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].before == 1);
  CHECK(rows[0].after == 1);
  CHECK(rows[1].before == 0);
  CHECK_FALSE(rows[1].emptinessChanged());
  CHECK_THROWS_AS(hom_diff(sq, sq, {{"nope", V(0, 0, 1)}}), UnknownVertexError);
}

TEST_CASE("pasting examples") {
  PastingExample p = build_pasting_example();
  check_respects_cells(p.fB, p.B.space, p.Bp.space);
  check_respects_cells(p.gC, p.C.space, p.Cp.space);
  CHECK_FALSE(equivalence_obstruction(p.D, p.F).obstruction);
  CHECK_FALSE(equivalence_obstruction(p.F, p.Gfilled).obstruction);
  CHECK_FALSE(equivalence_obstruction(p.Fp, p.Gp).obstruction);
  ObstructionVerdict fg = equivalence_obstruction(p.F, p.G);
  CHECK(fg.obstruction);
  CHECK(fg.a == "a");
  CHECK(fg.b == "c");
  CHECK(fg.homB.classCount == 1);
  CHECK(fg.homC.classCount == 3);
}
