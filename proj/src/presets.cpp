#include <algorithm>
#include <functional>
#include <map>

#include "ditopo/errors.hpp"
#include "ditopo/plmaps.hpp"

namespace ditopo {

namespace {

Rat q(long n, long d = 1) { return Rat(n, d); }

RectRegion unit(std::size_t n) {
  RectRegion r;
  r.outer = Box::closed(Point(n, Rat(0)), Point(n, Rat(1)));
  return r;
}

GeoSpaceP region_geo(const std::string& name, const RectRegion& r, const std::vector<std::vector<Rat>>& lines,
                     bool triangulate, const std::vector<std::pair<std::string, Point>>& marks) {
  auto g = std::make_shared<GeoSpace>();
  g->name = name;
  DiComplex cx = build_grid_complex(r, lines, triangulate);
  std::vector<std::string> names;
  std::map<std::string, std::string> marking;
  for (const auto& [a, p] : marks) {
    names.push_back(a);
    marking[a] = point_str(p);
  }
  g->cx = mark_context(cx, discrete_context(names), marking);
  g->pl = make_region_space(name, r, lines);
  return g;
}

// A complex given by embedded directed segments; its geometry is their union.
GeoSpaceP segments_geo(const std::string& name, std::size_t dim, const std::vector<std::pair<Point, Point>>& segs,
                       const std::vector<std::pair<std::string, Point>>& marks) {
  auto g = std::make_shared<GeoSpace>();
  g->name = name;
  DiComplex cx;
  cx.dimension = dim;
  std::vector<Cell> cells;
  std::vector<Point> pts;
  for (const auto& [a, b] : segs) {
    pts.push_back(a);
    pts.push_back(b);
    cx.edges.push_back({point_str(a) + "->" + point_str(b), point_str(a), point_str(b), EdgeKind::Directed});
    cells.push_back(segment_cell(a, b));
  }
  for (const auto& [n, p] : marks) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) cx.vertices.push_back({point_str(p), p});
  refresh_flags(cx);
  std::vector<std::string> names;
  std::map<std::string, std::string> marking;
  for (const auto& [a, p] : marks) {
    names.push_back(a);
    marking[a] = point_str(p);
  }
  g->cx = mark_context(cx, discrete_context(names), marking);
  g->pl = make_cells_space(name, dim, cells);
  return g;
}

GeoSpaceP point_geo(const std::string& name, const std::vector<std::string>& ctx) {
  auto g = std::make_shared<GeoSpace>();
  g->name = name;
  DiComplex cx;
  cx.dimension = 1;
  cx.vertices.push_back({"*", Point{q(0)}});
  refresh_flags(cx);
  std::map<std::string, std::string> marking;
  for (const auto& a : ctx) marking[a] = "*";
  g->cx = mark_context(cx, discrete_context(ctx), marking);
  g->pl = make_cells_space(name, 1, {point_cell(Point{q(0)})});
  return g;
}

std::vector<Rat> fifths() { return uniform_lines(5); }

RectRegion swiss_region() {
  RectRegion r = unit(2);
  auto box = [](Rat x0, Rat y0, Rat x1, Rat y1) { return Box::open(Point{x0, y0}, Point{x1, y1}); };
  r.forbidden = {box(q(2, 5), q(2, 5), q(3, 5), q(3, 5)), box(q(1, 5), q(2, 5), q(2, 5), q(3, 5)),
                 box(q(3, 5), q(2, 5), q(4, 5), q(3, 5)), box(q(2, 5), q(1, 5), q(3, 5), q(2, 5)),
                 box(q(2, 5), q(3, 5), q(3, 5), q(4, 5))};
  return r;
}

RectRegion square_removed_region() {
  RectRegion r = unit(2);
  r.forbidden = {Box::open(Point{q(1, 3), q(1, 3)}, Point{q(2, 3), q(2, 3)})};
  return r;
}

std::vector<std::pair<std::string, Point>> swiss_marks() {
  return {{"a", Point{q(0), q(0)}}, {"b", Point{q(1), q(1)}}, {"c", Point{q(2, 5), q(2, 5)}},
          {"d", Point{q(3, 5), q(3, 5)}}};
}

std::vector<std::pair<std::string, Point>> corner_marks(std::size_t n) {
  return {{"a", Point(n, q(0))}, {"b", Point(n, q(1))}};
}

GeoSpaceP build_space(const std::string& name) {
  if (name == "dI") return region_geo(name, unit(1), {uniform_lines(1)}, false, {});
  if (name == "dI-S0") return region_geo(name, unit(1), {uniform_lines(1)}, false, corner_marks(1));
  if (name == "dI-halves-corners") return region_geo(name, unit(1), {uniform_lines(2)}, false, corner_marks(1));
  if (name == "point") return point_geo(name, {});
  if (name == "point-S0") return point_geo(name, {"a", "b"});
  if (name == "dII") return region_geo(name, unit(2), {uniform_lines(2), uniform_lines(2)}, false, {});
  if (name == "dII-corners")
    return region_geo(name, unit(2), {uniform_lines(2), uniform_lines(2)}, true, corner_marks(2));
  if (name == "dX") {
    Rat h(1, 2);
    auto g = segments_geo(name, 2,
                          {{{0, h}, {h, h}}, {{h, h}, {1, h}}, {{h, 0}, {h, h}}, {{h, h}, {h, 1}}}, {});
    auto mut = std::const_pointer_cast<GeoSpace>(g);
    mut->cx.space = standard_space("dX");
    return g;
  }
  if (name == "square-removed")
    return region_geo(name, square_removed_region(), {uniform_lines(3), uniform_lines(3)}, false, corner_marks(2));
  if (name == "square-boundary") {
    RectRegion r = unit(2);
    r.forbidden = {Box::open(Point{q(0), q(0)}, Point{q(1), q(1)})};
    return region_geo(name, r, {uniform_lines(1), uniform_lines(1)}, false, corner_marks(2));
  }
  if (name == "swiss-flag") return region_geo(name, swiss_region(), {fifths(), fifths()}, false, swiss_marks());
  if (name == "swiss-flag-tri") return region_geo(name, swiss_region(), {fifths(), fifths()}, true, swiss_marks());
  if (name == "swiss-sub") {
    auto P = [](long x, long y) { return Point{q(x, 5), q(y, 5)}; };
    return segments_geo(name, 2,
                        {{P(0, 0), P(1, 1)},
                         {P(1, 1), P(2, 2)},
                         {P(3, 3), P(4, 4)},
                         {P(4, 4), P(5, 5)},
                         {P(1, 1), P(1, 3)},
                         {P(1, 3), P(2, 4)},
                         {P(2, 4), P(4, 4)},
                         {P(1, 1), P(3, 1)},
                         {P(3, 1), P(4, 2)},
                         {P(4, 2), P(4, 4)}},
                        swiss_marks());
  }
  throw UnknownNameError("unknown preset space '" + name + "'");
}

// Builders for coordinate expressions in two variables.
ExprP X() { return ex::var(0); }
ExprP Y() { return ex::var(1); }
ExprP L(Rat a, Rat b, Rat c) { return ex::lin({a, b}, c); }
ExprP C(Rat v) { return ex::cst(v); }
Guard ax(std::size_t i, Rel r, Rat v) { return ex::axis(2, i, r, v); }

struct Case2 {
  std::vector<Guard> when;
  ExprP x, y;
};

Stage piecewise2(const std::vector<Case2>& cases, ExprP ox, ExprP oy) {
  std::vector<Case> cx, cy;
  for (const auto& c : cases) {
    cx.push_back({c.when, c.x});
    cy.push_back({c.when, c.y});
  }
  return {ex::piecewise(cx, ox), ex::piecewise(cy, oy)};
}

ExprP F1(std::size_t n, std::size_t i) {
  auto g = [&](Rel r, Rat v) { return ex::axis(n, i, r, v); };
  std::vector<Rat> two(n, q(0));
  two[i] = q(2);
  return ex::piecewise({{{g(Rel::Lt, q(1, 3))}, ex::var(i)},
                        {{g(Rel::Ge, q(1, 3)), g(Rel::Le, q(2, 3))}, ex::lin(two, q(-1, 3))},
                        {{g(Rel::Gt, q(2, 3))}, ex::cst(q(1))}});
}

ExprP F2(std::size_t n, std::size_t i) {
  auto g = [&](Rel r, Rat v) { return ex::axis(n, i, r, v); };
  std::vector<Rat> k(n, q(0));
  k[i] = q(3, 2);
  return ex::piecewise({{{g(Rel::Lt, q(1, 3))}, ex::cst(q(0))},
                        {{g(Rel::Ge, q(1, 3)), g(Rel::Le, q(1))}, ex::lin(k, q(-1, 2))}});
}

Stage swiss_f1() {
  auto mx = ex::max({X(), Y()});
  return piecewise2(
      {{{ax(0, Rel::Ge, q(0)), ax(0, Rel::Le, q(1, 5)), ax(1, Rel::Ge, q(0)), ax(1, Rel::Le, q(1, 5))}, mx, mx},
       {{ax(0, Rel::Ge, q(0)), ax(0, Rel::Le, q(1, 5)), ax(1, Rel::Gt, q(1, 5))}, C(q(1, 5)), Y()},
       {{ax(1, Rel::Ge, q(0)), ax(1, Rel::Le, q(1, 5)), ax(0, Rel::Gt, q(1, 5))}, X(), C(q(1, 5))}},
      X(), Y());
}

Stage swiss_f2() {
  auto mn = ex::min({X(), Y()});
  return piecewise2(
      {{{ax(0, Rel::Ge, q(4, 5)), ax(0, Rel::Le, q(1)), ax(1, Rel::Ge, q(4, 5)), ax(1, Rel::Le, q(1))}, mn, mn},
       {{ax(0, Rel::Ge, q(4, 5)), ax(0, Rel::Le, q(1)), ax(1, Rel::Lt, q(4, 5))}, C(q(4, 5)), Y()},
       {{ax(1, Rel::Ge, q(4, 5)), ax(1, Rel::Le, q(1)), ax(0, Rel::Lt, q(4, 5))}, X(), C(q(4, 5))}},
      X(), Y());
}

Stage swiss_f3() {
  auto mx = ex::max({X(), Y()});
  return piecewise2(
      {{{ax(0, Rel::Ge, q(1, 5)), ax(0, Rel::Le, q(2, 5)), ax(1, Rel::Ge, q(3, 5)), ax(1, Rel::Le, q(4, 5))},
        ex::max({X(), L(q(0), q(1), q(-2, 5))}),
        ex::max({L(q(1), q(0), q(2, 5)), Y()})},
       {{ax(1, Rel::Ge, q(1, 5)), ax(1, Rel::Le, q(2, 5)), ax(0, Rel::Ge, q(3, 5)), ax(0, Rel::Le, q(4, 5))},
        ex::max({X(), L(q(0), q(1), q(2, 5))}),
        ex::max({L(q(1), q(0), q(-2, 5)), Y()})},
       {{ax(0, Rel::Ge, q(3, 5)), ax(0, Rel::Le, q(4, 5)), ax(1, Rel::Ge, q(3, 5)), ax(1, Rel::Le, q(4, 5))}, mx, mx},
       {{ax(0, Rel::Ge, q(2, 5)), ax(0, Rel::Le, q(3, 5)), ax(1, Rel::Eq, q(4, 5))},
        ex::sum({{q(2), L(q(1), q(0), q(-2, 5))}}, q(2, 5)),
        Y()},
       {{ax(1, Rel::Ge, q(2, 5)), ax(1, Rel::Le, q(3, 5)), ax(0, Rel::Eq, q(4, 5))},
        X(),
        ex::sum({{q(2), L(q(0), q(1), q(-2, 5))}}, q(2, 5))}},
      X(), Y());
}

Stage swiss_f4() {
  auto mn = ex::min({X(), Y()});
  return piecewise2(
      {{{ax(0, Rel::Ge, q(1, 5)), ax(0, Rel::Le, q(2, 5)), ax(1, Rel::Ge, q(1, 5)), ax(1, Rel::Le, q(2, 5))}, mn, mn},
       {{ax(0, Rel::Ge, q(2, 5)), ax(0, Rel::Le, q(3, 5)), ax(1, Rel::Eq, q(1, 5))},
        ex::sum({{q(-2), L(q(-1), q(0), q(3, 5))}}, q(3, 5)),
        Y()},
       {{ax(1, Rel::Ge, q(2, 5)), ax(1, Rel::Le, q(3, 5)), ax(0, Rel::Eq, q(1, 5))},
        X(),
        ex::sum({{q(-2), L(q(0), q(-1), q(3, 5))}}, q(3, 5))}},
      X(), Y());
}

PLMap mk(const std::string& name, PLSpaceP dom, PLSpaceP cod, std::vector<Stage> stages) {
  PLMap m;
  m.name = name;
  m.domain = std::move(dom);
  m.codomain = std::move(cod);
  m.stages = std::move(stages);
  return m;
}

PLMap with_spaces(PLMap m, PLSpaceP dom, PLSpaceP cod) {
  m.domain = std::move(dom);
  m.codomain = std::move(cod);
  return m;
}

Homotopy named(Homotopy h, const std::string& name) {
  h.name = name;
  return h;
}

// Restriction of an interpolation to a subspace that it preserves.
Homotopy restrict_to(const Homotopy& h, PLSpaceP sub) {
  Homotopy r = h;
  r.domain = sub;
  r.codomain = sub;
  if (h.from) r.from = std::make_shared<PLMap>(with_spaces(*h.from, sub, sub));
  if (h.to) r.to = std::make_shared<PLMap>(with_spaces(*h.to, sub, sub));
  r.name = h.name + "|" + sub->name;
  return r;
}

PLSpaceP pl(const std::string& space) { return preset_space(space)->pl; }

const std::map<std::string, std::function<PLMap()>>& map_table() {
  static const std::map<std::string, std::function<PLMap()>> t = {
      {"id-dI", [] { return with_spaces(identity_plmap(pl("dI")), pl("dI"), pl("dI")); }},
      {"const0", [] { return mk("const0", pl("dI"), pl("dI"), {{ex::cst(q(0))}}); }},
      {"const1", [] { return mk("const1", pl("dI"), pl("dI"), {{ex::cst(q(1))}}); }},
      {"oneminus", [] { return mk("oneminus", pl("dI"), pl("dI"), {{ex::lin({q(-1)}, q(1))}}); }},
      {"F1", [] { return mk("F1", pl("dI"), pl("dI"), {{F1(1, 0)}}); }},
      {"F2", [] { return mk("F2", pl("dI"), pl("dI"), {{F2(1, 0)}}); }},
      {"F2F1", [] { return mk("F2F1", pl("dI"), pl("dI"), {{F1(1, 0)}, {F2(1, 0)}}); }},
      {"dI-f", [] { return mk("dI-f", pl("dI"), pl("point"), {{ex::cst(q(0))}}); }},
      {"dI-g", [] { return mk("dI-g", pl("point"), pl("dI"), {{ex::cst(q(1))}}); }},
      {"dII-f", [] { return mk("dII-f", pl("dII"), pl("point"), {{ex::cst(q(0))}}); }},
      {"dII-g", [] { return mk("dII-g", pl("point"), pl("dII"), {{ex::cst(q(1)), ex::cst(q(1))}}); }},
      {"dX-f", [] { return mk("dX-f", pl("dX"), pl("point"), {{ex::cst(q(0))}}); }},
      {"dX-g", [] { return mk("dX-g", pl("point"), pl("dX"), {{ex::cst(q(1, 2)), ex::cst(q(1, 2))}}); }},
      {"dX-h",
       [] {
         return mk("dX-h", pl("dX"), pl("dX"), {{ex::max({X(), C(q(1, 2))}), ex::max({Y(), C(q(1, 2))})}});
       }},
      {"max", [] { return mk("max", pl("dII"), pl("dI"), {{ex::max({X(), Y()})}}); }},
      {"diag", [] { return mk("diag", pl("dI"), pl("dII"), {{ex::var(0), ex::var(0)}}); }},
      {"maxmax",
       [] {
         auto m = ex::max({X(), Y()});
         return mk("maxmax", pl("dII"), pl("dII"), {{m, m}});
       }},
      {"sq-f",
       [] {
         return mk("sq-f", pl("square-removed"), pl("square-boundary"), {{F1(2, 0), F1(2, 1)}, {F2(2, 0), F2(2, 1)}});
       }},
      {"sq-g", [] { return mk("sq-g", pl("square-boundary"), pl("square-removed"), {{X(), Y()}}); }},
      {"sq-h", [] { return mk("sq-h", pl("square-removed"), pl("square-removed"), {{F1(2, 0), F1(2, 1)}}); }},
      {"f1", [] { return mk("f1", pl("swiss-flag"), pl("swiss-flag"), {swiss_f1()}); }},
      {"f2", [] { return mk("f2", pl("swiss-flag"), pl("swiss-flag"), {swiss_f2()}); }},
      {"f3",
       [] {
         static PLSpaceP dom = image_space(mk("f2 o f1", pl("swiss-flag"), pl("swiss-flag"), {swiss_f1(), swiss_f2()}),
                                           "f2f1(swiss-flag)");
         return mk("f3", dom, pl("swiss-flag"), {swiss_f3()});
       }},
      {"f4",
       [] {
         static PLSpaceP dom = image_space(
             mk("f3 o f2 o f1", pl("swiss-flag"), pl("swiss-flag"), {swiss_f1(), swiss_f2(), swiss_f3()}),
             "f3f2f1(swiss-flag)");
         return mk("f4", dom, pl("swiss-flag"), {swiss_f4()});
       }},
      {"f2f1", [] { return mk("f2 o f1", pl("swiss-flag"), pl("swiss-flag"), {swiss_f1(), swiss_f2()}); }},
      {"f3f2f1",
       [] { return mk("f3 o f2 o f1", pl("swiss-flag"), pl("swiss-flag"), {swiss_f1(), swiss_f2(), swiss_f3()}); }},
      {"swiss-f",
       [] {
         return mk("swiss-f", pl("swiss-flag"), pl("swiss-sub"), {swiss_f1(), swiss_f2(), swiss_f3(), swiss_f4()});
       }},
      {"swiss-g", [] { return mk("swiss-g", pl("swiss-sub"), pl("swiss-flag"), {{X(), Y()}}); }},
  };
  return t;
}

const std::map<std::string, std::function<Homotopy()>>& homotopy_table() {
  static const std::map<std::string, std::function<Homotopy()>> t = {
      {"dI-H",
       [] { return named(linear_interpolation(preset_map("id-dI"), preset_map("const1")), "dI-H"); }},
      {"dI-down",
       [] { return named(linear_interpolation(preset_map("id-dI"), preset_map("const0")), "dI-down"); }},
      {"dII-phi",
       [] {
         auto id = with_spaces(identity_plmap(pl("dII-corners")), pl("dII-corners"), pl("dII-corners"));
         auto gf = with_spaces(preset_map("maxmax"), pl("dII-corners"), pl("dII-corners"));
         return named(linear_interpolation(id, gf), "phi");
       }},
      {"sq-H1",
       [] {
         auto id = with_spaces(identity_plmap(pl("square-removed")), pl("square-removed"), pl("square-removed"));
         return named(linear_interpolation(id, preset_map("sq-h")), "H1");
       }},
      {"sq-H2",
       [] {
         auto gf = with_spaces(compose_plmaps(preset_map("sq-g"), preset_map("sq-f")), pl("square-removed"),
                               pl("square-removed"));
         gf.name = "g o f";
         return named(linear_interpolation(gf, preset_map("sq-h")), "H2");
       }},
      {"swiss-H1",
       [] {
         auto id = with_spaces(identity_plmap(pl("swiss-flag")), pl("swiss-flag"), pl("swiss-flag"));
         return named(linear_interpolation(id, preset_map("f1")), "H1");
       }},
      {"swiss-H2",
       [] { return named(linear_interpolation(preset_map("f2f1"), preset_map("f1")), "H2"); }},
      {"swiss-H3",
       [] { return named(linear_interpolation(preset_map("f2f1"), preset_map("f3f2f1")), "H3"); }},
      {"swiss-H4",
       [] {
         auto f = with_spaces(preset_map("swiss-f"), pl("swiss-flag"), pl("swiss-flag"));
         f.name = "f";
         return named(linear_interpolation(f, preset_map("f3f2f1")), "H4");
       }},
      {"dX-H1",
       [] {
         auto id = with_spaces(identity_plmap(pl("dX")), pl("dX"), pl("dX"));
         return named(linear_interpolation(id, preset_map("dX-h")), "H1");
       }},
      {"dX-H2",
       [] {
         auto gf = compose_plmaps(preset_map("dX-g"), preset_map("dX-f"));
         gf.name = "g o f";
         return named(linear_interpolation(gf, preset_map("dX-h")), "H2");
       }},
  };
  return t;
}

Certificate point_cert(const std::string& name, const std::string& B, const std::string& C, const std::string& f,
                       const std::string& g) {
  Certificate c;
  c.name = name;
  c.B = preset_space(B);
  c.C = preset_space(C);
  c.f = with_spaces(preset_map(f), c.B->pl, c.C->pl);
  c.g = with_spaces(preset_map(g), c.C->pl, c.B->pl);
  auto id = with_spaces(identity_plmap(c.B->pl), c.B->pl, c.B->pl);
  auto gf = compose_plmaps(c.g, c.f);
  gf.name = "g o f";
  c.zigzagBC = {{named(linear_interpolation(id, gf), "H"), true}};
  return c;
}

const std::map<std::string, std::function<Certificate()>>& cert_table() {
  static const std::map<std::string, std::function<Certificate()>> t = {
      {"dI-point", [] { return point_cert("dI-point", "dI", "point", "dI-f", "dI-g"); }},
      {"dII-point", [] { return point_cert("dII-point", "dII", "point", "dII-f", "dII-g"); }},
      {"dI-point-S0", [] { return point_cert("dI-point-S0", "dI-S0", "point-S0", "dI-f", "dI-g"); }},
      {"dX-point",
       [] {
         Certificate c;
         c.name = "dX-point";
         c.B = preset_space("dX");
         c.C = preset_space("point");
         c.f = preset_map("dX-f");
         c.g = preset_map("dX-g");
         c.zigzagBC = {{preset_homotopy("dX-H1"), true}, {preset_homotopy("dX-H2"), false}};
         return c;
       }},
      {"dII-dI-corners",
       [] {
         Certificate c;
         c.name = "dII-dI-corners";
         c.B = preset_space("dII-corners");
         c.C = preset_space("dI-halves-corners");
         c.f = with_spaces(preset_map("max"), c.B->pl, c.C->pl);
         c.g = with_spaces(preset_map("diag"), c.C->pl, c.B->pl);
         c.zigzagBC = {{preset_homotopy("dII-phi"), true}};
         return c;
       }},
      {"square-removed",
       [] {
         Certificate c;
         c.name = "square-removed";
         c.B = preset_space("square-removed");
         c.C = preset_space("square-boundary");
         c.f = preset_map("sq-f");
         c.g = preset_map("sq-g");
         auto H1 = preset_homotopy("sq-H1"), H2 = preset_homotopy("sq-H2");
         c.zigzagBC = {{H1, true}, {H2, false}};
         c.zigzagCB = {{restrict_to(H1, c.C->pl), true}, {restrict_to(H2, c.C->pl), false}};
         return c;
       }},
      {"swiss-flag",
       [] {
         Certificate c;
         c.name = "swiss-flag";
         c.B = preset_space("swiss-flag");
         c.C = preset_space("swiss-sub");
         c.f = preset_map("swiss-f");
         c.g = preset_map("swiss-g");
         std::vector<Homotopy> H;
         for (const char* n : {"swiss-H1", "swiss-H2", "swiss-H3", "swiss-H4"}) H.push_back(preset_homotopy(n));
         c.zigzagBC = {{H[0], true}, {H[1], false}, {H[2], true}, {H[3], false}};
         for (std::size_t k = 0; k < 4; ++k) c.zigzagCB.push_back({restrict_to(H[k], c.C->pl), k % 2 == 0});
         return c;
       }},
  };
  return t;
}

}  // namespace

GeoSpaceP preset_space(const std::string& name) {
  static std::map<std::string, GeoSpaceP> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto s = build_space(name);
  cache[name] = s;
  return s;
}

PLMap preset_map(const std::string& name) {
  const auto& t = map_table();
  auto it = t.find(name);
  if (it == t.end()) throw UnknownNameError("unknown preset map '" + name + "'");
  return it->second();
}

Homotopy preset_homotopy(const std::string& name) {
  const auto& t = homotopy_table();
  auto it = t.find(name);
  if (it == t.end()) throw UnknownNameError("unknown preset homotopy '" + name + "'");
  return it->second();
}

Certificate preset_certificate(const std::string& name) {
  const auto& t = cert_table();
  auto it = t.find(name);
  if (it == t.end()) throw UnknownNameError("unknown preset certificate '" + name + "'");
  return it->second();
}

std::vector<std::string> preset_map_names() {
  std::vector<std::string> v;
  for (const auto& [k, _] : map_table()) v.push_back(k);
  return v;
}

std::vector<std::string> preset_homotopy_names() {
  std::vector<std::string> v;
  for (const auto& [k, _] : homotopy_table()) v.push_back(k);
  return v;
}

std::vector<std::string> preset_certificate_names() {
  std::vector<std::string> v;
  for (const auto& [k, _] : cert_table()) v.push_back(k);
  return v;
}

std::vector<std::string> preset_space_names() {
  return {"dI",         "dI-S0",          "dI-halves-corners", "point",      "point-S0",       "dII",
          "dII-corners", "dX",            "square-removed",    "square-boundary", "swiss-flag", "swiss-flag-tri",
          "swiss-sub"};
}

}  // namespace ditopo
