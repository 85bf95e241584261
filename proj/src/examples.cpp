#include "ditopo/examples.hpp"

#include <set>

#include "ditopo/errors.hpp"

namespace ditopo {

namespace {

Rat q(long n, long d = 1) { return Rat(n, d); }

RectRegion box_region(Point lo, Point hi, std::vector<std::pair<Point, Point>> holes) {
  RectRegion r;
  r.outer = Box::closed(std::move(lo), std::move(hi));
  for (auto& [a, b] : holes) r.forbidden.push_back(Box::open(a, b));
  return r;
}

std::vector<Rat> shifted(const std::vector<Rat>& v, const Rat& d) {
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(x + d);
  return out;
}

ContextedComplex with_marks(const DiComplex& c, const std::vector<std::pair<std::string, std::string>>& marks) {
  std::vector<std::string> names;
  std::map<std::string, std::string> m;
  for (const auto& [a, v] : marks) {
    names.push_back(a);
    m[a] = v;
  }
  return mark_context(c, discrete_context(names), m);
}

CombMap identity_inclusion(const DiComplex& B) { return identity_comb_map(B); }

DiComplex segments_complex(const std::vector<std::pair<Point, Point>>& segs) {
  DiComplex c;
  c.dimension = 2;
  std::set<Point> pts;
  for (const auto& [a, b] : segs) {
    pts.insert(a);
    pts.insert(b);
    c.edges.push_back({point_str(a) + "->" + point_str(b), point_str(a), point_str(b), EdgeKind::Directed});
  }
  for (const auto& p : pts) c.vertices.push_back({point_str(p), p});
  refresh_flags(c);
  return c;
}

std::string P2(const Rat& x, const Rat& y) { return point_str(Point{x, y}); }

}  // namespace

AttachmentExample build_attachment_example() {
  AttachmentExample ex;
  RectRegion unit2 = box_region(Point{q(0), q(0)}, Point{q(1), q(1)}, {});
  RectRegion unit1 = box_region(Point{q(0)}, Point{q(1)}, {});
  ex.dII = build_grid_complex(unit2, {uniform_lines(4), uniform_lines(4)}, false);
  ex.dI = build_grid_complex(unit1, {uniform_lines(4)}, false);
  GlueSpec spec;
  spec.names = {"X", "O1", "O2"};
  spec.parts = {ex.dII, standard_space("dO"), standard_space("dO")};
  spec.vertices = {{{0, P2(q(0), q(1, 4))}, {1, "b"}}, {{0, P2(q(3, 4), q(0))}, {2, "a"}}};
  GlueResult g = pushout_identify(spec);
  ex.B = g.space;
  ex.a1 = g.vertexMap[1].at("a");
  ex.b1 = g.vertexMap[1].at("b");
  ex.a2 = g.vertexMap[2].at("a");
  ex.b2 = g.vertexMap[2].at("b");

  std::map<std::string, std::string> vm;
  for (const auto& v : ex.dII.vertices) vm[v.id] = point_str(Point{rmax((*v.coords)[0], (*v.coords)[1])});
  ex.collapse = route_vertex_map(ex.dII, ex.dI, vm);
  CombMap incl;
  for (const auto& v : ex.dII.vertices) incl.vmap[v.id] = g.vertexMap[0].at(v.id);
  for (const auto& e : ex.dII.edges) incl.routing[e.id] = {g.edgeMap[0].at(e.id)};
  PushoutResult po = pushout_along_map(ex.B, ex.dII, incl, ex.dI, ex.collapse, "I");
  ex.C = po.space;
  ex.induced = po.induced;
  ex.watch = {{ex.a1, ex.b2}, {ex.b2, ex.a1}, {ex.a1, ex.b1}, {ex.a2, ex.b2}};
  ex.diff = hom_diff(ex.B, ex.C, ex.watch, ex.induced.vmap);
  return ex;
}

std::string ZModel::p0(long i) const { return "Y." + P2(q(i, n), q(0)); }
std::string ZModel::p1(long i) const { return "Y." + P2(q(i, n), q(1)); }
std::string ZModel::p(long i) const { return "X." + P2(q(i, n), q(1) - q(i, n)); }

ZModel build_z_model(long n) {
  if (n < 1) throw GridError("grid size must be positive");
  ZModel z;
  z.n = n;
  RectRegion unit2 = box_region(Point{q(0), q(0)}, Point{q(1), q(1)}, {});
  z.X = build_grid_complex(unit2, {uniform_lines(n), uniform_lines(n)}, true);
  std::vector<Rat> levels{q(0), q(1, 2), q(1)};
  for (long i = 0; i <= n; ++i)
    for (const auto& l : levels) z.Y.vertices.push_back({P2(q(i, n), l), Point{q(i, n), l}});
  for (long i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      std::string a = P2(q(i, n), levels[k]), b = P2(q(i, n), levels[k + 1]);
      z.Y.edges.push_back({a + "->" + b, a, b, EdgeKind::Directed});
    }
    if (i < n)
      for (const auto& l : levels) {
        std::string a = P2(q(i, n), l), b = P2(q(i + 1, n), l);
        z.Y.edges.push_back({a + "--" + b, a, b, EdgeKind::Undirected});
      }
  }
  z.Y.dimension = 2;
  refresh_flags(z.Y);
  GlueSpec spec;
  spec.names = {"X", "Y"};
  spec.parts = {z.X, z.Y};
  for (long i = 0; i <= n; ++i)
    spec.vertices.push_back({{0, P2(q(i, n), q(1) - q(i, n))}, {1, P2(q(i, n), q(1, 2))}});
  z.glue = pushout_identify(spec);
  z.Z = z.glue.space;
  return z;
}

CombMap z_collapse(const ZModel& z, long ia, long ib) {
  if (ia < 0 || ib > z.n || ia > ib) throw GridError("merge interval must satisfy 0 <= a <= b <= n");
  std::map<std::string, std::string> vm;
  for (long i = 0; i <= z.n; ++i)
    for (long j = 0; j <= z.n; ++j) {
      long i2 = (i >= ia && i <= ib) ? ib : i;
      long j2 = (j >= z.n - ib && j <= z.n - ia) ? z.n - ia : j;
      vm[P2(q(i, z.n), q(j, z.n))] = P2(q(i2, z.n), q(j2, z.n));
    }
  return route_vertex_map(z.X, z.X, vm);
}

ZPushout push_z_along_collapse(const ZModel& z, long ia, long ib) {
  CombMap f = z_collapse(z, ia, ib);
  CombMap incl;
  for (const auto& v : z.X.vertices) incl.vmap[v.id] = z.glue.vertexMap[0].at(v.id);
  for (const auto& e : z.X.edges) incl.routing[e.id] = {z.glue.edgeMap[0].at(e.id)};
  ZPushout r;
  r.pushout = pushout_along_map(z.Z, z.X, incl, z.X, f, "X'");
  r.p0a = r.pushout.induced.vmap.at(z.p0(ia));
  r.p1b = r.pushout.induced.vmap.at(z.p1(ib));
  return r;
}

PastingExample build_pasting_example() {
  PastingExample ex;
  std::vector<Rat> xs{q(0), q(1, 5), q(2, 5), q(1, 2), q(3, 5), q(4, 5), q(1)};
  std::vector<Rat> ys = uniform_lines(5);
  std::vector<Rat> ysTop = shifted(ys, q(1));
  auto seam = [&](const Rat& y) {
    return std::vector<std::pair<std::string, std::string>>{
        {"a", P2(q(0), y)}, {"b", P2(q(1, 2), y)}, {"c", P2(q(1), y)}};
  };
  auto grid = [&](const Rat& y0, std::vector<std::pair<Point, Point>> holes, const std::vector<Rat>& yl) {
    return build_grid_complex(box_region(Point{q(0), y0}, Point{q(1), y0 + q(1)}, std::move(holes)), {xs, yl},
                              false);
  };
  DiComplex C = grid(q(0), {{Point{q(3, 5), q(2, 5)}, Point{q(4, 5), q(3, 5)}}}, ys);
  DiComplex B = grid(q(1), {{Point{q(1, 5), q(7, 5)}, Point{q(2, 5), q(8, 5)}}}, ysTop);
  DiComplex Bp = grid(q(1), {{Point{q(0), q(1)}, Point{q(1, 2), q(2)}}}, ysTop);
  DiComplex Cp = grid(q(0), {{Point{q(1, 2), q(0)}, Point{q(1), q(1)}}}, ys);
  ex.B = with_marks(B, seam(q(1)));
  ex.C = with_marks(C, seam(q(1)));
  ex.Bp = with_marks(Bp, seam(q(1)));
  ex.Cp = with_marks(Cp, seam(q(1)));

  GlueSpec spec;
  spec.names = {"B", "C"};
  spec.parts = {B, C};
  spec.qualify = false;
  identify_by_coordinates(spec, 0, 1);
  DiComplex D = pushout_identify(spec).space;
  ex.D = with_marks(D, seam(q(1)));

  std::map<std::string, std::string> fv;
  for (const auto& v : B.vertices) {
    const Point& p = *v.coords;
    Point img = p;
    if (p[0] < q(1, 2)) img = p[1] < q(2) ? Point{p[0], q(1)} : Point{q(1, 2), q(2)};
    fv[v.id] = point_str(img);
  }
  ex.fB = route_vertex_map(B, Bp, fv, 0);
  PushoutResult e = pushout_along_map(D, B, identity_inclusion(B), Bp, ex.fB, "B'");
  ex.E = with_marks(e.space, seam(q(1)));

  std::map<std::string, std::string> gv;
  for (const auto& v : C.vertices) {
    const Point& p = *v.coords;
    Point img = p;
    if (p[0] > q(1, 2)) img = p[1] > q(0) ? Point{p[0], q(1)} : Point{q(1, 2), q(0)};
    gv[v.id] = point_str(img);
  }
  ex.gC = route_vertex_map(C, Cp, gv, 1);
  PushoutResult f = pushout_along_map(e.space, C, identity_inclusion(C), Cp, ex.gC, "C'");
  ex.F = with_marks(f.space, seam(q(1)));

  auto pt = [](long x, long y) { return Point{q(x, 2), q(y, 2)}; };
  DiComplex G = segments_complex({{pt(0, 0), pt(2, 0)},
                                  {pt(2, 0), pt(2, 2)},
                                  {pt(0, 0), pt(0, 2)},
                                  {pt(0, 2), pt(2, 2)},
                                  {pt(0, 0), pt(1, 1)},
                                  {pt(1, 1), pt(2, 2)}});
  ex.G = with_marks(G, {{"a", P2(q(0), q(0))}, {"b", P2(q(1, 2), q(1, 2))}, {"c", P2(q(1), q(1))}});

  DiComplex solid = build_grid_complex(box_region(Point{q(0), q(0)}, Point{q(1), q(1)}, {}),
                                       {uniform_lines(2), uniform_lines(2)}, true);
  ex.Gfilled = with_marks(solid, {{"a", P2(q(0), q(0))}, {"b", P2(q(1, 2), q(1, 2))}, {"c", P2(q(1), q(1))}});

  DiComplex BpLow = grid(q(0), {{Point{q(0), q(0)}, Point{q(1, 2), q(1)}}}, ys);
  DiComplex CpTop = grid(q(1), {{Point{q(1, 2), q(1)}, Point{q(1), q(2)}}}, ysTop);
  GlueSpec spec2;
  spec2.names = {"B'", "C'"};
  spec2.parts = {BpLow, CpTop};
  spec2.qualify = false;
  identify_by_coordinates(spec2, 0, 1);
  ex.Fp = with_marks(pushout_identify(spec2).space, seam(q(1)));
  DiComplex Gp = segments_complex({{pt(0, 0), pt(0, 1)},
                                   {pt(0, 1), pt(1, 1)},
                                   {pt(1, 1), pt(2, 1)},
                                   {pt(2, 1), pt(2, 2)},
                                   {pt(0, 0), pt(1, 1)},
                                   {pt(1, 1), pt(2, 2)}});
  ex.Gp = with_marks(Gp, seam(q(1, 2)));
  return ex;
}

ContextedComplex dII_incomparable() {
  DiComplex c = build_grid_complex(box_region(Point{q(0), q(0)}, Point{q(1), q(1)}, {}),
                                   {uniform_lines(4), uniform_lines(4)}, false);
  return with_marks(c, {{"x", P2(q(0), q(1, 4))}, {"y", P2(q(3, 4), q(0))}});
}

ContextedComplex dI_marked(const std::string& xAt, const std::string& yAt) {
  DiComplex c = build_grid_complex(box_region(Point{q(0)}, Point{q(1)}, {}), {uniform_lines(4)}, false);
  return with_marks(c, {{"x", xAt}, {"y", yAt}});
}

ContextedComplex dX_endpoints() {
  return with_marks(standard_space("dX"), {{"0_1", "0_1"}, {"0_2", "0_2"}, {"1_1", "1_1"}, {"1_2", "1_2"}});
}

ContextedComplex dI_four(const std::vector<long>& quarters) {
  if (quarters.size() != 4) throw MarkingError("four marks expected");
  DiComplex c = build_grid_complex(box_region(Point{q(0)}, Point{q(1)}, {}), {uniform_lines(4)}, false);
  std::vector<std::string> names{"0_1", "0_2", "1_1", "1_2"};
  std::vector<std::pair<std::string, std::string>> m;
  for (std::size_t i = 0; i < 4; ++i) m.push_back({names[i], point_str(Point{q(quarters[i], 4)})});
  return with_marks(c, m);
}

ContextedComplex dII_corners_grid(long k) {
  DiComplex c = build_grid_complex(box_region(Point{q(0), q(0)}, Point{q(1), q(1)}, {}),
                                   {uniform_lines(k), uniform_lines(k)}, false);
  return with_marks(c, {{"a", P2(q(0), q(0))}, {"b", P2(q(1), q(1))}});
}

ContextedComplex dI_corners_grid(long k) {
  DiComplex c = build_grid_complex(box_region(Point{q(0)}, Point{q(1)}, {}), {uniform_lines(k)}, false);
  return with_marks(c, {{"a", point_str(Point{q(0)})}, {"b", point_str(Point{q(1)})}});
}

}  // namespace ditopo
