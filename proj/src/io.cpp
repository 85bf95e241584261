#include "ditopo/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ditopo/errors.hpp"

namespace ditopo {

namespace {

const Json& req(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::string opt_str(const Json& j, const char* key, const std::string& dflt) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  return str_of(j.at(key), key);
}

void expect_type(const Json& j, const char* type) {
  if (j.is_object() && j.contains("type") && j.at("type") != type)
    throw ParseError(std::string("expected a '") + type + "' document, found '" + j.at("type").dump() + "'");
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

// Follows string references until an inline document is reached.
Json deref(const Json& j, const Resolver& r) {
  if (j.is_string()) return r(j.get<std::string>());
  return j;
}

std::vector<bool> bools_from(const Json& j, std::size_t n, bool dflt) {
  if (j.is_null()) return std::vector<bool>(n, dflt);
  std::vector<bool> v;
  for (const auto& b : j) v.push_back(b.get<bool>());
  if (v.size() != n) throw ParseError("openness flags must match the box dimension");
  return v;
}

Json box_json(const Box& b) {
  Json j;
  j["lo"] = point_json(b.lo);
  j["hi"] = point_json(b.hi);
  j["loOpen"] = b.loOpen;
  j["hiOpen"] = b.hiOpen;
  return j;
}

Box box_from(const Json& j, bool openDefault) {
  Box b;
  b.lo = point_from(req(j, "lo"));
  b.hi = point_from(req(j, "hi"));
  if (b.lo.size() != b.hi.size()) throw ParseError("box corners differ in dimension");
  b.loOpen = bools_from(j.value("loOpen", Json()), b.lo.size(), openDefault);
  b.hiOpen = bools_from(j.value("hiOpen", Json()), b.lo.size(), openDefault);
  b.validate();
  return b;
}

Json region_json(const RectRegion& r) {
  Json j;
  j["outer"] = box_json(r.outer);
  j["forbidden"] = Json::array();
  for (const auto& b : r.forbidden) j["forbidden"].push_back(box_json(b));
  j["interiorOfUnion"] = r.interiorOfUnion;
  return j;
}

RectRegion region_from(const Json& j) {
  RectRegion r;
  r.outer = box_from(req(j, "outer"), false);
  if (j.contains("forbidden"))
    for (const auto& b : j.at("forbidden")) r.forbidden.push_back(box_from(b, true));
  r.interiorOfUnion = j.value("interiorOfUnion", true);
  r.validate();
  return r;
}

Json cell_json(const Cell& c) {
  Json j;
  j["dim"] = c.dim;
  j["verts"] = Json::array();
  for (const auto& p : c.verts) j["verts"].push_back(point_json(p));
  return j;
}

Cell cell_from(const Json& j) {
  std::vector<Point> pts;
  for (const auto& p : req(j, "verts")) pts.push_back(point_from(p));
  int dim = req(j, "dim").get<int>();
  if (dim == 0 && pts.size() == 1) return point_cell(pts[0]);
  if (dim == 1 && pts.size() == 2) return segment_cell(pts[0], pts[1]);
  if (dim == 2 && pts.size() >= 3) {
    Cell c = hull_cell(pts);
    if (c.dim != 2) throw ParseError("degenerate polygon cell");
    return c;
  }
  throw ParseError("cell vertex count does not match its dimension");
}

Json edge_json(const Edge& e) {
  return Json{{"id", e.id}, {"src", e.src}, {"dst", e.dst}, {"kind", to_string(e.kind)}};
}

Edge edge_from(const Json& j) {
  Edge e;
  e.id = str_of(req(j, "id"), "edge id");
  e.src = str_of(req(j, "src"), "edge src");
  e.dst = str_of(req(j, "dst"), "edge dst");
  std::string k = opt_str(j, "kind", "directed");
  if (k == "directed")
    e.kind = EdgeKind::Directed;
  else if (k == "undirected")
    e.kind = EdgeKind::Undirected;
  else
    throw ParseError("unknown edge kind '" + k + "'");
  return e;
}

std::vector<std::vector<Rat>> grid_lines_from(const Json& j, std::size_t n) {
  std::vector<std::vector<Rat>> lines;
  if (j.is_number_integer()) {
    for (std::size_t i = 0; i < n; ++i) lines.push_back(uniform_lines(j.get<long>()));
    return lines;
  }
  for (const auto& axis : j) {
    if (axis.is_number_integer()) {
      lines.push_back(uniform_lines(axis.get<long>()));
      continue;
    }
    std::vector<Rat> v;
    for (const auto& x : axis) v.push_back(rat_from(x));
    lines.push_back(v);
  }
  if (lines.size() != n) throw GridError("grid lines needed for every axis");
  return lines;
}

// Geometry of an embedded 1-complex: its edges as segments plus its
// isolated vertices.
PLSpaceP skeleton_space(const std::string& name, const DiComplex& c) {
  if (c.dimension == 0 || c.vertices.empty()) return nullptr;
  for (const auto& v : c.vertices)
    if (!v.coords || v.coords->size() != c.dimension) return nullptr;
  std::vector<Cell> cells;
  std::set<std::string> touched;
  for (const auto& e : c.edges) {
    const Point& a = *c.vertices[c.vertex(e.src)].coords;
    const Point& b = *c.vertices[c.vertex(e.dst)].coords;
    if (a == b) continue;
    cells.push_back(segment_cell(a, b));
    touched.insert(e.src);
    touched.insert(e.dst);
  }
  for (const auto& v : c.vertices)
    if (!touched.count(v.id)) cells.push_back(point_cell(*v.coords));
  return make_cells_space(name, c.dimension, cells);
}

ContextedComplex context_from(const DiComplex& space, const Json& j) {
  if (j.is_null()) return mark_context(space, discrete_context({}), {});
  DiComplex ctx;
  for (const auto& v : req(j, "vertices")) ctx.vertices.push_back({str_of(v, "context vertex"), std::nullopt});
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) ctx.edges.push_back(edge_from(e));
  refresh_flags(ctx);
  std::map<std::string, std::string> marking;
  for (const auto& [k, v] : req(j, "marking").items()) marking[k] = str_of(v, "marking target");
  return mark_context(space, ctx, marking);
}

Json context_json(const ContextedComplex& c) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : c.context.vertices) j["vertices"].push_back(v.id);
  if (!c.context.edges.empty()) {
    j["edges"] = Json::array();
    for (const auto& e : c.context.edges) j["edges"].push_back(edge_json(e));
  }
  j["marking"] = Json::object();
  for (const auto& [k, v] : c.marking) j["marking"][k] = v;
  return j;
}

Json space_ref(const PLSpaceP& s, const SpaceRefs& refs) {
  if (!s) throw ParseError("map without a space");
  auto it = refs.find(s.get());
  if (it != refs.end()) return it->second;
  return plspace_json(*s);
}

Json stages_json(const std::vector<Stage>& stages) {
  Json j = Json::array();
  for (const auto& st : stages) {
    Json s = Json::array();
    for (const auto& e : st) s.push_back(expr_json(*e));
    j.push_back(s);
  }
  return j;
}

Stage stage_from(const Json& j) {
  Stage s;
  for (const auto& e : j) s.push_back(expr_from(e));
  return s;
}

GlueRef glue_ref_from(const Json& j, const std::vector<std::string>& names, const char* key) {
  GlueRef g;
  const Json& p = req(j, "part");
  if (p.is_number_integer()) {
    g.part = p.get<std::size_t>();
  } else {
    std::string n = str_of(p, "part");
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError("unknown part '" + n + "'");
    g.part = static_cast<std::size_t>(it - names.begin());
  }
  if (g.part >= names.size()) throw ParseError("part index out of range");
  g.id = str_of(req(j, key), key);
  return g;
}

std::vector<std::pair<GlueRef, GlueRef>> ref_pairs(const Json& j, const char* field,
                                                   const std::vector<std::string>& names, const char* key) {
  std::vector<std::pair<GlueRef, GlueRef>> out;
  if (!j.contains(field)) return out;
  for (const auto& pr : j.at(field)) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError(std::string(field) + " entries must be pairs");
    out.push_back({glue_ref_from(pr[0], names, key), glue_ref_from(pr[1], names, key)});
  }
  return out;
}

GlueJob glue_job_from(const Json& j, const Resolver& r) {
  GlueJob job;
  const Json& parts = req(j, "parts");
  for (std::size_t i = 0; i < parts.size(); ++i) job.spec.parts.push_back(space_from(parts[i], r)->cx.space);
  if (j.contains("names")) {
    for (const auto& n : j.at("names")) job.spec.names.push_back(str_of(n, "part name"));
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) job.spec.names.push_back("P" + std::to_string(i));
  }
  if (job.spec.names.size() != job.spec.parts.size()) throw ParseError("one name per part expected");
  job.partNames = job.spec.names;
  job.spec.qualify = j.value("qualify", true);
  job.spec.vertices = ref_pairs(j, "identify", job.spec.names, "vertex");
  job.spec.edges = ref_pairs(j, "identifyEdges", job.spec.names, "edge");
  if (j.contains("byCoordinates"))
    for (const auto& pr : j.at("byCoordinates"))
      identify_by_coordinates(job.spec, pr.at(0).get<std::size_t>(), pr.at(1).get<std::size_t>());
  job.watch = ref_pairs(j, "watch", job.spec.names, "vertex");
  if (j.contains("expectIsomorphic")) job.expectIsomorphic = space_from(j.at("expectIsomorphic"), r)->cx.space;
  return job;
}

}  // namespace

Resolver file_resolver(const std::filesystem::path& baseDir) {
  return [baseDir](const std::string& ref) { return read_json_file(baseDir / ref); };
}

Resolver table_resolver(const std::map<std::string, std::string>& files) {
  return [files](const std::string& ref) {
    std::string key = std::filesystem::path(ref).filename().string();
    auto it = files.find(key);
    if (it == files.end()) throw ParseError("unknown document '" + ref + "'");
    return parse_json_text(it->second, key);
  };
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open '" + p.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), p.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json rat_json(const Rat& r) { return r.str(); }

Rat rat_from(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

Json point_json(const Point& p) {
  Json j = Json::array();
  for (const auto& x : p) j.push_back(rat_json(x));
  return j;
}

Point point_from(const Json& j) {
  if (!j.is_array()) throw ParseError("points must be arrays of rationals");
  Point p;
  for (const auto& x : j) p.push_back(rat_from(x));
  return p;
}

Json complex_json(const DiComplex& c) {
  Json j;
  j["dimension"] = c.dimension;
  j["vertices"] = Json::array();
  for (const auto& v : c.vertices) {
    Json vj{{"id", v.id}};
    if (v.coords) vj["coords"] = point_json(*v.coords);
    j["vertices"].push_back(vj);
  }
  j["edges"] = Json::array();
  for (const auto& e : c.edges) j["edges"].push_back(edge_json(e));
  j["cells"] = Json::array();
  for (const auto& k : c.cells) j["cells"].push_back(Json{{"id", k.id}, {"pathA", k.pathA}, {"pathB", k.pathB}});
  return j;
}

DiComplex complex_from(const Json& j) {
  return guarded("complex", [&] {
    DiComplex c;
    c.dimension = j.value("dimension", std::size_t{0});
    std::set<std::string> seen;
    for (const auto& v : req(j, "vertices")) {
      Vertex x;
      x.id = str_of(req(v, "id"), "vertex id");
      if (!seen.insert(x.id).second) throw ParseError("duplicate vertex id '" + x.id + "'");
      if (v.contains("coords")) {
        x.coords = point_from(v.at("coords"));
        if (c.dimension == 0) c.dimension = x.coords->size();
        if (x.coords->size() != c.dimension) throw ParseError("vertex '" + x.id + "' has the wrong dimension");
      }
      c.vertices.push_back(std::move(x));
    }
    std::set<std::string> vertexIds = seen;
    seen.clear();
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        c.edges.push_back(edge_from(e));
        for (const auto* end : {&c.edges.back().src, &c.edges.back().dst})
          if (!vertexIds.count(*end))
            throw UnknownVertexError("edge '" + c.edges.back().id + "' uses unknown vertex '" + *end + "'");
        if (!seen.insert(c.edges.back().id).second) throw ParseError("duplicate edge id '" + c.edges.back().id + "'");
      }
    if (j.contains("cells"))
      for (const auto& k : j.at("cells")) {
        Cell2 cell;
        cell.id = str_of(req(k, "id"), "cell id");
        for (const auto& e : req(k, "pathA")) cell.pathA.push_back(str_of(e, "edge id"));
        for (const auto& e : req(k, "pathB")) cell.pathB.push_back(str_of(e, "edge id"));
        c.cells.push_back(std::move(cell));
      }
    refresh_flags(c);
    return c;
  });
}

Json plspace_json(const PLSpace& s) {
  Json j;
  j["type"] = "plspace";
  j["name"] = s.name;
  j["dimension"] = s.dim;
  j["cells"] = Json::array();
  for (const auto& c : s.cells) j["cells"].push_back(cell_json(c));
  if (s.region) j["region"] = region_json(*s.region);
  if (!s.removedCells.empty()) {
    j["removedCells"] = Json::array();
    for (const auto& b : s.removedCells) j["removedCells"].push_back(box_json(b));
  }
  return j;
}

PLSpaceP plspace_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("space", [&]() -> PLSpaceP {
    if (j.contains("preset") || j.value("type", "") == "space" || j.contains("vertices") || j.contains("outer")) {
      auto g = space_from(j, r);
      if (!g->pl) throw ParseError("space '" + g->name + "' has no geometry");
      return g->pl;
    }
    expect_type(j, "plspace");
    auto s = std::make_shared<PLSpace>();
    s->name = opt_str(j, "name", "space");
    s->dim = req(j, "dimension").get<std::size_t>();
    for (const auto& c : req(j, "cells")) {
      s->cells.push_back(cell_from(c));
      if (s->cells.back().ambient() != s->dim) throw ParseError("cell dimension does not match space");
    }
    if (j.contains("region")) s->region = region_from(j.at("region"));
    if (j.contains("removedCells"))
      for (const auto& b : j.at("removedCells")) s->removedCells.push_back(box_from(b, true));
    return s;
  });
}

Json space_json(const GeoSpace& s) {
  Json j = complex_json(s.cx.space);
  j["type"] = "space";
  j["name"] = s.name;
  j["context"] = context_json(s.cx);
  if (s.pl) j["pl"] = plspace_json(*s.pl);
  return j;
}

GeoSpaceP space_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("space", [&]() -> GeoSpaceP {
    if (j.contains("preset")) return preset_space(str_of(j.at("preset"), "preset"));
    if (j.contains("standard")) {
      auto g = std::make_shared<GeoSpace>();
      g->name = str_of(j.at("standard"), "standard");
      DiComplex cx = standard_space(g->name);
      g->cx = context_from(cx, j.value("context", Json()));
      g->pl = skeleton_space(g->name, cx);
      return g;
    }
    expect_type(j, "space");
    auto g = std::make_shared<GeoSpace>();
    g->name = opt_str(j, "name", "space");
    if (j.contains("outer")) {
      RectRegion reg = region_from(j);
      auto lines = grid_lines_from(req(j, "gridLines"), reg.dim());
      DiComplex cx = build_grid_complex(reg, lines, j.value("triangulate", false));
      std::vector<std::string> names;
      std::map<std::string, std::string> marking;
      if (j.contains("marks"))
        for (const auto& [a, p] : j.at("marks").items()) {
          names.push_back(a);
          Point pt = point_from(p);
          auto v = cx.vertex_at(pt);
          if (!v) throw MarkingError("mark '" + a + "' is not a grid vertex");
          marking[a] = *v;
        }
      g->cx = mark_context(cx, discrete_context(names), marking);
      g->pl = make_region_space(g->name, reg, lines);
      return g;
    }
    DiComplex cx = complex_from(j);
    g->cx = context_from(cx, j.value("context", Json()));
    g->pl = j.contains("pl") ? plspace_from(j.at("pl"), r) : skeleton_space(g->name, cx);
    return g;
  });
}

Json expr_json(const Expr& e) {
  Json j;
  switch (e.kind) {
    case Expr::Kind::Var:
      j["op"] = "var";
      j["index"] = e.index;
      break;
    case Expr::Kind::Const:
      j["op"] = "const";
      j["value"] = rat_json(e.value);
      break;
    case Expr::Kind::Affine:
      j["op"] = "affine";
      if (!e.coeffs.empty()) {
        j["coeffs"] = Json::array();
        for (const auto& c : e.coeffs) j["coeffs"].push_back(rat_json(c));
      }
      if (!e.terms.empty()) {
        j["terms"] = Json::array();
        for (const auto& [w, x] : e.terms) j["terms"].push_back(Json{{"weight", rat_json(w)}, {"expr", expr_json(*x)}});
      }
      j["const"] = rat_json(e.value);
      break;
    case Expr::Kind::Max:
    case Expr::Kind::Min:
      j["op"] = e.kind == Expr::Kind::Max ? "max" : "min";
      j["args"] = Json::array();
      for (const auto& a : e.args) j["args"].push_back(expr_json(*a));
      break;
    case Expr::Kind::Piecewise:
      j["op"] = "piecewise";
      j["cases"] = Json::array();
      for (const auto& c : e.cases) {
        Json cj;
        cj["when"] = Json::array();
        for (const auto& g : c.when) {
          Json gj;
          gj["coeffs"] = Json::array();
          for (const auto& a : g.coeffs) gj["coeffs"].push_back(rat_json(a));
          gj["const"] = rat_json(g.c);
          gj["rel"] = to_string(g.rel);
          cj["when"].push_back(gj);
        }
        cj["then"] = expr_json(*c.then);
        j["cases"].push_back(cj);
      }
      if (e.otherwise) j["otherwise"] = expr_json(*e.otherwise);
      break;
    case Expr::Kind::Interp:
      j["op"] = "interp";
      j["from"] = expr_json(*e.from);
      j["to"] = expr_json(*e.to);
      j["t"] = e.index;
      break;
  }
  return j;
}

ExprP expr_from(const Json& j) {
  return guarded("expression", [&]() -> ExprP {
    std::string op = str_of(req(j, "op"), "op");
    if (op == "var") return ex::var(req(j, "index").get<std::size_t>());
    if (op == "const") return ex::cst(rat_from(req(j, "value")));
    if (op == "affine") {
      std::vector<Rat> coeffs;
      if (j.contains("coeffs"))
        for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from(c));
      Rat c = j.contains("const") ? rat_from(j.at("const")) : Rat(0);
      if (!j.contains("terms")) return ex::lin(coeffs, c);
      std::vector<std::pair<Rat, ExprP>> terms;
      for (const auto& t : j.at("terms")) terms.push_back({rat_from(req(t, "weight")), expr_from(req(t, "expr"))});
      if (!coeffs.empty()) terms.push_back({Rat(1), ex::lin(coeffs, Rat(0))});
      return ex::sum(terms, c);
    }
    if (op == "max" || op == "min") {
      std::vector<ExprP> args;
      for (const auto& a : req(j, "args")) args.push_back(expr_from(a));
      if (args.empty()) throw ParseError(op + " needs at least one argument");
      return op == "max" ? ex::max(args) : ex::min(args);
    }
    if (op == "piecewise") {
      std::vector<Case> cases;
      for (const auto& cj : req(j, "cases")) {
        Case c;
        for (const auto& gj : req(cj, "when")) {
          std::vector<Rat> coeffs;
          for (const auto& a : req(gj, "coeffs")) coeffs.push_back(rat_from(a));
          Rat k = gj.contains("const") ? rat_from(gj.at("const")) : Rat(0);
          c.when.push_back(ex::guard(coeffs, k, parse_rel(str_of(req(gj, "rel"), "rel"))));
        }
        c.then = expr_from(req(cj, "then"));
        cases.push_back(std::move(c));
      }
      return ex::piecewise(cases, j.contains("otherwise") ? expr_from(j.at("otherwise")) : nullptr);
    }
    if (op == "interp")
      return ex::interp(expr_from(req(j, "from")), expr_from(req(j, "to")), req(j, "t").get<std::size_t>());
    throw ParseError("unknown expression op '" + op + "'");
  });
}

Json map_json(const PLMap& m, const SpaceRefs& refs) {
  Json j;
  j["type"] = "map";
  j["name"] = m.name;
  j["domain"] = space_ref(m.domain, refs);
  j["codomain"] = space_ref(m.codomain, refs);
  j["stages"] = stages_json(m.stages);
  return j;
}

PLMap map_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("map", [&]() -> PLMap {
    if (j.contains("preset")) return preset_map(str_of(j.at("preset"), "preset"));
    expect_type(j, "map");
    if (j.contains("sequence")) {
      const Json& seq = j.at("sequence");
      if (!seq.is_array() || seq.empty()) throw ParseError("sequence must list at least one map");
      PLMap m = map_from(seq[0], r);
      for (std::size_t i = 1; i < seq.size(); ++i) m = compose_plmaps(map_from(seq[i], r), m);
      if (j.contains("name")) m.name = str_of(j.at("name"), "name");
      if (j.contains("domain")) m.domain = plspace_from(j.at("domain"), r);
      if (j.contains("codomain")) m.codomain = plspace_from(j.at("codomain"), r);
      return m;
    }
    PLMap m;
    m.name = opt_str(j, "name", "map");
    m.domain = plspace_from(req(j, "domain"), r);
    m.codomain = plspace_from(req(j, "codomain"), r);
    if (j.contains("stages")) {
      for (const auto& s : j.at("stages")) m.stages.push_back(stage_from(s));
    } else {
      m.stages.push_back(stage_from(req(j, "outputs")));
    }
    if (!m.stages.empty())
      for (const auto& e : m.stages.front())
        if (expr_arity(*e) > m.domain->dim) throw DimensionError("map '" + m.name + "' reads past its domain");
    if (m.out_dim() != m.codomain->dim) throw DimensionError("map '" + m.name + "' output does not match codomain");
    return m;
  });
}

Json homotopy_json(const Homotopy& h, const SpaceRefs& refs) {
  Json j;
  j["type"] = "homotopy";
  j["name"] = h.name;
  j["domain"] = space_ref(h.domain, refs);
  j["codomain"] = space_ref(h.codomain, refs);
  if (h.from) j["from"] = map_json(*h.from, refs);
  if (h.to) j["to"] = map_json(*h.to, refs);
  if (!h.isInterp) {
    j["exprs"] = Json::array();
    for (const auto& e : h.exprs) j["exprs"].push_back(expr_json(*e));
  }
  return j;
}

Homotopy homotopy_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("homotopy", [&]() -> Homotopy {
    if (j.contains("preset")) return preset_homotopy(str_of(j.at("preset"), "preset"));
    expect_type(j, "homotopy");
    Homotopy h;
    if (j.contains("exprs")) {
      h.isInterp = false;
      h.exprs = stage_from(j.at("exprs"));
      h.domain = plspace_from(req(j, "domain"), r);
      h.codomain = plspace_from(req(j, "codomain"), r);
      if (j.contains("from")) h.from = std::make_shared<PLMap>(map_from(j.at("from"), r));
      if (j.contains("to")) h.to = std::make_shared<PLMap>(map_from(j.at("to"), r));
      for (const auto& e : h.exprs)
        if (expr_arity(*e) > h.domain->dim + 1) throw DimensionError("homotopy reads past (x, t)");
      if (h.exprs.size() != h.codomain->dim) throw DimensionError("homotopy output does not match codomain");
    } else {
      h = linear_interpolation(map_from(req(j, "from"), r), map_from(req(j, "to"), r));
      if (j.contains("domain")) h.domain = plspace_from(j.at("domain"), r);
      if (j.contains("codomain")) h.codomain = plspace_from(j.at("codomain"), r);
    }
    if (j.contains("name")) h.name = str_of(j.at("name"), "name");
    return h;
  });
}

Certificate certificate_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("certificate", [&]() -> Certificate {
    if (j.contains("preset")) return preset_certificate(str_of(j.at("preset"), "preset"));
    expect_type(j, "certificate");
    Certificate c;
    c.name = opt_str(j, "name", "certificate");
    c.B = space_from(req(j, "B"), r);
    c.C = space_from(req(j, "C"), r);
    c.f = map_from(req(j, "f"), r);
    c.g = map_from(req(j, "g"), r);
    auto chain = [&](const char* key) {
      std::vector<ChainStep> steps;
      if (!j.contains(key)) return steps;
      for (const auto& s : j.at(key)) {
        std::string dir = str_of(req(s, "direction"), "direction");
        if (dir != "fwd" && dir != "bwd") throw ParseError("direction must be \"fwd\" or \"bwd\"");
        steps.push_back({homotopy_from(req(s, "homotopy"), r), dir == "fwd"});
      }
      return steps;
    };
    c.zigzagBC = chain("zigzagBC");
    c.zigzagCB = chain("zigzagCB");
    return c;
  });
}

std::map<std::string, Json> export_certificate(const Certificate& c, const std::string& prefix) {
  std::map<std::string, Json> files;
  std::string bName = prefix + ".B.space.json", cName = prefix + ".C.space.json";
  SpaceRefs refs{{c.B->pl.get(), bName}, {c.C->pl.get(), cName}};
  files[bName] = space_json(*c.B);
  files[cName] = space_json(*c.C);
  files[prefix + ".f.map.json"] = map_json(c.f, refs);
  files[prefix + ".g.map.json"] = map_json(c.g, refs);
  Json cert;
  cert["type"] = "certificate";
  cert["name"] = c.name;
  cert["B"] = bName;
  cert["C"] = cName;
  cert["f"] = prefix + ".f.map.json";
  cert["g"] = prefix + ".g.map.json";
  auto chain = [&](const std::vector<ChainStep>& steps, const std::string& tag) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      std::string file = prefix + "." + tag + std::to_string(k + 1) + ".hom.json";
      files[file] = homotopy_json(steps[k].h, refs);
      arr.push_back(Json{{"homotopy", file}, {"direction", steps[k].forward ? "fwd" : "bwd"}});
    }
    return arr;
  };
  cert["zigzagBC"] = chain(c.zigzagBC, "BC");
  cert["zigzagCB"] = chain(c.zigzagCB, "CB");
  files[prefix + ".cert.json"] = cert;
  return files;
}

CombMap combmap_from(const Json& j, const DiComplex& B, const DiComplex& C) {
  return guarded("combinatorial map", [&]() -> CombMap {
    expect_type(j, "combmap");
    if (j.value("identity", false)) return identity_comb_map(B);
    if (j.contains("route")) {
      const Json& rt = j.at("route");
      std::map<std::string, std::string> vm;
      for (const auto& [k, v] : req(rt, "vmap").items()) vm[k] = str_of(v, "vertex image");
      return route_vertex_map(B, C, vm, rt.value("axis", std::size_t{0}));
    }
    CombMap f;
    for (const auto& [k, v] : req(j, "vmap").items()) f.vmap[k] = str_of(v, "vertex image");
    for (const auto& [k, v] : req(j, "routing").items()) {
      auto& route = f.routing[k];
      for (const auto& e : v) route.push_back(str_of(e, "edge id"));
    }
    check_comb_map(f, B, C);
    return f;
  });
}

Json combmap_json(const CombMap& f) {
  Json j;
  j["type"] = "combmap";
  j["vmap"] = Json::object();
  for (const auto& [k, v] : f.vmap) j["vmap"][k] = v;
  j["routing"] = Json::object();
  for (const auto& [k, v] : f.routing) j["routing"][k] = v;
  return j;
}

GlueDoc glue_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("glue spec", [&]() -> GlueDoc {
    expect_type(j, "glue");
    GlueDoc d;
    d.main = glue_job_from(j, r);
    if (j.contains("compare")) {
      Json cj = deref(j.at("compare"), r);
      d.compare = glue_job_from(cj, r);
      if (d.compare->partNames != d.main.partNames)
        throw ParseError("compared gluings must use the same part names");
    }
    return d;
  });
}

PushoutJob pushout_from(const Json& j0, const Resolver& r) {
  Json j = deref(j0, r);
  return guarded("pushout spec", [&]() -> PushoutJob {
    expect_type(j, "pushout");
    PushoutJob p;
    p.D = space_from(req(j, "space"), r)->cx.space;
    p.B = space_from(req(j, "sub"), r)->cx.space;
    p.Bp = space_from(req(j, "target"), r)->cx.space;
    p.inclusion = combmap_from(deref(req(j, "inclusion"), r), p.B, p.D);
    p.f = combmap_from(deref(req(j, "map"), r), p.B, p.Bp);
    p.primeName = opt_str(j, "primeName", "B'");
    if (j.contains("watch"))
      for (const auto& pr : j.at("watch")) {
        if (!pr.is_array() || pr.size() != 2) throw ParseError("watch entries must be pairs");
        p.watch.push_back({str_of(pr[0], "vertex"), str_of(pr[1], "vertex")});
      }
    return p;
  });
}

Json validation_json(const ValidationReport& v, bool localOnly) {
  Json j;
  j["acyclic"] = v.acyclic;
  j["embeddingMonotone"] = v.embeddingMonotone;
  j["faceClosed"] = v.faceClosed;
  j["localOnly"] = localOnly;
  j["cycles"] = v.cycles;
  j["problems"] = v.problems;
  return j;
}

Json homset_json(const DiComplex& c, const HomSet& h) {
  HomSummary s = summarize(c, h);
  Json j;
  j["source"] = h.source;
  j["target"] = h.target;
  j["classCount"] = s.classCount;
  j["pathCount"] = s.pathCount;
  j["representatives"] = s.representatives;
  if (h.bounded) {
    j["bounded"] = true;
    j["maxLen"] = h.maxLen ? *h.maxLen : 0;
    j["note"] = "bounded, not a fundamental-category computation";
  }
  return j;
}

Json verdict_json(const CheckVerdict& v) {
  Json j;
  j["verdict"] = v.pass ? "Pass" : "Fail";
  j["stage"] = v.stage;
  if (!v.premise.empty()) j["premise"] = v.premise;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (!v.path.empty()) j["path"] = v.path;
  if (!v.stages.empty()) {
    j["stages"] = Json::array();
    for (const auto& s : v.stages) j["stages"].push_back(verdict_json(s));
  }
  return j;
}

Json obstruction_json(const ObstructionVerdict& v) {
  auto summary = [](const HomSummary& s) {
    return Json{{"classCount", s.classCount}, {"pathCount", s.pathCount}, {"representatives", s.representatives}};
  };
  Json j;
  j["verdict"] = v.name();
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.obstruction) j["witness"] = Json{{"a", v.a}, {"b", v.b}, {"homB", summary(v.homB)}, {"homC", summary(v.homC)}};
  return j;
}

Json homdiff_json(const std::vector<HomDiffRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["from"] = r.from;
    x["to"] = r.to;
    x["fromAfter"] = r.fromAfter;
    x["toAfter"] = r.toAfter;
    x["before"] = r.before;
    x["after"] = r.after;
    x["emptinessChanged"] = r.emptinessChanged();
    if (r.boundedAfter) x["boundedAfter"] = true;
    if (r.witness) x["witness"] = *r.witness;
    j.push_back(x);
  }
  return j;
}

}  // namespace ditopo
