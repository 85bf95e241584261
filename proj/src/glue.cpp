#include "ditopo/glue.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ditopo/errors.hpp"

namespace ditopo {

namespace {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    p[b] = a;  // the smallest index represents the class
  }
};

// Drops all coordinates when two distinct vertices share coordinates or
// some vertex has none.
bool drop_inconsistent_geometry(DiComplex& c) {
  std::set<Point> seen;
  bool ok = true;
  for (const auto& v : c.vertices) {
    if (!v.coords || !seen.insert(*v.coords).second) {
      ok = false;
      break;
    }
  }
  if (ok && !c.vertices.empty()) {
    std::size_t d = c.vertices[0].coords->size();
    for (const auto& v : c.vertices)
      if (v.coords->size() != d) ok = false;
    if (ok) c.dimension = d;
  }
  if (!ok) {
    bool had = std::any_of(c.vertices.begin(), c.vertices.end(), [](const Vertex& v) { return v.coords.has_value(); });
    for (auto& v : c.vertices) v.coords.reset();
    c.dimension = 0;
    return had;
  }
  return false;
}

}  // namespace

void identify_by_coordinates(GlueSpec& spec, std::size_t p, std::size_t q) {
  for (const auto& u : spec.parts.at(p).vertices)
    for (const auto& v : spec.parts.at(q).vertices)
      if (u.coords && v.coords && *u.coords == *v.coords) spec.vertices.push_back({{p, u.id}, {q, v.id}});
  identify_induced_edges(spec, p, q);
}

void identify_induced_edges(GlueSpec& spec, std::size_t p, std::size_t q) {
  std::map<std::string, std::set<std::string>> match;
  for (const auto& [x, y] : spec.vertices) {
    if (x.part == p && y.part == q) match[x.id].insert(y.id);
    if (x.part == q && y.part == p) match[y.id].insert(x.id);
  }
  for (const auto& e : spec.parts.at(p).edges)
    for (const auto& f : spec.parts.at(q).edges)
      if (e.kind == f.kind && match[e.src].count(f.src) && match[e.dst].count(f.dst))
        spec.edges.push_back({{p, e.id}, {q, f.id}});
}

GlueResult pushout_identify(const GlueSpec& spec) {
  if (spec.names.size() != spec.parts.size()) throw ParseError("glue spec needs one name per part");
  auto qual = [&](std::size_t part, const std::string& id) {
    return spec.qualify ? spec.names[part] + "." + id : id;
  };
  std::vector<std::size_t> vOff, eOff;
  std::size_t nv = 0, ne = 0;
  for (const auto& c : spec.parts) {
    vOff.push_back(nv);
    eOff.push_back(ne);
    nv += c.vertices.size();
    ne += c.edges.size();
  }
  auto vix = [&](const GlueRef& r) {
    if (r.part >= spec.parts.size()) throw UnknownVertexError("glue reference to a missing part");
    return vOff[r.part] + spec.parts[r.part].vertex(r.id);
  };
  auto eix = [&](const GlueRef& r) {
    if (r.part >= spec.parts.size()) throw UnknownVertexError("glue reference to a missing part");
    return eOff[r.part] + spec.parts[r.part].edge(r.id);
  };
  UnionFind vu(nv), eu(ne);
  for (const auto& [a, b] : spec.vertices) vu.unite(vix(a), vix(b));
  for (const auto& [a, b] : spec.edges) eu.unite(eix(a), eix(b));

  GlueResult res;
  DiComplex& out = res.space;
  std::vector<std::string> vName(nv), eName(ne);
  std::vector<std::optional<Point>> vPt(nv);
  std::vector<bool> vConsistent(nv, true);
  for (std::size_t p = 0; p < spec.parts.size(); ++p)
    for (std::size_t i = 0; i < spec.parts[p].vertices.size(); ++i) {
      std::size_t g = vOff[p] + i, r = vu.find(g);
      const auto& v = spec.parts[p].vertices[i];
      if (r == g) {
        vName[g] = qual(p, v.id);
        vPt[g] = v.coords;
      } else if (vPt[r] != v.coords) {
        vConsistent[r] = false;
      }
    }
  bool geometryConflict = false;
  for (std::size_t g = 0; g < nv; ++g)
    if (vu.find(g) == g) {
      out.vertices.push_back({vName[g], vConsistent[g] ? vPt[g] : std::nullopt});
      if (!vConsistent[g]) geometryConflict = true;
    }
  res.vertexMap.resize(spec.parts.size());
  res.edgeMap.resize(spec.parts.size());
  for (std::size_t p = 0; p < spec.parts.size(); ++p)
    for (std::size_t i = 0; i < spec.parts[p].vertices.size(); ++i)
      res.vertexMap[p][spec.parts[p].vertices[i].id] = vName[vu.find(vOff[p] + i)];
  for (std::size_t p = 0; p < spec.parts.size(); ++p)
    for (std::size_t i = 0; i < spec.parts[p].edges.size(); ++i) {
      std::size_t g = eOff[p] + i, r = eu.find(g);
      const auto& e = spec.parts[p].edges[i];
      if (r == g) {
        eName[g] = qual(p, e.id);
        out.edges.push_back({eName[g], res.vertexMap[p].at(e.src), res.vertexMap[p].at(e.dst), e.kind});
      } else {
        const Edge& rep = out.edges[std::distance(
            out.edges.begin(), std::find_if(out.edges.begin(), out.edges.end(),
                                            [&](const Edge& x) { return x.id == eName[r]; }))];
        if (rep.src != res.vertexMap[p].at(e.src) || rep.dst != res.vertexMap[p].at(e.dst))
          throw ParseError("identified edges '" + e.id + "' and '" + rep.id + "' have different endpoints");
      }
    }
  for (std::size_t p = 0; p < spec.parts.size(); ++p)
    for (std::size_t i = 0; i < spec.parts[p].edges.size(); ++i)
      res.edgeMap[p][spec.parts[p].edges[i].id] = eName[eu.find(eOff[p] + i)];
  for (std::size_t p = 0; p < spec.parts.size(); ++p)
    for (const auto& c : spec.parts[p].cells) {
      Cell2 n{qual(p, c.id), {}, {}};
      for (const auto& e : c.pathA) n.pathA.push_back(res.edgeMap[p].at(e));
      for (const auto& e : c.pathB) n.pathB.push_back(res.edgeMap[p].at(e));
      out.cells.push_back(std::move(n));
    }
  res.geometryDropped = drop_inconsistent_geometry(out) || geometryConflict;
  if (geometryConflict)
    for (auto& v : out.vertices) v.coords.reset();
  res.report = refresh_flags(out);
  return res;
}

PushoutResult pushout_along_map(const DiComplex& D, const DiComplex& B, const CombMap& inclusion,
                                const DiComplex& Bp, const CombMap& f, const std::string& primeName) {
  check_comb_map(f, B, Bp);
  // The inclusion must send vertices and edges injectively onto D.
  std::map<std::string, std::string> inV;  // D vertex -> B vertex
  std::set<std::string> inE;                // D edges in the image
  std::map<std::string, std::string> inEB;  // D edge -> B edge
  for (const auto& v : B.vertices) {
    auto it = inclusion.vmap.find(v.id);
    if (it == inclusion.vmap.end() || !D.has_vertex(it->second))
      throw InclusionError("vertex '" + v.id + "' has no image in the larger complex");
    if (!inV.emplace(it->second, v.id).second) throw InclusionError("two vertices map to '" + it->second + "'");
  }
  for (const auto& e : B.edges) {
    auto it = inclusion.routing.find(e.id);
    if (it == inclusion.routing.end() || it->second.size() != 1 || !D.has_edge(it->second[0]))
      throw InclusionError("edge '" + e.id + "' must map to a single edge");
    const auto& de = D.edges[D.edge(it->second[0])];
    if (de.src != inclusion.vmap.at(e.src) || de.dst != inclusion.vmap.at(e.dst))
      throw InclusionError("edge '" + e.id + "' maps to an edge with other endpoints");
    if (!inEB.emplace(de.id, e.id).second) throw InclusionError("two edges map to '" + de.id + "'");
    inE.insert(de.id);
  }

  PushoutResult res;
  DiComplex& E = res.space;
  std::set<std::string> used;
  for (const auto& v : D.vertices)
    if (!inV.count(v.id)) used.insert(v.id);
  auto fresh = [&](const std::string& id) {
    std::string n = used.count(id) ? primeName + "." + id : id;
    used.insert(n);
    return n;
  };
  for (const auto& v : Bp.vertices) res.targetMap[v.id] = fresh(v.id);
  std::map<std::string, std::string> eTarget;
  std::set<std::string> usedE;
  for (const auto& e : D.edges)
    if (!inE.count(e.id)) usedE.insert(e.id);
  for (const auto& e : Bp.edges) {
    std::string n = usedE.count(e.id) ? primeName + "." + e.id : e.id;
    usedE.insert(n);
    eTarget[e.id] = n;
  }
  for (const auto& v : D.vertices) {
    if (inV.count(v.id)) {
      res.induced.vmap[v.id] = res.targetMap.at(f.vmap.at(inV.at(v.id)));
    } else {
      E.vertices.push_back(v);
      res.induced.vmap[v.id] = v.id;
    }
  }
  for (const auto& v : Bp.vertices) E.vertices.push_back({res.targetMap.at(v.id), v.coords});
  auto routeOf = [&](const std::string& dEdge) -> std::vector<std::string> {
    if (!inE.count(dEdge)) return {dEdge};
    std::vector<std::string> r;
    for (const auto& x : f.routing.count(inEB.at(dEdge)) ? f.routing.at(inEB.at(dEdge)) : std::vector<std::string>{})
      r.push_back(eTarget.at(x));
    return r;
  };
  for (const auto& e : D.edges) {
    if (inE.count(e.id)) continue;
    E.edges.push_back({e.id, res.induced.vmap.at(e.src), res.induced.vmap.at(e.dst), e.kind});
  }
  for (const auto& e : Bp.edges)
    E.edges.push_back({eTarget.at(e.id), res.targetMap.at(e.src), res.targetMap.at(e.dst), e.kind});
  for (const auto& e : D.edges) res.induced.routing[e.id] = routeOf(e.id);
  // D cells that are images of B cells are replaced by the pushed B' cells.
  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> imageCells;
  auto image = [&](const std::vector<std::string>& path) {
    std::vector<std::string> r;
    for (const auto& e : path) r.push_back(inclusion.routing.at(e)[0]);
    return r;
  };
  for (const auto& c : B.cells) {
    imageCells.insert({image(c.pathA), image(c.pathB)});
    imageCells.insert({image(c.pathB), image(c.pathA)});
  }
  std::set<std::string> usedCells;
  for (const auto& c : D.cells) {
    if (imageCells.count({c.pathA, c.pathB})) continue;
    usedCells.insert(c.id);
  }
  for (const auto& c : D.cells) {
    if (!usedCells.count(c.id)) continue;
    Cell2 n{c.id, {}, {}};
    for (const auto& e : c.pathA)
      for (const auto& x : routeOf(e)) n.pathA.push_back(x);
    for (const auto& e : c.pathB)
      for (const auto& x : routeOf(e)) n.pathB.push_back(x);
    if (n.pathA.empty() && n.pathB.empty()) continue;
    if (n.pathA == n.pathB) continue;
    E.cells.push_back(std::move(n));
  }
  for (const auto& c : Bp.cells) {
    Cell2 n{usedCells.count(c.id) ? primeName + "." + c.id : c.id, {}, {}};
    for (const auto& e : c.pathA) n.pathA.push_back(eTarget.at(e));
    for (const auto& e : c.pathB) n.pathB.push_back(eTarget.at(e));
    E.cells.push_back(std::move(n));
  }
  res.geometryDropped = drop_inconsistent_geometry(E);
  res.report = refresh_flags(E);
  return res;
}

std::vector<HomDiffRow> hom_diff(const DiComplex& before, const DiComplex& after,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::map<std::string, std::string>& vmap) {
  auto tr = [&](const std::string& v) {
    auto it = vmap.find(v);
    return it == vmap.end() ? v : it->second;
  };
  auto count = [](const DiComplex& c, const std::string& x, const std::string& y, bool& bounded) {
    std::optional<std::size_t> bound;
    if (!c.loopFree) bound = c.edges.size();
    bounded = bound.has_value();
    return hom_set(c, x, y, bound);
  };
  std::vector<HomDiffRow> rows;
  for (const auto& [x, y] : pairs) {
    HomDiffRow r;
    r.from = x;
    r.to = y;
    r.fromAfter = tr(x);
    r.toAfter = tr(y);
    bool b0 = false;
    r.before = count(before, x, y, b0).class_count();
    HomSet h = count(after, r.fromAfter, r.toAfter, r.boundedAfter);
    r.after = h.class_count();
    if (r.before == 0 && r.after > 0) r.witness = path_ids(after, h.classes.front().representative);
    rows.push_back(std::move(r));
  }
  return rows;
}

CombMap route_vertex_map(const DiComplex& B, const DiComplex& C, const std::map<std::string, std::string>& vmap,
                         std::size_t axis) {
  CombMap f;
  f.vmap = vmap;
  auto preferred = [&](int ce) {
    const auto& a = C.vertices[C.srcIdx[ce]].coords;
    const auto& b = C.vertices[C.dstIdx[ce]].coords;
    if (!a || !b || axis >= a->size()) return false;
    return (*b)[axis] > (*a)[axis];
  };
  for (const auto& e : B.edges) {
    const std::string& s = vmap.at(e.src);
    const std::string& d = vmap.at(e.dst);
    if (s == d) {
      f.routing[e.id] = {};
      continue;
    }
    if (e.kind != EdgeKind::Directed) throw UnsupportedError("routing of undirected edges with distinct images");
    int goal = C.vertex(d);
    auto reach = reachable_from(C, C.vertex(s));
    if (!reach[goal]) throw NotAFunctorError("no directed path for the image of edge '" + e.id + "'");
    std::vector<std::string> route;
    std::set<int> dead;
    std::function<bool(int)> dfs = [&](int u) {
      if (u == goal) return true;
      if (dead.count(u)) return false;
      std::vector<int> outs = C.out[u];
      std::stable_sort(outs.begin(), outs.end(), [&](int a, int b) { return preferred(a) && !preferred(b); });
      for (int ce : outs) {
        route.push_back(C.edges[ce].id);
        if (dfs(C.dstIdx[ce])) return true;
        route.pop_back();
      }
      dead.insert(u);
      return false;
    };
    dfs(C.vertex(s));
    f.routing[e.id] = route;
  }
  return f;
}

}  // namespace ditopo
