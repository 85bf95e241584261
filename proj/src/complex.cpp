#include "ditopo/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ditopo/errors.hpp"

namespace ditopo {

const char* to_string(EdgeKind k) { return k == EdgeKind::Directed ? "directed" : "undirected"; }

void DiComplex::reindex() {
  vIndex.clear();
  eIndex.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i) vIndex[vertices[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < edges.size(); ++i) eIndex[edges[i].id] = static_cast<int>(i);
  out.assign(vertices.size(), {});
  in.assign(vertices.size(), {});
  srcIdx.assign(edges.size(), -1);
  dstIdx.assign(edges.size(), -1);
  std::vector<int> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return edges[a].id < edges[b].id; });
  edgeRank.assign(edges.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) edgeRank[order[r]] = static_cast<int>(r);
  for (int e : order) {
    auto s = vIndex.find(edges[e].src);
    auto d = vIndex.find(edges[e].dst);
    if (s != vIndex.end()) srcIdx[e] = s->second;
    if (d != vIndex.end()) dstIdx[e] = d->second;
    if (edges[e].kind != EdgeKind::Directed || s == vIndex.end() || d == vIndex.end()) continue;
    out[s->second].push_back(e);
    in[d->second].push_back(e);
  }
}

int DiComplex::vertex(const std::string& id) const {
  auto it = vIndex.find(id);
  if (it == vIndex.end()) throw UnknownVertexError("unknown vertex '" + id + "'");
  return it->second;
}

int DiComplex::edge(const std::string& id) const {
  auto it = eIndex.find(id);
  if (it == eIndex.end()) throw UnknownVertexError("unknown edge '" + id + "'");
  return it->second;
}

bool DiComplex::embedded() const {
  return !vertices.empty() &&
         std::all_of(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.coords.has_value(); });
}

std::optional<std::string> DiComplex::vertex_at(const Point& p) const {
  for (const auto& v : vertices)
    if (v.coords && *v.coords == p) return v.id;
  return std::nullopt;
}

std::vector<bool> reachable_from(const DiComplex& c, int v) {
  std::vector<bool> seen(c.vertices.size(), false);
  std::vector<int> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int e : c.out[u]) {
      int w = c.dstIdx[e];
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

ValidationReport validate_complex(const DiComplex& c) {
  ValidationReport r;
  std::set<std::string> ids;
  for (const auto& v : c.vertices)
    if (!ids.insert(v.id).second) {
      r.faceClosed = false;
      r.problems.push_back("duplicate vertex id " + v.id);
    }
  std::set<std::string> eids;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto& ed = c.edges[e];
    if (!eids.insert(ed.id).second) {
      r.faceClosed = false;
      r.problems.push_back("duplicate edge id " + ed.id);
    }
    if (!c.has_vertex(ed.src) || !c.has_vertex(ed.dst)) {
      r.faceClosed = false;
      r.problems.push_back("edge " + ed.id + " has a missing endpoint");
      continue;
    }
    if (ed.kind != EdgeKind::Directed) continue;
    const auto& a = c.vertices[c.vertex(ed.src)].coords;
    const auto& b = c.vertices[c.vertex(ed.dst)].coords;
    if (a && b) {
      if (a->size() != b->size() || compare_points(*a, *b) != OrderRelation::LessEq) {
        r.embeddingMonotone = false;
        r.problems.push_back("edge " + ed.id + " is not increasing in the embedding");
      }
    }
  }
  for (const auto& cell : c.cells) {
    std::optional<std::pair<int, int>> ends[2];
    const std::vector<std::string>* paths[2] = {&cell.pathA, &cell.pathB};
    bool ok = true;
    for (int s = 0; s < 2 && ok; ++s) {
      const auto& p = *paths[s];
      if (p.empty()) {
        ok = false;
        break;
      }
      int prev = -1, first = -1;
      for (const auto& eid : p) {
        if (!c.has_edge(eid)) {
          ok = false;
          break;
        }
        int e = c.edge(eid);
        if (c.edges[e].kind != EdgeKind::Directed || c.srcIdx[e] < 0 || c.dstIdx[e] < 0 ||
            (prev >= 0 && c.srcIdx[e] != prev)) {
          ok = false;
          break;
        }
        if (first < 0) first = c.srcIdx[e];
        prev = c.dstIdx[e];
      }
      if (ok) ends[s] = std::make_pair(first, prev);
    }
    if (!ok || ends[0] != ends[1]) {
      r.faceClosed = false;
      r.problems.push_back("2-cell " + cell.id + " is not a pair of parallel directed paths");
    }
  }
  // Cycle detection by iterative DFS; each back edge yields one cycle.
  std::size_t n = c.vertices.size();
  std::vector<int> color(n, 0), parentEdge(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k < c.out[u].size()) {
        int e = c.out[u][k++];
        int w = c.dstIdx[e];
        if (color[w] == 0) {
          color[w] = 1;
          parentEdge[w] = e;
          stack.emplace_back(w, 0);
        } else if (color[w] == 1) {
          std::vector<std::string> cyc{c.edges[e].id};
          int x = u;
          while (x != w) {
            int pe = parentEdge[x];
            cyc.push_back(c.edges[pe].id);
            x = c.srcIdx[pe];
          }
          std::reverse(cyc.begin(), cyc.end());
          r.cycles.push_back(cyc);
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  r.acyclic = r.cycles.empty();
  return r;
}

ValidationReport refresh_flags(DiComplex& c) {
  c.reindex();
  auto r = validate_complex(c);
  c.loopFree = r.acyclic;
  c.localOnly = !r.acyclic;
  return r;
}

std::vector<Rat> uniform_lines(long k) {
  if (k < 1) throw GridError("grid resolution must be positive");
  std::vector<Rat> l;
  for (long i = 0; i <= k; ++i) l.push_back(Rat(i, k));
  return l;
}

DiComplex build_grid_complex(const RectRegion& region, const std::vector<std::vector<Rat>>& gridLines,
                             bool triangulate) {
  region.validate();
  std::size_t n = region.dim();
  if (n == 0 || n > 2) throw UnsupportedError("grid complexes support dimension 1 or 2");
  if (gridLines.size() != n) throw GridError("grid lines needed for every axis");
  std::vector<std::vector<Rat>> lines(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : gridLines[i])
      if (v >= region.outer.lo[i] && v <= region.outer.hi[i]) lines[i].push_back(v);
    std::sort(lines[i].begin(), lines[i].end());
    lines[i].erase(std::unique(lines[i].begin(), lines[i].end()), lines[i].end());
    std::set<Rat> need{region.outer.lo[i], region.outer.hi[i]};
    for (const auto& b : region.forbidden) {
      need.insert(b.lo[i]);
      need.insert(b.hi[i]);
    }
    for (const auto& v : need)
      if (!std::binary_search(lines[i].begin(), lines[i].end(), v))
        throw GridError("missing grid line " + v.str() + " on axis " + std::to_string(i));
  }
  auto kept = [&](const Point& mid) {
    return region_classify(region, mid) != RegionClass::Removed;
  };
  DiComplex c;
  c.dimension = n;
  std::size_t nx = lines[0].size();
  std::size_t ny = n == 2 ? lines[1].size() : 1;
  auto pt = [&](std::size_t i, std::size_t j) {
    Point p{lines[0][i]};
    if (n == 2) p.push_back(lines[1][j]);
    return p;
  };
  auto vid = [&](std::size_t i, std::size_t j) { return point_str(pt(i, j)); };
  auto mid = [](const Point& a, const Point& b) {
    Point m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = (a[k] + b[k]) / Rat(2);
    return m;
  };
  auto eid = [&](const std::string& a, const std::string& b) { return a + "->" + b; };
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (kept(pt(i, j))) c.vertices.push_back({vid(i, j), pt(i, j)});
  std::set<std::string> edgeSet;
  auto add_edge = [&](std::size_t i, std::size_t j, std::size_t i2, std::size_t j2) {
    if (!kept(mid(pt(i, j), pt(i2, j2)))) return false;
    std::string id = eid(vid(i, j), vid(i2, j2));
    c.edges.push_back({id, vid(i, j), vid(i2, j2), EdgeKind::Directed});
    edgeSet.insert(id);
    return true;
  };
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      if (i + 1 < nx) add_edge(i, j, i + 1, j);
      if (n == 2 && j + 1 < ny) add_edge(i, j, i, j + 1);
    }
  if (n == 2) {
    for (std::size_t i = 0; i + 1 < nx; ++i)
      for (std::size_t j = 0; j + 1 < ny; ++j) {
        Point centre = mid(pt(i, j), pt(i + 1, j + 1));
        if (!kept(centre)) continue;
        std::string bl = vid(i, j), br = vid(i + 1, j), tl = vid(i, j + 1), tr = vid(i + 1, j + 1);
        std::vector<std::string> right_up{eid(bl, br), eid(br, tr)};
        std::vector<std::string> up_right{eid(bl, tl), eid(tl, tr)};
        std::string sq = "sq" + point_str(centre);
        c.cells.push_back({sq, right_up, up_right});
        if (triangulate) {
          std::string d = eid(bl, tr);
          c.edges.push_back({d, bl, tr, EdgeKind::Directed});
          c.cells.push_back({"tri" + point_str(centre) + "a", {d}, right_up});
          c.cells.push_back({"tri" + point_str(centre) + "b", {d}, up_right});
        }
      }
  }
  refresh_flags(c);
  return c;
}

namespace {

RectRegion unit_region(std::size_t n) {
  RectRegion r;
  r.outer = Box::closed(Point(n, Rat(0)), Point(n, Rat(1)));
  return r;
}

DiComplex make_dX() {
  DiComplex c;
  c.dimension = 2;
  Rat h(1, 2);
  c.vertices = {{"0_1", Point{0, h}}, {"0_2", Point{h, 0}}, {"mid", Point{h, h}},
                {"1_1", Point{1, h}}, {"1_2", Point{h, 1}}};
  c.edges = {{"e1a", "0_1", "mid", EdgeKind::Directed},
             {"e1b", "mid", "1_1", EdgeKind::Directed},
             {"e2a", "0_2", "mid", EdgeKind::Directed},
             {"e2b", "mid", "1_2", EdgeKind::Directed}};
  refresh_flags(c);
  return c;
}

DiComplex make_dO() {
  DiComplex c;
  c.vertices = {{"a", std::nullopt}, {"b", std::nullopt}};
  c.edges = {{"e1", "a", "b", EdgeKind::Directed}, {"e2", "a", "b", EdgeKind::Directed}};
  refresh_flags(c);
  return c;
}

DiComplex make_dS1() {
  DiComplex c;
  c.vertices = {{"v0", std::nullopt}, {"v1", std::nullopt}, {"v2", std::nullopt}};
  c.edges = {{"e0", "v0", "v1", EdgeKind::Directed},
             {"e1", "v1", "v2", EdgeKind::Directed},
             {"e2", "v2", "v0", EdgeKind::Directed}};
  refresh_flags(c);
  return c;
}

}  // namespace

DiComplex standard_space(const std::string& name) {
  if (name == "dI") return build_grid_complex(unit_region(1), {uniform_lines(1)}, false);
  if (name == "dII") return build_grid_complex(unit_region(2), {uniform_lines(2), uniform_lines(2)}, false);
  if (name == "dX") return make_dX();
  if (name == "dO") return make_dO();
  if (name == "dS1") return make_dS1();
  std::string prefix = "dIIgrid";
  if (name.rfind(prefix, 0) == 0) {
    std::string rest = name.substr(prefix.size());
    if (!rest.empty() && (rest.front() == ':' || rest.front() == '(')) rest = rest.substr(1);
    if (!rest.empty() && rest.back() == ')') rest.pop_back();
    long k = 0;
    try {
      k = std::stol(rest);
    } catch (...) {
      throw UnknownNameError("bad grid size in '" + name + "'");
    }
    if (k < 1) throw UnknownNameError("bad grid size in '" + name + "'");
    return build_grid_complex(unit_region(2), {uniform_lines(k), uniform_lines(k)}, false);
  }
  throw UnknownNameError("unknown standard space '" + name + "'");
}

const std::string& ContextedComplex::at(const std::string& a) const {
  auto it = marking.find(a);
  if (it == marking.end()) throw MarkingError("context vertex '" + a + "' is not marked");
  return it->second;
}

std::vector<std::string> ContextedComplex::context_vertices() const {
  std::vector<std::string> v;
  for (const auto& x : context.vertices) v.push_back(x.id);
  return v;
}

DiComplex discrete_context(const std::vector<std::string>& names) {
  DiComplex c;
  for (const auto& n : names) c.vertices.push_back({n, std::nullopt});
  refresh_flags(c);
  return c;
}

ContextedComplex mark_context(const DiComplex& space, const DiComplex& context,
                              const std::map<std::string, std::string>& marking) {
  for (const auto& [a, v] : marking) {
    if (!context.has_vertex(a)) throw MarkingError("marking names unknown context vertex '" + a + "'");
    if (!space.has_vertex(v)) throw MarkingError("marking targets unknown vertex '" + v + "'");
  }
  for (const auto& v : context.vertices)
    if (!marking.count(v.id)) throw MarkingError("context vertex '" + v.id + "' is not marked");
  for (const auto& e : context.edges) {
    if (e.kind != EdgeKind::Directed) continue;
    auto reach = reachable_from(space, space.vertex(marking.at(e.src)));
    if (!reach[space.vertex(marking.at(e.dst))])
      throw MarkingError("marking does not preserve context edge '" + e.id + "'");
  }
  return ContextedComplex{space, context, marking};
}

bool isomorphic(const DiComplex& a, const DiComplex& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.cells.size() != b.cells.size())
    return false;
  std::size_t n = a.vertices.size();
  if (n > 9) throw UnsupportedError("isomorphism test limited to 9 vertices");
  auto edge_multiset = [](const DiComplex& c, const std::vector<int>& perm) {
    std::vector<std::tuple<int, int, int>> es;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
      es.emplace_back(perm[c.srcIdx[e]], perm[c.dstIdx[e]], static_cast<int>(c.edges[e].kind));
    std::sort(es.begin(), es.end());
    return es;
  };
  std::vector<int> idB(n);
  for (std::size_t i = 0; i < n; ++i) idB[i] = static_cast<int>(i);
  auto target = edge_multiset(b, idB);
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  do {
    if (edge_multiset(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ditopo
