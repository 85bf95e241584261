#include "ditopo/fundcat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "ditopo/errors.hpp"

namespace ditopo {

std::size_t VecHash::operator()(const std::vector<int>& v) const {
  std::size_t h = v.size();
  for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::string> path_ids(const DiComplex& c, const Dipath& p) {
  std::vector<std::string> ids;
  for (int e : p.edges) ids.push_back(c.edges[e].id);
  return ids;
}

Dipath path_from_ids(const DiComplex& c, const std::vector<std::string>& ids, const std::string& source) {
  Dipath p;
  p.source = c.vertex(source);
  int cur = p.source;
  for (const auto& id : ids) {
    int e = c.edge(id);
    if (c.edges[e].kind != EdgeKind::Directed || c.srcIdx[e] != cur)
      throw EndpointError("edge sequence is not a directed path at '" + id + "'");
    p.edges.push_back(e);
    cur = c.dstIdx[e];
  }
  p.target = cur;
  return p;
}

bool path_less(const DiComplex& c, const Dipath& a, const Dipath& b) {
  return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                      [&](int x, int y) { return c.edgeRank[x] < c.edgeRank[y]; });
}

std::vector<Dipath> enumerate_dipaths(const DiComplex& c, const std::string& x, const std::string& y,
                                      std::optional<std::size_t> maxLen) {
  int s = c.vertex(x), t = c.vertex(y);
  if (!c.loopFree && !maxLen)
    throw NeedsBoundError("complex has directed cycles; a maximum path length is required");
  // Vertices that can reach t, to prune dead branches.
  std::vector<bool> canReach(c.vertices.size(), false);
  {
    std::vector<int> stack{t};
    canReach[t] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : c.in[u]) {
        int w = c.srcIdx[e];
        if (!canReach[w]) {
          canReach[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Dipath> out;
  if (!canReach[s]) return out;
  std::vector<int> cur;
  std::function<void(int)> dfs = [&](int u) {
    if (u == t) out.push_back(Dipath{s, t, cur});
    if (maxLen && cur.size() >= *maxLen) return;
    for (int e : c.out[u]) {
      int w = c.dstIdx[e];
      if (!canReach[w]) continue;
      cur.push_back(e);
      dfs(w);
      cur.pop_back();
    }
  };
  dfs(s);
  return out;
}

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> resolved_cells(const DiComplex& c) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> r;
  for (const auto& cell : c.cells) {
    std::vector<int> a, b;
    for (const auto& id : cell.pathA) a.push_back(c.edge(id));
    for (const auto& id : cell.pathB) b.push_back(c.edge(id));
    r.emplace_back(std::move(a), std::move(b));
  }
  return r;
}

void flips_with(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& cells,
                const std::vector<int>& p, std::vector<std::vector<int>>& out) {
  for (const auto& [a, b] : cells) {
    for (int side = 0; side < 2; ++side) {
      const auto& from = side == 0 ? a : b;
      const auto& to = side == 0 ? b : a;
      if (from.empty() || from.size() > p.size()) continue;
      for (std::size_t i = 0; i + from.size() <= p.size(); ++i) {
        if (!std::equal(from.begin(), from.end(), p.begin() + static_cast<long>(i))) continue;
        std::vector<int> q(p.begin(), p.begin() + static_cast<long>(i));
        q.insert(q.end(), to.begin(), to.end());
        q.insert(q.end(), p.begin() + static_cast<long>(i + from.size()), p.end());
        out.push_back(std::move(q));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<int>> flip_neighbours(const DiComplex& c, const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  flips_with(resolved_cells(c), p, out);
  return out;
}

bool dihomotopic(const DiComplex& c, const Dipath& p, const Dipath& q, std::optional<std::size_t> maxLen) {
  if (p.source != q.source || p.target != q.target)
    throw EndpointError("dipaths do not share source and target");
  if (p.edges == q.edges) return true;
  if (!c.loopFree && !maxLen)
    throw NeedsBoundError("complex has directed cycles; a maximum path length is required");
  auto cells = resolved_cells(c);
  std::unordered_set<std::vector<int>, VecHash> seen{p.edges};
  std::deque<std::vector<int>> queue{p.edges};
  std::vector<std::vector<int>> nb;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    nb.clear();
    flips_with(cells, cur, nb);
    for (auto& n : nb) {
      if (maxLen && n.size() > *maxLen) continue;
      if (n == q.edges) return true;
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return false;
}

int HomSet::class_of(const Dipath& p) const {
  auto it = index.find(p.edges);
  return it == index.end() ? -1 : classOf[it->second];
}

HomSet hom_set(const DiComplex& c, const std::string& x, const std::string& y, std::optional<std::size_t> maxLen) {
  HomSet h;
  h.source = x;
  h.target = y;
  h.bounded = !c.loopFree;
  h.maxLen = maxLen;
  h.paths = enumerate_dipaths(c, x, y, maxLen);
  h.pathCount = h.paths.size();
  for (std::size_t i = 0; i < h.paths.size(); ++i) h.index.emplace(h.paths[i].edges, static_cast<int>(i));
  std::vector<int> parent(h.paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto cells = resolved_cells(c);
  std::vector<std::vector<int>> nb;
  for (std::size_t i = 0; i < h.paths.size(); ++i) {
    nb.clear();
    flips_with(cells, h.paths[i].edges, nb);
    for (const auto& n : nb) {
      auto it = h.index.find(n);
      if (it == h.index.end()) continue;
      int ra = find(static_cast<int>(i)), rb = find(it->second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  // Paths are in lexicographic order, so first occurrence is the least member.
  std::unordered_map<int, int> rootToClass;
  h.classOf.assign(h.paths.size(), -1);
  for (std::size_t i = 0; i < h.paths.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto it = rootToClass.find(r);
    if (it == rootToClass.end()) {
      int id = static_cast<int>(h.classes.size());
      rootToClass[r] = id;
      h.classes.push_back(HomClass{id, h.paths[i], 0});
      it = rootToClass.find(r);
    }
    h.classOf[i] = it->second;
    h.classes[it->second].members++;
  }
  return h;
}

CombMap identity_comb_map(const DiComplex& c) {
  CombMap f;
  for (const auto& v : c.vertices) f.vmap[v.id] = v.id;
  for (const auto& e : c.edges) f.routing[e.id] = {e.id};
  return f;
}

void check_comb_map(const CombMap& f, const DiComplex& B, const DiComplex& C) {
  for (const auto& v : B.vertices) {
    auto it = f.vmap.find(v.id);
    if (it == f.vmap.end()) throw NotAFunctorError("vertex '" + v.id + "' has no image");
    if (!C.has_vertex(it->second)) throw NotAFunctorError("image of '" + v.id + "' is not a vertex of the target");
  }
  for (const auto& e : B.edges) {
    const std::string& fs = f.vmap.at(e.src);
    const std::string& fd = f.vmap.at(e.dst);
    auto it = f.routing.find(e.id);
    if (it == f.routing.end()) {
      if (fs == fd) continue;
      throw NotAFunctorError("edge '" + e.id + "' has no routing");
    }
    if (e.kind == EdgeKind::Directed) {
      try {
        Dipath p = path_from_ids(C, it->second, fs);
        if (C.vertices[p.target].id != fd) throw EndpointError("routing ends at the wrong vertex");
      } catch (const Error& err) {
        throw NotAFunctorError("routing of edge '" + e.id + "' is invalid: " + err.what());
      }
    } else {
      // Undirected edges route to unoriented walks.
      std::string cur = fs;
      for (const auto& id : it->second) {
        if (!C.has_edge(id)) throw NotAFunctorError("routing of edge '" + e.id + "' uses unknown edge");
        const auto& ce = C.edges[C.edge(id)];
        if (ce.src == cur) cur = ce.dst;
        else if (ce.dst == cur) cur = ce.src;
        else throw NotAFunctorError("routing of edge '" + e.id + "' is not a walk");
      }
      if (cur != fd) throw NotAFunctorError("routing of edge '" + e.id + "' ends at the wrong vertex");
    }
  }
}

Dipath image_path(const CombMap& f, const DiComplex& B, const DiComplex& C, const Dipath& p) {
  Dipath q;
  q.source = C.vertex(f.vmap.at(B.vertices[p.source].id));
  int cur = q.source;
  for (int e : p.edges) {
    auto it = f.routing.find(B.edges[e].id);
    if (it == f.routing.end()) continue;
    for (const auto& id : it->second) {
      int ce = C.edge(id);
      if (C.srcIdx[ce] != cur) throw NotAFunctorError("image path is not connected");
      q.edges.push_back(ce);
      cur = C.dstIdx[ce];
    }
  }
  q.target = cur;
  return q;
}

void check_respects_cells(const CombMap& f, const DiComplex& B, const DiComplex& C) {
  for (const auto& cell : B.cells) {
    const std::string& src = B.edges[B.edge(cell.pathA.front())].src;
    Dipath a = path_from_ids(B, cell.pathA, src);
    Dipath b = path_from_ids(B, cell.pathB, src);
    Dipath fa = image_path(f, B, C, a), fb = image_path(f, B, C, b);
    if (fa.target != fb.target || !dihomotopic(C, fa, fb))
      throw NotAFunctorError("images of the sides of 2-cell '" + cell.id + "' are not dihomotopic");
  }
}

bool InducedMap::injective() const {
  std::set<int> s(classMap.begin(), classMap.end());
  return s.size() == classMap.size();
}

bool InducedMap::surjective() const {
  std::set<int> s(classMap.begin(), classMap.end());
  return s.size() == target.classes.size();
}

InducedMap induced_map(const CombMap& f, const DiComplex& B, const DiComplex& C, const HomSet& h) {
  check_comb_map(f, B, C);
  check_respects_cells(f, B, C);
  InducedMap m;
  m.target = hom_set(C, f.vmap.at(h.source), f.vmap.at(h.target), h.maxLen);
  for (const auto& cls : h.classes) {
    Dipath img = image_path(f, B, C, cls.representative);
    int id = m.target.class_of(img);
    if (id < 0) throw NotAFunctorError("image of a representative lies outside the enumerated hom-set");
    m.classMap.push_back(id);
  }
  return m;
}

HomSummary summarize(const DiComplex& c, const HomSet& h) {
  HomSummary s;
  s.classCount = h.classes.size();
  s.pathCount = h.pathCount;
  for (const auto& cls : h.classes) s.representatives.push_back(path_ids(c, cls.representative));
  return s;
}

ObstructionVerdict equivalence_obstruction(const ContextedComplex& B, const ContextedComplex& C,
                                           const std::optional<CombMap>& f) {
  auto ctxB = B.context_vertices(), ctxC = C.context_vertices();
  std::sort(ctxB.begin(), ctxB.end());
  std::sort(ctxC.begin(), ctxC.end());
  if (ctxB != ctxC) throw ContextError("the two spaces are marked by different contexts");
  if (f) {
    for (const auto& a : ctxB) {
      auto it = f->vmap.find(B.at(a));
      if (it == f->vmap.end() || it->second != C.at(a))
        throw ContextError("map does not commute with the marking of '" + a + "'");
    }
    check_comb_map(*f, B.space, C.space);
    check_respects_cells(*f, B.space, C.space);
  }
  ObstructionVerdict v;
  for (const auto& a : ctxB)
    for (const auto& b : ctxB) {
      HomSet hb = hom_set(B.space, B.at(a), B.at(b));
      HomSet hc = hom_set(C.space, C.at(a), C.at(b));
      std::string reason;
      if (f) {
        InducedMap m = induced_map(*f, B.space, C.space, hb);
        if (!m.injective()) reason = "induced map on hom-sets is not injective";
        else if (!m.surjective()) reason = "induced map on hom-sets is not surjective";
      } else if (hb.classes.size() != hc.classes.size()) {
        reason = hb.classes.empty() || hc.classes.empty()
                     ? "hom-set is empty on one side only; no context-preserving map can be bijective"
                     : "hom-set cardinalities differ; no context-preserving map can be bijective";
      }
      if (!reason.empty()) {
        v.obstruction = true;
        v.a = a;
        v.b = b;
        v.homB = summarize(B.space, hb);
        v.homC = summarize(C.space, hc);
        v.reason = reason;
        return v;
      }
    }
  return v;
}

}  // namespace ditopo
