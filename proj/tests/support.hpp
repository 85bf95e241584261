#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ditopo/complex.hpp"
#include "ditopo/errors.hpp"
#include "ditopo/fundcat.hpp"
#include "ditopo/io.hpp"

namespace testsupport {

using namespace ditopo;

inline Rat q(long n, long d = 1) { return Rat(n, d); }

inline Point P(long x, long y, long d) { return Point{q(x, d), q(y, d)}; }
inline std::string V(long x, long y, long d) { return point_str(P(x, y, d)); }

// Brute-force reference for hom-sets. Paths are edge-id sequences found by
// exhaustive depth-first search; two paths are identified when one arises
// from the other by replacing a contiguous occurrence of one side of a
// declared 2-cell with its other side. Classes are the connected
// components of that relation, found with a union-find over the path list.
struct OracleHom {
  std::vector<std::vector<std::string>> paths;
  std::vector<int> classOf;
  std::size_t classes = 0;
};

inline OracleHom oracle_hom(const DiComplex& c, const std::string& x, const std::string& y) {
  std::map<std::string, std::vector<const Edge*>> out;
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Directed) out[e.src].push_back(&e);
  OracleHom h;
  std::vector<std::string> cur;
  std::function<void(const std::string&)> dfs = [&](const std::string& v) {
    if (v == y) h.paths.push_back(cur);
    for (const Edge* e : out[v]) {
      cur.push_back(e->id);
      dfs(e->dst);
      cur.pop_back();
    }
  };
  dfs(x);
  std::map<std::vector<std::string>, int> index;
  for (std::size_t i = 0; i < h.paths.size(); ++i) index[h.paths[i]] = static_cast<int>(i);
  std::vector<int> parent(h.paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto replace_all = [&](std::size_t i, const std::vector<std::string>& from, const std::vector<std::string>& to) {
    const auto& p = h.paths[i];
    if (from.size() > p.size()) return;
    for (std::size_t s = 0; s + from.size() <= p.size(); ++s) {
      if (!std::equal(from.begin(), from.end(), p.begin() + static_cast<long>(s))) continue;
      std::vector<std::string> r(p.begin(), p.begin() + static_cast<long>(s));
      r.insert(r.end(), to.begin(), to.end());
      r.insert(r.end(), p.begin() + static_cast<long>(s + from.size()), p.end());
      auto it = index.find(r);
      if (it != index.end()) parent[find(static_cast<int>(i))] = find(it->second);
    }
  };
  for (std::size_t i = 0; i < h.paths.size(); ++i)
    for (const auto& cell : c.cells) {
      replace_all(i, cell.pathA, cell.pathB);
      replace_all(i, cell.pathB, cell.pathA);
    }
  std::map<int, int> ids;
  for (std::size_t i = 0; i < h.paths.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!ids.count(r)) ids[r] = static_cast<int>(ids.size());
    h.classOf.push_back(ids[r]);
  }
  h.classes = ids.size();
  return h;
}

// Number of directed paths x -> y by dynamic programming over the DAG.
inline double path_count(const DiComplex& c, const std::string& x, const std::string& y) {
  std::map<std::string, double> memo;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& e : c.edges)
    if (e.kind == EdgeKind::Directed) out[e.src].push_back(e.dst);
  std::function<double(const std::string&)> go = [&](const std::string& v) -> double {
    if (v == y) return 1;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    double s = 0;
    for (const auto& w : out[v]) s += go(w);
    return memo[v] = s;
  };
  return go(x);
}

inline RectRegion unit_square() {
  RectRegion r;
  r.outer = Box::closed(Point{q(0), q(0)}, Point{q(1), q(1)});
  return r;
}

// Unit square on a k x k grid with a random set of open grid cells removed.
struct RandomGrid {
  long k = 2;
  RectRegion region;
  std::vector<std::pair<long, long>> holes;  // lower-left cell indices
  DiComplex cx;
};

inline RandomGrid random_grid(std::mt19937_64& rng, long kMin, long kMax, double holeRate, bool triangulate = false) {
  RandomGrid g;
  g.k = std::uniform_int_distribution<long>(kMin, kMax)(rng);
  g.region = unit_square();
  std::bernoulli_distribution hole(holeRate);
  for (long i = 0; i < g.k; ++i)
    for (long j = 0; j < g.k; ++j)
      if (hole(rng)) {
        g.holes.push_back({i, j});
        g.region.forbidden.push_back(Box::open(P(i, j, g.k), P(i + 1, j + 1, g.k)));
      }
  g.cx = build_grid_complex(g.region, {uniform_lines(g.k), uniform_lines(g.k)}, triangulate);
  return g;
}

inline Json region_doc(const RectRegion& r, const Json& gridLines, const std::map<std::string, Point>& marks,
                       bool triangulate = false) {
  Json j;
  j["type"] = "space";
  j["outer"] = Json{{"lo", point_json(r.outer.lo)}, {"hi", point_json(r.outer.hi)}};
  j["forbidden"] = Json::array();
  for (const auto& b : r.forbidden) j["forbidden"].push_back(Json{{"lo", point_json(b.lo)}, {"hi", point_json(b.hi)}});
  j["gridLines"] = gridLines;
  j["triangulate"] = triangulate;
  j["marks"] = Json::object();
  for (const auto& [a, p] : marks) j["marks"][a] = point_json(p);
  return j;
}

inline Resolver no_files() {
  return [](const std::string& ref) -> Json { throw ParseError("no document '" + ref + "'"); };
}

}  // namespace testsupport
