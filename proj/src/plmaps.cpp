#include "ditopo/plmaps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ditopo/errors.hpp"
#include "ditopo/lp.hpp"

namespace ditopo {

Point GeoSpace::mark(const std::string& a) const {
  const auto& v = cx.space.vertices[cx.space.vertex(cx.at(a))];
  if (!v.coords) throw MarkingError("marked vertex '" + v.id + "' has no coordinates");
  return *v.coords;
}

namespace {

Point eval_piece(const Piece& p, const Point& x, const Rat& t) {
  Point y;
  for (std::size_t i = 0; i < p.P.size(); ++i) y.push_back(p.P[i].eval(x) + t * p.Q[i].eval(x));
  return y;
}

std::string at_str(const Point& x) { return "at " + point_str(x); }

// The value of every piece must agree with pointwise evaluation on the
// whole closed cell: at its vertices, and along each boundary edge of a
// polygon (where lower-dimensional cases may apply).
std::optional<std::string> continuity_problem(const PieceFn& f, const std::vector<Piece>& pieces) {
  std::map<Cell, std::vector<Piece>> edgeCache;
  for (const auto& p : pieces) {
    for (const auto& v : p.cell.verts) {
      auto [v0, v1] = f.at01(v);
      if (v0 != eval_piece(p, v, Rat(0)) || v1 != eval_piece(p, v, Rat(1)))
        return "value " + point_str(v0) + " differs from the limit " + point_str(eval_piece(p, v, Rat(0))) +
               " from cell " + p.cell.str() + " " + at_str(v);
    }
    if (p.cell.dim != 2) continue;
    for (const auto& e : p.cell.facets()) {
      auto it = edgeCache.find(e);
      if (it == edgeCache.end()) it = edgeCache.emplace(e, f.refine({e})).first;
      for (const auto& sp : it->second)
        for (const auto& v : sp.cell.verts)
          for (const Rat& t : {Rat(0), Rat(1)})
            if (eval_piece(sp, v, t) != eval_piece(p, v, t))
              return "boundary value " + point_str(eval_piece(sp, v, t)) + " disagrees with cell " +
                     p.cell.str() + " near " + point_str(v);
    }
  }
  return std::nullopt;
}

struct PairMin {
  bool feasible = false;
  Rat value;
  Point b, b2;
};

// min of G(b2) - F(b) over b in s, b2 in t, b <= b2.
PairMin pair_min(const Cell& s, const Lin& F, const Cell& t, const Lin& G) {
  std::size_t n = s.ambient(), ks = s.verts.size(), kt = t.verts.size();
  std::size_t nv = ks + kt + n;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> rhs;
  std::vector<Rat> r1(nv), r2(nv);
  for (std::size_t j = 0; j < ks; ++j) r1[j] = 1;
  for (std::size_t j = 0; j < kt; ++j) r2[ks + j] = 1;
  A.push_back(r1);
  rhs.push_back(1);
  A.push_back(r2);
  rhs.push_back(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> r(nv);
    for (std::size_t j = 0; j < ks; ++j) r[j] = -s.verts[j][i];
    for (std::size_t j = 0; j < kt; ++j) r[ks + j] = t.verts[j][i];
    r[ks + kt + i] = -1;
    A.push_back(r);
    rhs.push_back(0);
  }
  std::vector<Rat> c(nv);
  for (std::size_t j = 0; j < ks; ++j) c[j] = -F.eval(s.verts[j]);
  for (std::size_t j = 0; j < kt; ++j) c[ks + j] = G.eval(t.verts[j]);
  auto res = lp_minimize(A, rhs, c);
  PairMin pm;
  if (res.status != LPStatus::Optimal) return pm;
  pm.feasible = true;
  pm.value = res.value;
  pm.b.assign(n, Rat(0));
  pm.b2.assign(n, Rat(0));
  for (std::size_t j = 0; j < ks; ++j)
    for (std::size_t i = 0; i < n; ++i) pm.b[i] += res.x[j] * s.verts[j][i];
  for (std::size_t j = 0; j < kt; ++j)
    for (std::size_t i = 0; i < n; ++i) pm.b2[i] += res.x[ks + j] * t.verts[j][i];
  return pm;
}

struct Problem {
  std::string premise, detail;
};

// Point at which a cell can be left in the positive direction of axis k
// without leaving it: the centroid and a point further along e_k.
std::pair<Point, Point> axis_pair(const Cell& cell, std::size_t k) {
  Point a = cell.centroid();
  Rat step(1);
  Point b = a;
  for (int i = 0; i < 64; ++i) {
    b = a;
    b[k] += step;
    if (cell.contains(b)) break;
    step /= Rat(2);
  }
  return {a, b};
}

// Every piece must be nondecreasing along each nonnegative direction of
// its own cell; together with continuity this gives monotonicity along
// every directed path in the space.
std::optional<Problem> local_monotone_problem(const std::vector<Piece>& pieces, bool timeDependent) {
  std::vector<int> times{0};
  if (timeDependent) times.push_back(1);
  for (const auto& p : pieces) {
    for (int ti : times) {
      Rat t(ti);
      std::string when = timeDependent ? " at t=" + t.str() : "";
      for (std::size_t c = 0; c < p.P.size(); ++c) {
        Lin F = p.P[c] + p.Q[c].scaled(t);
        auto drop = [&](const Point& u, const Point& v) {
          return Problem{"monotonicity", point_str(u) + " <= " + point_str(v) + " but coordinate " +
                                             std::to_string(c) + " drops from " + F.eval(u).str() + " to " +
                                             F.eval(v).str() + when + " on cell " + p.cell.str()};
        };
        if (p.cell.dim == 2) {
          for (std::size_t k = 0; k < F.a.size(); ++k)
            if (F.a[k].sign() < 0) {
              auto [u, v] = axis_pair(p.cell, k);
              return drop(u, v);
            }
        } else if (p.cell.dim == 1) {
          Point lo = p.cell.verts[0], hi = p.cell.verts[1];
          if (!leq(lo, hi)) std::swap(lo, hi);
          if (leq(lo, hi) && F.eval(hi) < F.eval(lo)) return drop(lo, hi);
        }
      }
    }
  }
  if (timeDependent)
    for (const auto& p : pieces)
      for (const auto& v : p.cell.verts)
        for (std::size_t c = 0; c < p.Q.size(); ++c)
          if (p.Q[c].eval(v).sign() < 0)
            return Problem{"monotonicity-in-t", "coordinate " + std::to_string(c) + " at " + point_str(v) +
                                                    " drops from " + p.P[c].eval(v).str() + " at t=0 to " +
                                                    (p.P[c].eval(v) + p.Q[c].eval(v)).str() + " at t=1"};
  return std::nullopt;
}

std::optional<Problem> induced_order_problem(const std::vector<Piece>& pieces, bool timeDependent) {
  std::vector<Point> lo, hi;
  for (const auto& p : pieces) {
    lo.push_back(p.cell.bbox_lo());
    hi.push_back(p.cell.bbox_hi());
  }
  std::vector<std::pair<int, int>> tpairs{{0, 0}};
  if (timeDependent) {
    tpairs.push_back({1, 1});
    tpairs.push_back({0, 1});
  }
  for (auto [t0, t1] : tpairs) {
    Rat ta(t0), tb(t1);
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        bool comparable = true;
        for (std::size_t k = 0; k < lo[i].size() && comparable; ++k)
          if (lo[i][k] > hi[j][k]) comparable = false;
        if (!comparable) continue;
        const Piece& s = pieces[i];
        const Piece& t = pieces[j];
        for (std::size_t c = 0; c < s.P.size(); ++c) {
          Lin F = s.P[c] + s.Q[c].scaled(ta);
          Lin G = t.P[c] + t.Q[c].scaled(tb);
          Rat maxF = F.eval(s.cell.verts[0]), minG = G.eval(t.cell.verts[0]);
          for (const auto& v : s.cell.verts) maxF = rmax(maxF, F.eval(v));
          for (const auto& v : t.cell.verts) minG = rmin(minG, G.eval(v));
          if (maxF <= minG) continue;
          auto pm = pair_min(s.cell, F, t.cell, G);
          if (!pm.feasible || pm.value.sign() >= 0) continue;
          std::string premise = (t0 != t1) ? "monotonicity-in-t" : "monotonicity";
          std::string where = timeDependent ? " (t=" + ta.str() + " vs t=" + tb.str() + ")" : "";
          return Problem{premise, point_str(pm.b) + " <= " + point_str(pm.b2) + " but coordinate " +
                                      std::to_string(c) + " decreases by " + (-pm.value).str() + where +
                                      "; cells " + s.cell.str() + " and " + t.cell.str()};
        }
      }
  }
  return std::nullopt;
}

std::optional<Problem> monotone_problem(const std::vector<Piece>& pieces, bool timeDependent,
                                        OrderMode mode = OrderMode::Local) {
  return mode == OrderMode::Local ? local_monotone_problem(pieces, timeDependent)
                                  : induced_order_problem(pieces, timeDependent);
}

Cell image_cell(const Piece& p, const Rat& t) {
  std::vector<Point> pts;
  for (const auto& v : p.cell.verts) pts.push_back(eval_piece(p, v, t));
  return hull_cell(pts);
}

std::optional<Problem> enclose(const PLSpace& cod, const Piece& p, const Rat& t0, const Rat& t1, int depth) {
  std::vector<Point> pts;
  for (const auto& v : p.cell.verts) {
    pts.push_back(eval_piece(p, v, t0));
    pts.push_back(eval_piece(p, v, t1));
  }
  if (cod.contains_cell(hull_cell(pts))) return std::nullopt;
  std::vector<Point> probes = p.cell.verts;
  probes.push_back(p.cell.centroid());
  Rat tm = (t0 + t1) / Rat(2);
  for (const auto& v : probes)
    for (const Rat& t : {t0, tm, t1}) {
      Point y = eval_piece(p, v, t);
      if (!cod.contains(y))
        return Problem{"containment", "image " + point_str(y) + " of " + point_str(v) + " at t=" + t.str() +
                                          " lies outside " + cod.name};
    }
  if (depth == 0)
    return Problem{"containment", "containment undecided for cell " + p.cell.str() + " on t in [" + t0.str() +
                                      "," + t1.str() + "]"};
  std::vector<Cell> parts{p.cell};
  if (p.cell.dim > 0) {
    Point c = p.cell.centroid();
    for (std::size_t k = 0; k < c.size(); ++k) {
      Lin h = Lin::coordinate(c.size(), k);
      h.c = -c[k];
      auto s = split_cell(p.cell, h);
      if (s) {
        parts = {s->first, s->second};
        break;
      }
    }
  }
  for (const auto& cell : parts)
    for (auto [a, b] : {std::make_pair(t0, tm), std::make_pair(tm, t1)}) {
      Piece sub{cell, p.P, p.Q};
      if (auto pr = enclose(cod, sub, a, b, depth - 1)) return pr;
    }
  return std::nullopt;
}

std::optional<Problem> containment_problem(const std::vector<Piece>& pieces, const PLSpace& cod, bool timeDependent) {
  for (const auto& p : pieces) {
    if (p.P.size() != cod.dim)
      return Problem{"dimension", "map output dimension does not match " + cod.name};
    if (!timeDependent) {
      Cell k = image_cell(p, Rat(0));
      if (!cod.contains_cell(k))
        return Problem{"containment", "image " + k.str() + " of cell " + p.cell.str() + " leaves " + cod.name};
    } else if (auto pr = enclose(cod, p, Rat(0), Rat(1), 6)) {
      return pr;
    }
  }
  return std::nullopt;
}

std::vector<Piece> common_refinement(const PieceFn& a, const PieceFn& b, const std::vector<Cell>& cells,
                                     std::vector<Piece>& bPieces) {
  std::vector<Piece> ap;
  for (const auto& pa : a.refine(cells))
    for (const auto& pb : b.refine({pa.cell})) {
      ap.push_back(Piece{pb.cell, pa.P, pa.Q});
      bPieces.push_back(pb);
    }
  return ap;
}

}  // namespace

std::optional<std::string> functions_differ(const PieceFn& a, const PieceFn& b, const std::vector<Cell>& cells) {
  std::vector<Piece> bp;
  auto ap = common_refinement(a, b, cells, bp);
  for (std::size_t i = 0; i < ap.size(); ++i)
    for (const auto& v : ap[i].cell.verts)
      for (const Rat& t : {Rat(0), Rat(1)}) {
        Point x = eval_piece(ap[i], v, t), y = eval_piece(bp[i], v, t);
        if (x != y) return a.name + " gives " + point_str(x) + " but " + b.name + " gives " + point_str(y) + " " + at_str(v);
      }
  return std::nullopt;
}

std::optional<std::string> not_pointwise_leq(const PieceFn& a, const PieceFn& b, const std::vector<Cell>& cells) {
  std::vector<Piece> bp;
  auto ap = common_refinement(a, b, cells, bp);
  for (std::size_t i = 0; i < ap.size(); ++i)
    for (const auto& v : ap[i].cell.verts) {
      Point x = eval_piece(ap[i], v, Rat(0)), y = eval_piece(bp[i], v, Rat(0));
      if (!leq(x, y)) return a.name + " gives " + point_str(x) + " above " + b.name + "'s " + point_str(y) + " " + at_str(v);
    }
  return std::nullopt;
}

CheckVerdict check_dimap(const PLMap& m, OrderMode mode) {
  std::string stage = m.name;
  if (!m.domain || !m.codomain) return CheckVerdict::fail(stage, "definition", "map lacks a domain or codomain");
  std::vector<Piece> pieces;
  try {
    pieces = refine_map(m, m.domain->cells);
  } catch (const DomainError& e) {
    return CheckVerdict::fail(stage, "definition", e.what());
  }
  auto fn = as_fn(m);
  try {
    if (auto d = continuity_problem(fn, pieces)) return CheckVerdict::fail(stage, "continuity", *d);
  } catch (const DomainError& e) {
    return CheckVerdict::fail(stage, "definition", e.what());
  }
  if (auto p = containment_problem(pieces, *m.codomain, false)) return CheckVerdict::fail(stage, p->premise, p->detail);
  if (auto p = monotone_problem(pieces, false, mode)) return CheckVerdict::fail(stage, p->premise, p->detail);
  return CheckVerdict::ok(stage);
}

CheckVerdict check_context_preserving(const PLMap& m, const GeoSpace& B, const GeoSpace& C) {
  std::string stage = m.name + " preserves context";
  auto a = B.context_names(), b = C.context_names();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ContextError("spaces " + B.name + " and " + C.name + " have different contexts");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (B.mark(a[i]) == B.mark(a[j]) && C.mark(a[i]) != C.mark(a[j]))
        return CheckVerdict::fail(stage, "structure map",
                                  "context vertices " + a[i] + " and " + a[j] + " share the point " +
                                      point_str(B.mark(a[i])) + " in " + B.name + " but are marked at " +
                                      point_str(C.mark(a[i])) + " and " + point_str(C.mark(a[j])) + " in " +
                                      C.name + "; no map can commute with both markings");
  for (const auto& x : a) {
    Point y;
    try {
      y = eval_pl(m, B.mark(x));
    } catch (const DomainError& e) {
      return CheckVerdict::fail(stage, "context", e.what());
    }
    if (y != C.mark(x))
      return CheckVerdict::fail(stage, "context", "context vertex " + x + " goes to " + point_str(y) +
                                                      " instead of " + point_str(C.mark(x)));
  }
  return CheckVerdict::ok(stage);
}

Homotopy linear_interpolation(const PLMap& f, const PLMap& g) {
  if (f.in_dim() != g.in_dim() || f.out_dim() != g.out_dim())
    throw DimensionError("interpolated maps must share domain and codomain dimensions");
  Homotopy h;
  h.name = "interp(" + f.name + "," + g.name + ")";
  h.domain = f.domain;
  h.codomain = f.codomain;
  h.isInterp = true;
  h.from = std::make_shared<PLMap>(f);
  h.to = std::make_shared<PLMap>(g);
  return h;
}

namespace {

CheckVerdict homotopy_core(const Homotopy& H, const std::vector<std::pair<Point, Point>>& rel, bool allowFast) {
  std::string stage = H.name;
  for (const auto& [p, target] : rel) {
    Point v0 = H.eval(p, Rat(0)), v1 = H.eval(p, Rat(1));
    if (v0 != target || v1 != target)
      return CheckVerdict::fail(stage, "moved context point",
                                point_str(p) + " must stay at " + point_str(target) + " but reaches " +
                                    point_str(v0 != target ? v0 : v1));
  }
  std::vector<Piece> pieces;
  try {
    pieces = refine_homotopy(H, H.domain->cells);
  } catch (const DomainError& e) {
    return CheckVerdict::fail(stage, "definition", e.what());
  }
  auto fn = as_fn(H);
  if (auto d = continuity_problem(fn, pieces)) return CheckVerdict::fail(stage, "continuity", *d);
  if (auto p = containment_problem(pieces, *H.codomain, true)) return CheckVerdict::fail(stage, p->premise, p->detail);
  if (allowFast && H.isInterp) {
    auto f = restrict_fn(fn, false), g = restrict_fn(fn, true);
    bool ok = !not_pointwise_leq(f, g, H.domain->cells);
    if (ok) {
      std::vector<Piece> fp, gp;
      for (auto& p : pieces) {
        fp.push_back(Piece{p.cell, p.P, AffMap(p.P.size(), Lin::constant(p.cell.ambient(), Rat(0)))});
        Piece q = fp.back();
        for (std::size_t i = 0; i < q.P.size(); ++i) q.P[i] = p.P[i] + p.Q[i];
        gp.push_back(q);
      }
      if (auto pr = monotone_problem(fp, false)) return CheckVerdict::fail(stage, pr->premise, "start map: " + pr->detail);
      if (auto pr = monotone_problem(gp, false)) return CheckVerdict::fail(stage, pr->premise, "end map: " + pr->detail);
      auto v = CheckVerdict::ok(stage);
      v.path = "fast";
      return v;
    }
  }
  if (auto p = monotone_problem(pieces, true)) return CheckVerdict::fail(stage, p->premise, p->detail);
  auto v = CheckVerdict::ok(stage);
  v.path = "general";
  return v;
}

}  // namespace

CheckVerdict check_dihomotopy(const Homotopy& H, const PieceFn& f, const PieceFn& g,
                              const std::vector<std::pair<Point, Point>>& relTargets, bool allowFastPath) {
  auto fn = as_fn(H);
  const auto& cells = H.domain->cells;
  if (auto d = functions_differ(restrict_fn(fn, false), f, cells))
    return CheckVerdict::fail(H.name, "endpoint t=0", *d);
  if (auto d = functions_differ(restrict_fn(fn, true), g, cells))
    return CheckVerdict::fail(H.name, "endpoint t=1", *d);
  return homotopy_core(H, relTargets, allowFastPath);
}

CheckVerdict check_dihomotopy(const Homotopy& H, const PLMap& f, const PLMap& g,
                              const std::vector<std::pair<Point, Point>>& relTargets, bool allowFastPath) {
  return check_dihomotopy(H, as_fn(f), as_fn(g), relTargets, allowFastPath);
}

namespace {

void run_chain(const std::string& label, const GeoSpace& X, const std::vector<ChainStep>& chain,
               const PieceFn& target, CheckVerdict& top) {
  std::vector<std::pair<Point, Point>> rel;
  for (const auto& a : X.context_names()) rel.emplace_back(X.mark(a), X.mark(a));
  PieceFn current = as_fn(identity_plmap(X.pl));
  current.name = "Id_" + X.name;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& step = chain[k];
    std::string stage = label + "[" + std::to_string(k) + "] " + step.h.name + (step.forward ? " fwd" : " bwd");
    auto fn = as_fn(step.h);
    auto start = restrict_fn(fn, !step.forward);
    if (auto d = functions_differ(start, current, X.pl->cells)) {
      top.stages.push_back(CheckVerdict::fail(stage, "chain endpoint", *d));
      return;
    }
    auto v = homotopy_core(step.h, rel, true);
    v.stage = stage;
    top.stages.push_back(v);
    if (!v.pass) return;
    current = restrict_fn(fn, step.forward);
  }
  std::string stage = label + " end";
  if (auto d = functions_differ(current, target, X.pl->cells))
    top.stages.push_back(CheckVerdict::fail(stage, "chain endpoint", *d));
  else
    top.stages.push_back(CheckVerdict::ok(stage));
}

}  // namespace

CheckVerdict verify_equivalence_certificate(const Certificate& cert) {
  CheckVerdict top = CheckVerdict::ok(cert.name);
  auto push = [&](CheckVerdict v) {
    top.stages.push_back(std::move(v));
    return top.stages.back().pass;
  };
  bool ok = push(check_dimap(cert.f)) && push(check_dimap(cert.g)) &&
            push(check_context_preserving(cert.f, *cert.B, *cert.C)) &&
            push(check_context_preserving(cert.g, *cert.C, *cert.B));
  if (ok) {
    PLMap gf = compose_plmaps(cert.g, cert.f);
    gf.name = cert.g.name + " o " + cert.f.name;
    run_chain("zigzagBC", *cert.B, cert.zigzagBC, as_fn(gf), top);
    ok = top.stages.back().pass;
  }
  if (ok) {
    PLMap fg = compose_plmaps(cert.f, cert.g);
    fg.name = cert.f.name + " o " + cert.g.name;
    run_chain("zigzagCB", *cert.C, cert.zigzagCB, as_fn(fg), top);
    ok = top.stages.back().pass;
  }
  for (const auto& s : top.stages)
    if (!s.pass) {
      top.pass = false;
      top.premise = s.premise;
      top.detail = s.stage + ": " + s.detail;
      break;
    }
  return top;
}

PLSpaceP image_space(const PLMap& m, std::string name) {
  std::vector<Cell> cells;
  for (const auto& p : refine_map(m, m.domain->cells)) cells.push_back(image_cell(p, Rat(0)));
  // Drop cells contained in another image cell.
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Cell> keep;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < cells.size() && !covered; ++j) {
      if (i == j || cells[j].dim <= cells[i].dim) continue;
      covered = std::all_of(cells[i].verts.begin(), cells[i].verts.end(),
                            [&](const Point& v) { return cells[j].contains(v); });
    }
    if (!covered) keep.push_back(cells[i]);
  }
  return make_cells_space(std::move(name), m.out_dim(), std::move(keep));
}

CombMap induce_comb_map(const PLMap& m, const DiComplex& B, const DiComplex& C) {
  CombMap f;
  std::map<std::string, Point> img;
  for (const auto& v : B.vertices) {
    if (!v.coords) throw NotAFunctorError("vertex '" + v.id + "' has no coordinates");
    Point y = m.apply_raw(*v.coords);
    auto w = C.vertex_at(y);
    if (!w) throw NotAFunctorError("image " + point_str(y) + " of '" + v.id + "' is not a vertex of the target");
    f.vmap[v.id] = *w;
    img[v.id] = y;
  }
  for (const auto& e : B.edges) {
    const std::string& fs = f.vmap[e.src];
    const std::string& fd = f.vmap[e.dst];
    if (fs == fd) {
      f.routing[e.id] = {};
      continue;
    }
    if (e.kind != EdgeKind::Directed) throw UnsupportedError("undirected edges with distinct images");
    auto pieces = refine_map(m, {segment_cell(*B.vertices[B.vertex(e.src)].coords, *B.vertices[B.vertex(e.dst)].coords)});
    std::vector<Cell> poly;
    for (const auto& p : pieces) poly.push_back(image_cell(p, Rat(0)));
    auto on_poly = [&](const Point& x) {
      return std::any_of(poly.begin(), poly.end(), [&](const Cell& c) { return c.contains(x); });
    };
    auto edge_on_poly = [&](int ce) {
      const auto& a = *C.vertices[C.srcIdx[ce]].coords;
      const auto& b = *C.vertices[C.dstIdx[ce]].coords;
      Point mid(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) mid[i] = (a[i] + b[i]) / Rat(2);
      return on_poly(a) && on_poly(b) && on_poly(mid);
    };
    std::vector<std::string> route;
    std::set<int> visited;
    int goal = C.vertex(fd);
    std::function<bool(int)> dfs = [&](int u) {
      if (u == goal) return true;
      if (!visited.insert(u).second) return false;
      for (int ce : C.out[u]) {
        if (!C.vertices[C.dstIdx[ce]].coords || !edge_on_poly(ce)) continue;
        route.push_back(C.edges[ce].id);
        if (dfs(C.dstIdx[ce])) return true;
        route.pop_back();
      }
      return false;
    };
    if (!dfs(C.vertex(fs))) throw NotAFunctorError("no directed route for the image of edge '" + e.id + "'");
    f.routing[e.id] = route;
  }
  return f;
}

}  // namespace ditopo
