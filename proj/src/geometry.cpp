#include "ditopo/geometry.hpp"

#include <algorithm>
#include <set>

#include "ditopo/errors.hpp"
#include "ditopo/lp.hpp"

namespace ditopo {

// ---------------------------------------------------------------- Lin

Lin Lin::constant(std::size_t n, const Rat& v) { return Lin{std::vector<Rat>(n), v}; }

Lin Lin::coordinate(std::size_t n, std::size_t i) {
  Lin l{std::vector<Rat>(n), Rat(0)};
  l.a[i] = 1;
  return l;
}

Rat Lin::eval(const Point& x) const {
  if (x.size() != a.size()) throw DimensionError("affine function applied to wrong dimension");
  Rat s = c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s += a[i] * x[i];
  return s;
}

bool Lin::is_constant() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); });
}

Lin Lin::operator+(const Lin& o) const {
  Lin r = *this;
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  r.c += o.c;
  return r;
}

Lin Lin::operator-(const Lin& o) const { return *this + o.scaled(Rat(-1)); }

Lin Lin::scaled(const Rat& k) const {
  Lin r = *this;
  for (auto& v : r.a) v *= k;
  r.c *= k;
  return r;
}

Point apply(const AffMap& f, const Point& x) {
  Point y;
  y.reserve(f.size());
  for (const auto& l : f) y.push_back(l.eval(x));
  return y;
}

AffMap identity_map(std::size_t n) {
  AffMap m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(Lin::coordinate(n, i));
  return m;
}

Lin compose(const Lin& outer, const AffMap& inner) {
  if (outer.a.size() != inner.size()) throw DimensionError("composition dimension mismatch");
  std::size_t n = inner.empty() ? 0 : inner[0].a.size();
  Lin r = Lin::constant(n, outer.c);
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (!outer.a[i].is_zero()) r = r + inner[i].scaled(outer.a[i]);
  return r;
}

AffMap compose(const AffMap& outer, const AffMap& inner) {
  AffMap r;
  for (const auto& l : outer) r.push_back(compose(l, inner));
  return r;
}

// ---------------------------------------------------------------- Cell

namespace {

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point lerp(const Point& a, const Point& b, const Rat& t) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Parameter of p along the line a + t (b - a) if p lies on that line.
std::optional<Rat> param_on_line(const Point& a, const Point& b, const Point& p) {
  Point d = sub(b, a), q = sub(p, a);
  std::size_t k = 0;
  while (k < d.size() && d[k].is_zero()) ++k;
  if (k == d.size()) return std::nullopt;
  Rat t = q[k] / d[k];
  for (std::size_t i = 0; i < d.size(); ++i)
    if (q[i] != t * d[i]) return std::nullopt;
  return t;
}

}  // namespace

Cell point_cell(Point p) { return Cell{0, {std::move(p)}}; }

Cell segment_cell(Point p, Point q) {
  if (p == q) return point_cell(std::move(p));
  if (q < p) std::swap(p, q);
  return Cell{1, {std::move(p), std::move(q)}};
}

Cell hull_cell(std::vector<Point> pts) {
  if (pts.empty()) throw DomainError("hull of empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return point_cell(pts[0]);
  const Point& a = pts[0];
  const Point& b = pts[1];
  bool collinear = true;
  Rat tmin(0), tmax(1);
  std::size_t imin = 0, imax = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto t = param_on_line(a, b, pts[i]);
    if (!t) {
      collinear = false;
      break;
    }
    if (*t < tmin) { tmin = *t; imin = i; }
    if (*t > tmax) { tmax = *t; imax = i; }
  }
  if (collinear) return segment_cell(pts[imin], pts[imax]);
  if (a.size() != 2) throw UnsupportedError("two-dimensional cells must live in the plane");
  // Andrew's monotone chain, dropping collinear points; starts at the
  // lexicographically least vertex and runs counter-clockwise.
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]).sign() <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return Cell{2, h};
}

Point Cell::centroid() const {
  Point c(ambient());
  for (const auto& v : verts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
  for (auto& x : c) x /= Rat(static_cast<long>(verts.size()));
  return c;
}

bool Cell::contains(const Point& p) const {
  if (p.size() != ambient()) throw DimensionError("point/cell dimension mismatch");
  if (dim == 0) return p == verts[0];
  if (dim == 1) {
    auto t = param_on_line(verts[0], verts[1], p);
    return t && t->sign() >= 0 && *t <= Rat(1);
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (cross(verts[i], verts[(i + 1) % verts.size()], p).sign() < 0) return false;
  return true;
}

Point Cell::bbox_lo() const {
  Point r = verts[0];
  for (const auto& v : verts)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rmin(r[i], v[i]);
  return r;
}

Point Cell::bbox_hi() const {
  Point r = verts[0];
  for (const auto& v : verts)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rmax(r[i], v[i]);
  return r;
}

std::vector<Cell> Cell::facets() const {
  std::vector<Cell> out;
  if (dim == 1) {
    out.push_back(point_cell(verts[0]));
    out.push_back(point_cell(verts[1]));
  } else if (dim == 2) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      out.push_back(segment_cell(verts[i], verts[(i + 1) % verts.size()]));
  }
  return out;
}

std::string Cell::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) s += " ";
    s += point_str(verts[i]);
  }
  return s + "]";
}

bool Cell::operator<(const Cell& o) const {
  if (dim != o.dim) return dim < o.dim;
  return verts < o.verts;
}

SignSummary signs_on(const Cell& c, const Lin& h) {
  SignSummary s;
  for (const auto& v : c.verts) {
    int sg = h.eval(v).sign();
    if (sg > 0) s.anyPos = true;
    if (sg < 0) s.anyNeg = true;
  }
  return s;
}

std::optional<std::pair<Cell, Cell>> split_cell(const Cell& c, const Lin& h) {
  auto s = signs_on(c, h);
  if (!(s.anyPos && s.anyNeg)) return std::nullopt;
  if (c.dim == 1) {
    Rat h0 = h.eval(c.verts[0]), h1 = h.eval(c.verts[1]);
    Point q = lerp(c.verts[0], c.verts[1], h0 / (h0 - h1));
    const Point& neg = h0.sign() < 0 ? c.verts[0] : c.verts[1];
    const Point& pos = h0.sign() < 0 ? c.verts[1] : c.verts[0];
    return std::make_pair(segment_cell(neg, q), segment_cell(q, pos));
  }
  std::vector<Point> neg, pos;
  std::size_t n = c.verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = c.verts[i];
    const Point& q = c.verts[(i + 1) % n];
    Rat hp = h.eval(p), hq = h.eval(q);
    if (hp.sign() <= 0) neg.push_back(p);
    if (hp.sign() >= 0) pos.push_back(p);
    if ((hp.sign() < 0 && hq.sign() > 0) || (hp.sign() > 0 && hq.sign() < 0)) {
      Point x = lerp(p, q, hp / (hp - hq));
      neg.push_back(x);
      pos.push_back(x);
    }
  }
  return std::make_pair(hull_cell(neg), hull_cell(pos));
}

// ---------------------------------------------------------------- LP tests

bool cell_meets_open_box(const Cell& k, const Box& b) {
  std::size_t n = k.ambient();
  Point lo = k.bbox_lo(), hi = k.bbox_hi();
  for (std::size_t i = 0; i < n; ++i)
    if (hi[i] < b.lo[i] || lo[i] > b.hi[i]) return false;
  // Variables: lambda_0..lambda_{m-1}, eps, then slacks.
  std::size_t m = k.verts.size();
  std::size_t open = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (b.lo[i] < b.hi[i]) ++open;
  std::size_t nv = m + 1 + 2 * open + 1;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> rhs;
  auto row = [&]() { return std::vector<Rat>(nv); };
  {
    auto r = row();
    for (std::size_t j = 0; j < m; ++j) r[j] = 1;
    A.push_back(r);
    rhs.push_back(1);
  }
  std::size_t slack = m + 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.lo[i] == b.hi[i]) {
      auto r = row();
      for (std::size_t j = 0; j < m; ++j) r[j] = k.verts[j][i];
      A.push_back(r);
      rhs.push_back(b.lo[i]);
      continue;
    }
    auto r1 = row();
    for (std::size_t j = 0; j < m; ++j) r1[j] = k.verts[j][i];
    r1[m] = -1;
    r1[slack++] = -1;
    A.push_back(r1);
    rhs.push_back(b.lo[i]);
    auto r2 = row();
    for (std::size_t j = 0; j < m; ++j) r2[j] = k.verts[j][i];
    r2[m] = 1;
    r2[slack++] = 1;
    A.push_back(r2);
    rhs.push_back(b.hi[i]);
  }
  {
    auto r = row();
    r[m] = 1;
    r[slack] = 1;
    A.push_back(r);
    rhs.push_back(1);
  }
  std::vector<Rat> c(nv);
  c[m] = -1;
  auto res = lp_minimize(A, rhs, c);
  return res.status == LPStatus::Optimal && res.value.sign() < 0;
}

// ---------------------------------------------------------------- PLSpace

namespace {

bool covers_segment(const std::vector<Cell>& cells, const Cell& k) {
  const Point& a = k.verts[0];
  const Point& b = k.verts[1];
  std::vector<std::pair<Rat, Rat>> iv;
  for (const auto& c : cells) {
    if (c.dim == 1) {
      auto t0 = param_on_line(a, b, c.verts[0]);
      auto t1 = param_on_line(a, b, c.verts[1]);
      if (t0 && t1) iv.emplace_back(rmin(*t0, *t1), rmax(*t0, *t1));
    } else if (c.dim == 2 && a.size() == 2) {
      Rat lo(0), hi(1);
      bool empty = false;
      for (std::size_t i = 0; i < c.verts.size() && !empty; ++i) {
        const Point& p = c.verts[i];
        const Point& q = c.verts[(i + 1) % c.verts.size()];
        // cross(p,q,a + t(b-a)) >= 0 is affine in t
        Rat f0 = cross(p, q, a), f1 = cross(p, q, b);
        Rat slope = f1 - f0;
        if (slope.is_zero()) {
          if (f0.sign() < 0) empty = true;
        } else {
          Rat t = -f0 / slope;
          if (slope.sign() > 0) lo = rmax(lo, t);
          else hi = rmin(hi, t);
        }
      }
      if (!empty && lo <= hi) iv.emplace_back(lo, hi);
    }
  }
  std::sort(iv.begin(), iv.end());
  Rat reach(0);
  bool started = false;
  for (const auto& [lo, hi] : iv) {
    if (hi < Rat(0)) continue;
    if (!started) {
      if (lo > Rat(0)) return false;
      started = true;
    } else if (lo > reach) {
      return false;
    }
    reach = rmax(reach, hi);
    if (reach >= Rat(1)) return true;
  }
  return started && reach >= Rat(1);
}

bool covers_polygon(const std::vector<Cell>& cells, const Cell& k) {
  std::vector<Lin> lines;
  std::vector<const Cell*> faces;
  for (const auto& c : cells) {
    if (c.dim != 2) continue;
    faces.push_back(&c);
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
      const Point& p = c.verts[i];
      const Point& q = c.verts[(i + 1) % c.verts.size()];
      Lin l{{-(q[1] - p[1]), q[0] - p[0]}, Rat(0)};
      l.c = -(l.a[0] * p[0] + l.a[1] * p[1]);
      lines.push_back(l);
    }
  }
  std::vector<Cell> pieces{k};
  for (const auto& l : lines) {
    std::vector<Cell> next;
    for (const auto& p : pieces) {
      auto s = split_cell(p, l);
      if (s) {
        next.push_back(s->first);
        next.push_back(s->second);
      } else {
        next.push_back(p);
      }
    }
    pieces = std::move(next);
  }
  for (const auto& p : pieces) {
    Point m = p.centroid();
    bool ok = std::any_of(faces.begin(), faces.end(), [&](const Cell* f) { return f->contains(m); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool PLSpace::contains(const Point& p) const {
  if (p.size() != dim) return false;
  if (region) {
    auto c = region_classify(*region, p);
    return c == RegionClass::Inside || c == RegionClass::OnForbiddenBoundary;
  }
  return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(p); });
}

bool PLSpace::contains_cell(const Cell& k) const {
  if (k.ambient() != dim) return false;
  if (region) {
    for (const auto& v : k.verts)
      if (!region->outer.contains_closed(v)) return false;
    for (const auto& b : removedCells)
      if (cell_meets_open_box(k, b)) return false;
    return true;
  }
  if (k.dim == 0) return contains(k.verts[0]);
  if (k.dim == 1) return covers_segment(cells, k);
  return covers_polygon(cells, k);
}

std::vector<Point> PLSpace::vertices() const {
  std::set<Point> s;
  for (const auto& c : cells)
    for (const auto& v : c.verts) s.insert(v);
  return {s.begin(), s.end()};
}

PLSpaceP make_cells_space(std::string name, std::size_t dim, std::vector<Cell> cells) {
  auto s = std::make_shared<PLSpace>();
  s->name = std::move(name);
  s->dim = dim;
  for (const auto& c : cells)
    if (c.ambient() != dim) throw DimensionError("cell dimension does not match space");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  s->cells = std::move(cells);
  return s;
}

PLSpaceP make_region_space(std::string name, const RectRegion& r,
                           const std::vector<std::vector<Rat>>& gridLines) {
  r.validate();
  std::size_t n = r.dim();
  if (n == 0 || n > 2) throw UnsupportedError("region spaces support dimension 1 or 2");
  if (gridLines.size() != n) throw GridError("grid lines needed for every axis");
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Rat> need{r.outer.lo[i], r.outer.hi[i]};
    for (const auto& b : r.forbidden) {
      need.insert(b.lo[i]);
      need.insert(b.hi[i]);
    }
    for (const auto& v : need)
      if (std::find(gridLines[i].begin(), gridLines[i].end(), v) == gridLines[i].end())
        throw GridError("missing grid line " + v.str() + " on axis " + std::to_string(i));
  }
  // A grid cell is described per axis by (index, isInterval).
  std::vector<std::vector<Rat>> lines;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> l;
    for (const auto& v : gridLines[i])
      if (v >= r.outer.lo[i] && v <= r.outer.hi[i]) l.push_back(v);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    lines.push_back(l);
  }
  struct GC {
    std::vector<std::pair<std::size_t, bool>> ax;
  };
  std::vector<GC> all{GC{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GC> next;
    for (const auto& g : all) {
      for (std::size_t j = 0; j < lines[i].size(); ++j) {
        GC a = g;
        a.ax.emplace_back(j, false);
        next.push_back(a);
        if (j + 1 < lines[i].size()) {
          GC b = g;
          b.ax.emplace_back(j, true);
          next.push_back(b);
        }
      }
    }
    all = std::move(next);
  }
  auto mid = [&](const GC& g) {
    Point p;
    for (std::size_t i = 0; i < n; ++i) {
      auto [j, iv] = g.ax[i];
      p.push_back(iv ? (lines[i][j] + lines[i][j + 1]) / Rat(2) : lines[i][j]);
    }
    return p;
  };
  auto to_box = [&](const GC& g) {
    Point lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
      auto [j, iv] = g.ax[i];
      lo.push_back(lines[i][j]);
      hi.push_back(iv ? lines[i][j + 1] : lines[i][j]);
    }
    return Box::open(lo, hi);
  };
  auto s = std::make_shared<PLSpace>();
  s->name = std::move(name);
  s->dim = n;
  s->region = r;
  std::vector<Cell> kept;
  std::vector<Box> keptBoxes;
  std::vector<int> keptDim;
  for (const auto& g : all) {
    Box b = to_box(g);
    if (region_classify(r, mid(g)) == RegionClass::Removed) {
      s->removedCells.push_back(b);
      continue;
    }
    int d = 0;
    for (const auto& [j, iv] : g.ax) d += iv ? 1 : 0;
    keptBoxes.push_back(b);
    keptDim.push_back(d);
  }
  for (std::size_t a = 0; a < keptBoxes.size(); ++a) {
    const Box& b = keptBoxes[a];
    bool maximal = true;
    for (std::size_t c = 0; c < keptBoxes.size() && maximal; ++c)
      if (keptDim[c] > keptDim[a] && keptBoxes[c].contains_closed(b.lo) &&
          keptBoxes[c].contains_closed(b.hi))
        maximal = false;
    if (!maximal) continue;
    std::vector<Point> corners{Point{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Point> next;
      for (const auto& base : corners) {
        Point p = base;
        p.push_back(b.lo[i]);
        next.push_back(p);
        if (b.hi[i] != b.lo[i]) {
          Point q = base;
          q.push_back(b.hi[i]);
          next.push_back(q);
        }
      }
      corners = std::move(next);
    }
    kept.push_back(hull_cell(corners));
  }
  std::sort(kept.begin(), kept.end());
  s->cells = std::move(kept);
  return s;
}

}  // namespace ditopo
