#include "ditopo/order.hpp"

#include <algorithm>
#include <set>

#include "ditopo/errors.hpp"

namespace ditopo {

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::LessEq: return "LessEq";
    case OrderRelation::GreaterEq: return "GreaterEq";
    case OrderRelation::Equal: return "Equal";
    case OrderRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

OrderRelation compare_points(const Point& p, const Point& q) {
  if (p.size() != q.size())
    throw DimensionError("comparing points of dimension " + std::to_string(p.size()) +
                         " and " + std::to_string(q.size()));
  bool le = true, ge = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) le = false;
    if (p[i] < q[i]) ge = false;
  }
  if (le && ge) return OrderRelation::Equal;
  if (le) return OrderRelation::LessEq;
  if (ge) return OrderRelation::GreaterEq;
  return OrderRelation::Incomparable;
}

bool leq(const Point& p, const Point& q) {
  auto r = compare_points(p, q);
  return r == OrderRelation::LessEq || r == OrderRelation::Equal;
}

Box Box::closed(Point lo, Point hi) {
  Box b{std::move(lo), std::move(hi), {}, {}};
  b.loOpen.assign(b.lo.size(), false);
  b.hiOpen.assign(b.lo.size(), false);
  b.validate();
  return b;
}

Box Box::open(Point lo, Point hi) {
  Box b{std::move(lo), std::move(hi), {}, {}};
  b.loOpen.assign(b.lo.size(), true);
  b.hiOpen.assign(b.lo.size(), true);
  for (std::size_t i = 0; i < b.lo.size(); ++i)
    if (b.lo[i] == b.hi[i]) b.loOpen[i] = b.hiOpen[i] = false;
  b.validate();
  return b;
}

void Box::validate() const {
  if (lo.size() != hi.size() || loOpen.size() != lo.size() || hiOpen.size() != lo.size())
    throw DimensionError("box with inconsistent dimensions");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw DomainError("box with lo > hi on axis " + std::to_string(i));
    if (lo[i] == hi[i] && (loOpen[i] || hiOpen[i]))
      throw DomainError("degenerate box face must be closed on axis " + std::to_string(i));
  }
}

bool Box::contains_closed(const Point& p) const {
  if (p.size() != dim()) throw DimensionError("point/box dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

bool Box::contains(const Point& p) const {
  if (!contains_closed(p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (loOpen[i] && p[i] == lo[i]) return false;
    if (hiOpen[i] && p[i] == hi[i]) return false;
  }
  return true;
}

void RectRegion::validate() const {
  outer.validate();
  for (const auto& b : forbidden) {
    b.validate();
    if (b.dim() != dim()) throw DimensionError("forbidden box dimension mismatch");
    if (!outer.contains_closed(b.lo) || !outer.contains_closed(b.hi))
      throw DomainError("forbidden box not contained in outer box");
  }
}

const char* to_string(RegionClass c) {
  switch (c) {
    case RegionClass::Inside: return "Inside";
    case RegionClass::OnForbiddenBoundary: return "OnForbiddenBoundary";
    case RegionClass::Removed: return "Removed";
    case RegionClass::OutsideOuter: return "OutsideOuter";
  }
  return "?";
}

namespace {

// Membership in the union of the forbidden boxes, using open boxes when
// interiorOfUnion is false and closed boxes otherwise.
bool in_union(const RectRegion& r, const Point& p, bool closedBoxes) {
  for (const auto& b : r.forbidden)
    if (closedBoxes ? b.contains_closed(p) : b.contains(p)) return true;
  return false;
}

// Probe offsets around p that land in every open grid cell incident to p,
// where the grid is spanned by the face coordinates of the forbidden boxes.
std::vector<Point> incident_samples(const RectRegion& r, const Point& p) {
  std::size_t n = p.size();
  std::vector<std::vector<Rat>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Rat> lines;
    for (const auto& b : r.forbidden) {
      lines.insert(b.lo[i]);
      lines.insert(b.hi[i]);
    }
    Rat gap(1);
    bool onLine = lines.count(p[i]) > 0;
    for (const auto& l : lines)
      if (l != p[i]) {
        Rat d = l > p[i] ? l - p[i] : p[i] - l;
        if (d < gap) gap = d;
      }
    Rat delta = gap / Rat(2);
    if (onLine) {
      choices[i] = {p[i] - delta, p[i] + delta};
    } else {
      choices[i] = {p[i]};
    }
  }
  std::vector<Point> out{Point{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> next;
    for (const auto& base : out)
      for (const auto& c : choices[i]) {
        Point q = base;
        q.push_back(c);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

RegionClass region_classify(const RectRegion& r, const Point& p) {
  if (p.size() != r.dim()) throw DimensionError("point/region dimension mismatch");
  if (!r.outer.contains_closed(p)) return RegionClass::OutsideOuter;
  if (!r.interiorOfUnion) {
    if (in_union(r, p, false)) return RegionClass::Removed;
    if (in_union(r, p, true)) return RegionClass::OnForbiddenBoundary;
    return RegionClass::Inside;
  }
  if (!in_union(r, p, true)) return RegionClass::Inside;
  for (const auto& q : incident_samples(r, p))
    if (!in_union(r, q, false)) return RegionClass::OnForbiddenBoundary;
  return RegionClass::Removed;
}

}  // namespace ditopo
