#pragma once

#include <string>
#include <vector>

#include "ditopo/rat.hpp"

namespace ditopo {

using Point = std::vector<Rat>;

std::string point_str(const Point& p);

enum class OrderRelation { LessEq, GreaterEq, Equal, Incomparable };
const char* to_string(OrderRelation r);

// Componentwise comparison. Throws DimensionError on mismatched sizes.
OrderRelation compare_points(const Point& p, const Point& q);
bool leq(const Point& p, const Point& q);

// Axis-aligned box. For each axis i, loOpen[i] / hiOpen[i] mark whether
// the corresponding face is excluded.
struct Box {
  Point lo, hi;
  std::vector<bool> loOpen, hiOpen;

  static Box closed(Point lo, Point hi);
  static Box open(Point lo, Point hi);
  std::size_t dim() const { return lo.size(); }
  bool contains(const Point& p) const;         // honours openness
  bool contains_closed(const Point& p) const;  // closure membership
  void validate() const;                       // throws DomainError
};

// Closed outer box minus the topological interior of the union of the
// (closures of the) forbidden boxes.
struct RectRegion {
  Box outer;
  std::vector<Box> forbidden;
  bool interiorOfUnion = true;

  std::size_t dim() const { return outer.dim(); }
  void validate() const;
};

enum class RegionClass { Inside, OnForbiddenBoundary, Removed, OutsideOuter };
const char* to_string(RegionClass c);

RegionClass region_classify(const RectRegion& r, const Point& p);

}  // namespace ditopo
