#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ditopo/order.hpp"

namespace ditopo {

// Scalar affine function x -> a.x + c.
struct Lin {
  std::vector<Rat> a;
  Rat c;

  static Lin constant(std::size_t n, const Rat& v);
  static Lin coordinate(std::size_t n, std::size_t i);
  Rat eval(const Point& x) const;
  bool is_constant() const;
  Lin operator+(const Lin& o) const;
  Lin operator-(const Lin& o) const;
  Lin scaled(const Rat& k) const;
  bool operator==(const Lin& o) const { return a == o.a && c == o.c; }
};

// Affine map R^n -> R^m as one Lin per output.
using AffMap = std::vector<Lin>;
Point apply(const AffMap& f, const Point& x);
AffMap identity_map(std::size_t n);
// outer o inner
AffMap compose(const AffMap& outer, const AffMap& inner);
Lin compose(const Lin& outer, const AffMap& inner);

// Closed convex cell of dimension 0, 1 or 2. Segments store two
// endpoints; polygons store their vertices in counter-clockwise order
// and live in R^2.
struct Cell {
  int dim = 0;
  std::vector<Point> verts;

  std::size_t ambient() const { return verts.empty() ? 0 : verts[0].size(); }
  Point centroid() const;
  bool contains(const Point& p) const;
  Point bbox_lo() const;
  Point bbox_hi() const;
  // Boundary faces one dimension down.
  std::vector<Cell> facets() const;
  std::string str() const;
  bool operator==(const Cell& o) const { return dim == o.dim && verts == o.verts; }
  bool operator<(const Cell& o) const;
};

Cell point_cell(Point p);
Cell segment_cell(Point p, Point q);
// Convex hull of a finite point set (ambient dimension 2 required for
// full-dimensional hulls). The result is in a canonical vertex order.
Cell hull_cell(std::vector<Point> pts);

// Splits `c` by the hyperplane h = 0. Returns the parts where h <= 0 and
// h >= 0 when h changes strict sign on the cell, or nothing otherwise.
std::optional<std::pair<Cell, Cell>> split_cell(const Cell& c, const Lin& h);

// Sign pattern of h on the cell's vertices.
struct SignSummary {
  bool anyPos = false, anyNeg = false;
};
SignSummary signs_on(const Cell& c, const Lin& h);

// Finite union of closed convex cells carrying the componentwise order
// induced from the ambient space. When `region` is set, membership
// follows the region and the cells are its retained maximal grid cells.
struct PLSpace {
  std::string name;
  std::size_t dim = 0;
  std::vector<Cell> cells;
  std::optional<RectRegion> region;
  std::vector<Box> removedCells;  // open grid cells of a region that are Removed

  bool contains(const Point& p) const;
  // Exact test that the convex cell lies inside the space.
  bool contains_cell(const Cell& k) const;
  std::vector<Point> vertices() const;  // sorted, deduplicated
};
using PLSpaceP = std::shared_ptr<const PLSpace>;

PLSpaceP make_region_space(std::string name, const RectRegion& r,
                           const std::vector<std::vector<Rat>>& gridLines);
PLSpaceP make_cells_space(std::string name, std::size_t dim, std::vector<Cell> cells);

// Exact test for nonempty intersection of a convex cell with the relative
// interior of a box whose open axes are those with lo < hi.
bool cell_meets_open_box(const Cell& k, const Box& b);

}  // namespace ditopo
