#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ditopo/complex.hpp"
#include "ditopo/expr.hpp"
#include "ditopo/fundcat.hpp"

namespace ditopo {

// A space with geometry, a combinatorial model and a marked context.
struct GeoSpace {
  std::string name;
  ContextedComplex cx;
  PLSpaceP pl;

  std::vector<std::string> context_names() const { return cx.context_vertices(); }
  // Coordinates of the marked point of context vertex a.
  Point mark(const std::string& a) const;
};
using GeoSpaceP = std::shared_ptr<const GeoSpace>;

// Homotopy B x [0,1] -> C; either the linear interpolation between two
// maps or an explicit expression vector over (x_1..x_n, t).
struct Homotopy {
  std::string name;
  PLSpaceP domain, codomain;
  bool isInterp = true;
  std::shared_ptr<const PLMap> from, to;  // interpolation endpoints
  Stage exprs;                            // explicit form; t is variable `domain->dim`

  Point eval(const Point& b, const Rat& t) const;
};

// Per-cell description value(x, t) = P(x) + t Q(x), exact on the closed cell.
struct Piece {
  Cell cell;
  AffMap P, Q;
};

// Anything that can be evaluated pointwise and refined into pieces.
struct PieceFn {
  std::string name;
  std::size_t inDim = 0, outDim = 0;
  bool timeDependent = false;
  std::function<std::vector<Piece>(const std::vector<Cell>&)> refine;
  std::function<std::pair<Point, Point>(const Point&)> at01;  // values at t = 0 and t = 1
};

PieceFn as_fn(const PLMap& m);
PieceFn as_fn(const Homotopy& h);
// Restriction of a homotopy to t = 0 or t = 1 as a time-independent function.
PieceFn restrict_fn(const PieceFn& h, bool atOne);

std::vector<Piece> refine_map(const PLMap& m, const std::vector<Cell>& cells);
std::vector<Piece> refine_homotopy(const Homotopy& h, const std::vector<Cell>& cells);

struct CheckVerdict {
  bool pass = true;
  std::string stage;    // which map or homotopy
  std::string premise;  // continuity, monotonicity, monotonicity-in-t, containment, ...
  std::string detail;
  std::string path;     // "fast" or "general" for dihomotopy checks
  std::vector<CheckVerdict> stages;

  static CheckVerdict ok(std::string stage) {
    CheckVerdict v;
    v.stage = std::move(stage);
    return v;
  }
  static CheckVerdict fail(std::string stage, std::string premise, std::string detail) {
    CheckVerdict v;
    v.pass = false;
    v.stage = std::move(stage);
    v.premise = std::move(premise);
    v.detail = std::move(detail);
    return v;
  }
};

// Local: every affine piece is nondecreasing along the nonnegative
// directions of its cell (monotone along all directed paths of the space).
// Induced: order preservation for the componentwise order restricted from
// R^n to the whole domain, decided pairwise by exact linear programs.
enum class OrderMode { Local, Induced };

// Continuity, monotonicity and image containment in the codomain.
CheckVerdict check_dimap(const PLMap& m, OrderMode mode = OrderMode::Local);
CheckVerdict check_context_preserving(const PLMap& m, const GeoSpace& B, const GeoSpace& C);

Homotopy linear_interpolation(const PLMap& f, const PLMap& g);

// relTargets: context point in the domain -> required value for all t.
CheckVerdict check_dihomotopy(const Homotopy& H, const PieceFn& f, const PieceFn& g,
                              const std::vector<std::pair<Point, Point>>& relTargets = {},
                              bool allowFastPath = true);
CheckVerdict check_dihomotopy(const Homotopy& H, const PLMap& f, const PLMap& g,
                              const std::vector<std::pair<Point, Point>>& relTargets = {},
                              bool allowFastPath = true);

// Exact equality / order of two functions on the cells of a space, decided
// on a common refinement. Returns a witness point description on failure.
std::optional<std::string> functions_differ(const PieceFn& a, const PieceFn& b, const std::vector<Cell>& cells);
std::optional<std::string> not_pointwise_leq(const PieceFn& a, const PieceFn& b, const std::vector<Cell>& cells);

struct ChainStep {
  Homotopy h;
  bool forward = true;
};

struct Certificate {
  std::string name;
  GeoSpaceP B, C;
  PLMap f, g;
  std::vector<ChainStep> zigzagBC;  // from Id_B to g o f
  std::vector<ChainStep> zigzagCB;  // from Id_C to f o g
};

CheckVerdict verify_equivalence_certificate(const Certificate& cert);

// Image of the domain under a map, as a cell space.
PLSpaceP image_space(const PLMap& m, std::string name);

// Combinatorial shadow of a PL map between embedded complexes: vertices go
// to the vertex at their image, edges to the directed path along the image
// polyline. Throws NotAFunctorError when no such routing exists.
CombMap induce_comb_map(const PLMap& m, const DiComplex& B, const DiComplex& C);

// Named maps and spaces used throughout the examples.
GeoSpaceP preset_space(const std::string& name);
PLMap preset_map(const std::string& name);
Homotopy preset_homotopy(const std::string& name);
Certificate preset_certificate(const std::string& name);
std::vector<std::string> preset_map_names();
std::vector<std::string> preset_certificate_names();
std::vector<std::string> preset_homotopy_names();
std::vector<std::string> preset_space_names();

}  // namespace ditopo
