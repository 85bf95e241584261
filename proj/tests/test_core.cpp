#include <random>

#include "doctest.h"
#include "support.hpp"

#include "ditopo/expr.hpp"
#include "ditopo/lp.hpp"
#include "ditopo/plmaps.hpp"

using namespace testsupport;

TEST_CASE("rationals parse, print and normalise") {
  CHECK(Rat::parse("2/4") == q(1, 2));
  CHECK(Rat::parse("-3/9").str() == "-1/3");
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK((q(2, 3) / q(4, 3)) == q(1, 2));
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS(q(1) / q(0));
}

TEST_CASE("compare_points on the unit square") {
  CHECK(compare_points(P(1, 1, 4), P(3, 3, 4)) == OrderRelation::LessEq);
  CHECK(compare_points(P(3, 3, 4), P(1, 1, 4)) == OrderRelation::GreaterEq);
  CHECK(compare_points(P(0, 1, 4), P(3, 0, 4)) == OrderRelation::Incomparable);
  CHECK(compare_points(P(1, 2, 5), P(1, 2, 5)) == OrderRelation::Equal);
  CHECK(leq(P(0, 0, 1), P(0, 1, 1)));
  CHECK_FALSE(leq(P(0, 1, 1), P(1, 0, 1)));
  CHECK_THROWS_AS(compare_points(Point{q(0)}, P(0, 0, 1)), DimensionError);
}

TEST_CASE("boxes honour open and closed faces") {
  Box o = Box::open(P(1, 1, 3), P(2, 2, 3));
  CHECK(o.contains(P(1, 1, 2)));
  CHECK_FALSE(o.contains(P(1, 1, 3)));
  CHECK(o.contains_closed(P(1, 1, 3)));
  Box c = Box::closed(P(0, 0, 1), P(1, 1, 1));
  CHECK(c.contains(P(1, 0, 1)));
  CHECK_FALSE(c.contains(Point{q(2), q(0)}));
  CHECK_THROWS_AS(Box::closed(P(1, 0, 1), P(0, 1, 1)), DomainError);
}

namespace {
RectRegion swiss() {
  RectRegion r = unit_square();
  r.forbidden = {Box::open(P(1, 2, 5), P(4, 3, 5)), Box::open(P(2, 1, 5), P(3, 4, 5))};
  return r;
}
}  // namespace

TEST_CASE("region_classify on the Swiss flag") {
  RectRegion r = swiss();
  CHECK(region_classify(r, P(2, 2, 5)) == RegionClass::OnForbiddenBoundary);
  CHECK(region_classify(r, P(3, 3, 5)) == RegionClass::OnForbiddenBoundary);
  CHECK(region_classify(r, P(1, 1, 2)) == RegionClass::Removed);
  CHECK(region_classify(r, Point{q(1, 2), q(2, 5)}) == RegionClass::Removed);
  CHECK(region_classify(r, P(0, 0, 1)) == RegionClass::Inside);
  CHECK(region_classify(r, P(1, 1, 1)) == RegionClass::Inside);
  CHECK(region_classify(r, Point{q(2), q(0)}) == RegionClass::OutsideOuter);
}

TEST_CASE("region_classify for a single open box") {
  RectRegion r = unit_square();
  r.forbidden = {Box::open(P(1, 1, 3), P(2, 2, 3))};
  CHECK(region_classify(r, P(1, 1, 2)) == RegionClass::Removed);
  CHECK(region_classify(r, P(1, 1, 3)) == RegionClass::OnForbiddenBoundary);
  CHECK(region_classify(r, Point{q(1, 2), q(1, 3)}) == RegionClass::OnForbiddenBoundary);
  CHECK(region_classify(r, Point{q(1, 2), q(1, 6)}) == RegionClass::Inside);
}

TEST_CASE("region_classify is monotone under shrinking a forbidden box") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(0, 12);
  std::size_t cases = 0;
  for (int it = 0; it < 1000; ++it) {
    long x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    if (x0 == x1 || y0 == y1) continue;
    RectRegion big = unit_square();
    big.forbidden = {Box::open(P(x0, y0, 12), P(x1, y1, 12))};
    RectRegion small = unit_square();
    std::uniform_int_distribution<long> sx(x0, x1), sy(y0, y1);
    long a0 = sx(rng), a1 = sx(rng), b0 = sy(rng), b1 = sy(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    if (a0 == a1 || b0 == b1) continue;
    small.forbidden = {Box::open(P(a0, b0, 12), P(a1, b1, 12))};
    Point p = P(coord(rng), coord(rng), 12);
    ++cases;
    if (region_classify(small, p) == RegionClass::Removed) CHECK(region_classify(big, p) == RegionClass::Removed);
    if (region_classify(big, p) == RegionClass::Inside) CHECK(region_classify(small, p) == RegionClass::Inside);
  }
  CHECK(cases >= 400);
}

TEST_CASE("expression evaluation is exact") {
  ExprP m = ex::max({ex::var(0), ex::var(1)});
  CHECK(eval_expr(*m, Point{q(3, 10), q(7, 10)}) == q(7, 10));
  CHECK(eval_expr(*ex::min({ex::var(0), ex::var(1)}), Point{q(3, 10), q(7, 10)}) == q(3, 10));
  CHECK(eval_expr(*ex::lin({q(2), q(-1)}, q(1, 3)), Point{q(1, 2), q(1, 4)}) == q(13, 12));
  CHECK(eval_expr(*ex::interp(ex::var(0), ex::cst(q(1)), 1), Point{q(1, 4), q(1, 2)}) == q(5, 8));
  CHECK(expr_arity(*ex::lin({q(0), q(0), q(1)}, q(0))) == 3);
  CHECK_THROWS_AS(eval_expr(*ex::var(2), Point{q(0)}), DimensionError);
}

TEST_CASE("piecewise expressions agree at breakpoints and reject conflicts") {
  // |x - 1/2| + x style kink written as two cases sharing x = 1/2.
  ExprP pw = ex::piecewise({{{ex::axis(1, 0, Rel::Le, q(1, 2))}, ex::lin({q(2)}, q(0))},
                            {{ex::axis(1, 0, Rel::Ge, q(1, 2))}, ex::cst(q(1))}});
  CHECK(eval_expr(*pw, Point{q(1, 2)}) == q(1));
  CHECK(eval_expr(*pw, Point{q(1, 4)}) == q(1, 2));
  ExprP bad = ex::piecewise({{{ex::axis(1, 0, Rel::Le, q(1, 2))}, ex::cst(q(0))},
                             {{ex::axis(1, 0, Rel::Ge, q(1, 2))}, ex::cst(q(1))}});
  CHECK_THROWS_AS(eval_expr(*bad, Point{q(1, 2)}), InconsistentPiecewiseError);
  ExprP partial = ex::piecewise({{{ex::axis(1, 0, Rel::Lt, q(1, 2))}, ex::cst(q(0))}});
  CHECK_THROWS_AS(eval_expr(*partial, Point{q(3, 4)}), DomainError);
}

TEST_CASE("preset F1 and F2 values") {
  CHECK(eval_pl(preset_map("F1"), Point{q(2, 3)}) == Point{q(1)});
  CHECK(eval_pl(preset_map("F2F1"), Point{q(1, 3)}) == Point{q(0)});
  CHECK(eval_pl(preset_map("F2F1"), Point{q(0)}) == Point{q(0)});
  CHECK(eval_pl(preset_map("F2F1"), Point{q(1)}) == Point{q(1)});
  CHECK(eval_pl(preset_map("f4"), Point{q(1, 2), q(1, 5)}) == Point{q(2, 5), q(1, 5)});
  CHECK(eval_pl(preset_map("dX-h"), Point{q(1, 4), q(1, 2)}) == Point{q(1, 2), q(1, 2)});
  CHECK_THROWS_AS(eval_pl(preset_map("max"), Point{q(2), q(0)}), DomainError);
  CHECK_THROWS_AS(preset_map("no-such-map"), UnknownNameError);
}

TEST_CASE("eval agrees with both adjacent pieces at breakpoints") {
  // At every breakpoint of a piecewise map, the limit from either side is
  // the value of the neighbouring affine piece.
  PLMap f2f1 = preset_map("F2F1");
  for (long k = 0; k <= 30; ++k) {
    Rat x = q(k, 30);
    Rat v = eval_pl(f2f1, Point{x})[0];
    Rat eps = q(1, 100000);
    if (k > 0) {
      Rat l = eval_pl(f2f1, Point{x - eps})[0];
      Rat l2 = eval_pl(f2f1, Point{x - eps - eps})[0];
      CHECK(v - l == l - l2);  // affine continuation of the left piece
    }
    if (k < 30) {
      Rat r = eval_pl(f2f1, Point{x + eps})[0];
      Rat r2 = eval_pl(f2f1, Point{x + eps + eps})[0];
      CHECK(r - v == r2 - r);
    }
  }
}

TEST_CASE("eval is deterministic") {
  PLMap f = preset_map("swiss-f");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(0, 20);
  int done = 0;
  for (int i = 0; i < 1000; ++i) {
    Point p = P(c(rng), c(rng), 20);
    if (!f.domain->contains(p)) continue;
    CHECK(eval_pl(f, p) == eval_pl(f, p));
    ++done;
  }
  CHECK(done > 100);
}

TEST_CASE("exact simplex solves small programs") {
  // minimise -x - y subject to x + y + s = 1.
  LPResult r = lp_minimize({{q(1), q(1), q(1)}}, {q(1)}, {q(-1), q(-1), q(0)});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == q(-1));
  LPResult inf = lp_minimize({{q(1)}}, {q(-1)}, {q(1)});
  CHECK(inf.status == LPStatus::Infeasible);
  LPResult unb = lp_minimize({{q(1), q(-1)}}, {q(0)}, {q(-1), q(0)});
  CHECK(unb.status == LPStatus::Unbounded);
}
