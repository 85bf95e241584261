#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ditopo/geometry.hpp"

namespace ditopo {

enum class Rel { Le, Lt, Ge, Gt, Eq };
const char* to_string(Rel r);
Rel parse_rel(const std::string& s);
bool rel_holds(Rel r, const Rat& v);

// Linear guard: coeffs . u + c  REL  0.
struct Guard {
  std::vector<Rat> coeffs;
  Rat c;
  Rel rel = Rel::Ge;
  bool holds(const Point& u) const;
};

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Case {
  std::vector<Guard> when;
  ExprP then;
};

struct Expr {
  enum class Kind { Var, Const, Affine, Max, Min, Piecewise, Interp };
  Kind kind = Kind::Const;
  std::size_t index = 0;                     // Var, Interp (parameter variable)
  Rat value;                                 // Const; constant term of Affine
  std::vector<Rat> coeffs;                   // Affine: direct coefficients on variables
  std::vector<std::pair<Rat, ExprP>> terms;  // Affine: weighted subexpressions
  std::vector<ExprP> args;                   // Max, Min
  std::vector<Case> cases;                   // Piecewise
  ExprP otherwise;                           // Piecewise (optional)
  ExprP from, to;                            // Interp: (1 - t) from + t to
};

namespace ex {
ExprP var(std::size_t i);
ExprP cst(const Rat& v);
// coeffs . u + c
ExprP lin(std::vector<Rat> coeffs, const Rat& c);
ExprP sum(std::vector<std::pair<Rat, ExprP>> terms, const Rat& c = Rat(0));
ExprP max(std::vector<ExprP> args);
ExprP min(std::vector<ExprP> args);
ExprP piecewise(std::vector<Case> cases, ExprP otherwise = nullptr);
ExprP interp(ExprP from, ExprP to, std::size_t t);
Guard guard(std::vector<Rat> coeffs, const Rat& c, Rel rel);
// Convenience for axis guards: u_i REL v.
Guard axis(std::size_t n, std::size_t i, Rel rel, const Rat& v);
}  // namespace ex

// Exact evaluation. Throws DomainError when a piecewise expression has no
// applicable case, InconsistentPiecewiseError when applicable cases
// disagree, DimensionError on a variable outside the input.
Rat eval_expr(const Expr& e, const Point& u);
// Largest variable index referenced plus one.
std::size_t expr_arity(const Expr& e);

// A coordinatewise map given by a sequence of stages; stage k consumes the
// output of stage k-1.
using Stage = std::vector<ExprP>;

struct PLMap {
  std::string name;
  PLSpaceP domain;
  PLSpaceP codomain;
  std::vector<Stage> stages;

  std::size_t in_dim() const { return domain ? domain->dim : 0; }
  std::size_t out_dim() const;
  // Evaluation without the domain membership test.
  Point apply_raw(const Point& p) const;
};

// Exact evaluation at a domain point. Throws DomainError outside the domain.
Point eval_pl(const PLMap& m, const Point& p);

PLMap identity_plmap(PLSpaceP space);
// Applies a first, then b.
PLMap compose_plmaps(const PLMap& b, const PLMap& a);

}  // namespace ditopo
