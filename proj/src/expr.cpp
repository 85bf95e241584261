#include "ditopo/expr.hpp"

#include <algorithm>

#include "ditopo/errors.hpp"

namespace ditopo {

const char* to_string(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Eq: return "==";
  }
  return "?";
}

Rel parse_rel(const std::string& s) {
  if (s == "<=") return Rel::Le;
  if (s == "<") return Rel::Lt;
  if (s == ">=") return Rel::Ge;
  if (s == ">") return Rel::Gt;
  if (s == "==" || s == "=") return Rel::Eq;
  throw ParseError("unknown relation '" + s + "'");
}

bool rel_holds(Rel r, const Rat& v) {
  switch (r) {
    case Rel::Le: return v.sign() <= 0;
    case Rel::Lt: return v.sign() < 0;
    case Rel::Ge: return v.sign() >= 0;
    case Rel::Gt: return v.sign() > 0;
    case Rel::Eq: return v.sign() == 0;
  }
  return false;
}

bool Guard::holds(const Point& u) const {
  if (coeffs.size() > u.size()) throw DimensionError("guard refers to a missing variable");
  Rat v = c;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * u[i];
  return rel_holds(rel, v);
}

namespace ex {

ExprP var(std::size_t i) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  e->index = i;
  return e;
}

ExprP cst(const Rat& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Const;
  e->value = v;
  return e;
}

ExprP lin(std::vector<Rat> coeffs, const Rat& c) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Affine;
  e->coeffs = std::move(coeffs);
  e->value = c;
  return e;
}

ExprP sum(std::vector<std::pair<Rat, ExprP>> terms, const Rat& c) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Affine;
  e->terms = std::move(terms);
  e->value = c;
  return e;
}

ExprP max(std::vector<ExprP> args) {
  if (args.empty()) throw DomainError("max of no arguments");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Max;
  e->args = std::move(args);
  return e;
}

ExprP min(std::vector<ExprP> args) {
  if (args.empty()) throw DomainError("min of no arguments");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Min;
  e->args = std::move(args);
  return e;
}

ExprP piecewise(std::vector<Case> cases, ExprP otherwise) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Piecewise;
  e->cases = std::move(cases);
  e->otherwise = std::move(otherwise);
  return e;
}

ExprP interp(ExprP from, ExprP to, std::size_t t) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Interp;
  e->from = std::move(from);
  e->to = std::move(to);
  e->index = t;
  return e;
}

Guard guard(std::vector<Rat> coeffs, const Rat& c, Rel rel) {
  return Guard{std::move(coeffs), c, rel};
}

Guard axis(std::size_t n, std::size_t i, Rel rel, const Rat& v) {
  std::vector<Rat> a(n);
  a[i] = 1;
  return Guard{a, -v, rel};
}

}  // namespace ex

Rat eval_expr(const Expr& e, const Point& u) {
  switch (e.kind) {
    case Expr::Kind::Var:
      if (e.index >= u.size()) throw DimensionError("variable index out of range");
      return u[e.index];
    case Expr::Kind::Const:
      return e.value;
    case Expr::Kind::Affine: {
      if (e.coeffs.size() > u.size()) throw DimensionError("affine expression arity exceeds input");
      Rat s = e.value;
      for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += e.coeffs[i] * u[i];
      for (const auto& [k, sub] : e.terms) s += k * eval_expr(*sub, u);
      return s;
    }
    case Expr::Kind::Max:
    case Expr::Kind::Min: {
      Rat best = eval_expr(*e.args[0], u);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Rat v = eval_expr(*e.args[i], u);
        best = e.kind == Expr::Kind::Max ? rmax(best, v) : rmin(best, v);
      }
      return best;
    }
    case Expr::Kind::Piecewise: {
      bool found = false;
      Rat val;
      for (std::size_t k = 0; k < e.cases.size(); ++k) {
        const auto& cs = e.cases[k];
        if (!std::all_of(cs.when.begin(), cs.when.end(), [&](const Guard& g) { return g.holds(u); }))
          continue;
        Rat v = eval_expr(*cs.then, u);
        if (found && v != val)
          throw InconsistentPiecewiseError("overlapping cases disagree at " + point_str(u));
        found = true;
        val = v;
      }
      if (found) return val;
      if (e.otherwise) return eval_expr(*e.otherwise, u);
      throw DomainError("no piecewise case applies at " + point_str(u));
    }
    case Expr::Kind::Interp: {
      if (e.index >= u.size()) throw DimensionError("interpolation parameter out of range");
      const Rat& t = u[e.index];
      return (Rat(1) - t) * eval_expr(*e.from, u) + t * eval_expr(*e.to, u);
    }
  }
  return Rat(0);
}

std::size_t expr_arity(const Expr& e) {
  std::size_t n = 0;
  switch (e.kind) {
    case Expr::Kind::Var: return e.index + 1;
    case Expr::Kind::Const: return 0;
    case Expr::Kind::Affine:
      n = e.coeffs.size();
      for (const auto& t : e.terms) n = std::max(n, expr_arity(*t.second));
      return n;
    case Expr::Kind::Max:
    case Expr::Kind::Min:
      for (const auto& a : e.args) n = std::max(n, expr_arity(*a));
      return n;
    case Expr::Kind::Piecewise:
      for (const auto& c : e.cases) {
        for (const auto& g : c.when) n = std::max(n, g.coeffs.size());
        n = std::max(n, expr_arity(*c.then));
      }
      if (e.otherwise) n = std::max(n, expr_arity(*e.otherwise));
      return n;
    case Expr::Kind::Interp:
      return std::max({e.index + 1, expr_arity(*e.from), expr_arity(*e.to)});
  }
  return n;
}

std::size_t PLMap::out_dim() const {
  if (stages.empty()) return in_dim();
  return stages.back().size();
}

Point PLMap::apply_raw(const Point& p) const {
  Point u = p;
  for (const auto& st : stages) {
    Point v;
    v.reserve(st.size());
    for (const auto& e : st) v.push_back(eval_expr(*e, u));
    u = std::move(v);
  }
  return u;
}

Point eval_pl(const PLMap& m, const Point& p) {
  if (m.domain) {
    if (p.size() != m.domain->dim) throw DimensionError("point dimension does not match map domain");
    if (!m.domain->contains(p)) throw DomainError(point_str(p) + " lies outside the domain of " + m.name);
  }
  return m.apply_raw(p);
}

PLMap identity_plmap(PLSpaceP space) {
  PLMap m;
  m.name = "id";
  m.domain = space;
  m.codomain = space;
  return m;
}

PLMap compose_plmaps(const PLMap& b, const PLMap& a) {
  PLMap m;
  m.name = b.name + " o " + a.name;
  m.domain = a.domain;
  m.codomain = b.codomain;
  m.stages = a.stages;
  for (const auto& s : b.stages) m.stages.push_back(s);
  return m;
}

}  // namespace ditopo
