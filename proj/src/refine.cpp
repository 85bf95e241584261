#include <algorithm>
#include <deque>

#include "ditopo/errors.hpp"
#include "ditopo/plmaps.hpp"

namespace ditopo {

namespace {

// value = P(x) + t Q(x) over the domain coordinates x.
struct PQ {
  Lin P, Q;
};

struct Resolved {
  bool split = false;
  Lin hyper;
  PQ val;
};

Resolved need_split(const Lin& h) {
  Resolved r;
  r.split = true;
  r.hyper = h;
  return r;
}

Resolved value(PQ v) {
  Resolved r;
  r.val = std::move(v);
  return r;
}

bool same_on_cell(const PQ& a, const PQ& b, const Cell& c) {
  for (const auto& v : c.verts)
    if (a.P.eval(v) != b.P.eval(v) || a.Q.eval(v) != b.Q.eval(v)) return false;
  return true;
}

class Resolver {
 public:
  Resolver(const Cell& cell, const std::vector<PQ>& inputs, std::size_t n)
      : cell_(cell), inputs_(inputs), n_(n), centre_(cell.centroid()) {}

  Resolved resolve(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Var:
        if (e.index >= inputs_.size()) throw DimensionError("variable index out of range");
        return value(inputs_[e.index]);
      case Expr::Kind::Const:
        return value(PQ{Lin::constant(n_, e.value), Lin::constant(n_, Rat(0))});
      case Expr::Kind::Affine: {
        if (e.coeffs.size() > inputs_.size()) throw DimensionError("affine expression arity exceeds input");
        PQ acc{Lin::constant(n_, e.value), Lin::constant(n_, Rat(0))};
        for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
          if (e.coeffs[i].is_zero()) continue;
          acc.P = acc.P + inputs_[i].P.scaled(e.coeffs[i]);
          acc.Q = acc.Q + inputs_[i].Q.scaled(e.coeffs[i]);
        }
        for (const auto& [k, sub] : e.terms) {
          auto r = resolve(*sub);
          if (r.split) return r;
          acc.P = acc.P + r.val.P.scaled(k);
          acc.Q = acc.Q + r.val.Q.scaled(k);
        }
        return value(acc);
      }
      case Expr::Kind::Max:
      case Expr::Kind::Min: {
        std::vector<PQ> vals;
        for (const auto& a : e.args) {
          auto r = resolve(*a);
          if (r.split) return r;
          if (!r.val.Q.is_constant() || !r.val.Q.c.is_zero())
            throw UnsupportedError("max/min arguments must not depend on the homotopy parameter");
          vals.push_back(r.val);
        }
        for (std::size_t i = 0; i < vals.size(); ++i)
          for (std::size_t j = i + 1; j < vals.size(); ++j) {
            Lin d = vals[i].P - vals[j].P;
            auto s = signs_on(cell_, d);
            if (s.anyPos && s.anyNeg) return need_split(d);
          }
        bool isMax = e.kind == Expr::Kind::Max;
        for (std::size_t w = 0; w < vals.size(); ++w) {
          bool wins = true;
          for (std::size_t j = 0; j < vals.size() && wins; ++j) {
            auto s = signs_on(cell_, vals[w].P - vals[j].P);
            if (isMax ? s.anyNeg : s.anyPos) wins = false;
          }
          if (wins) return value(vals[w]);
        }
        throw DomainError("max/min resolution failed");
      }
      case Expr::Kind::Piecewise: {
        std::vector<std::size_t> matching;
        for (std::size_t k = 0; k < e.cases.size(); ++k) {
          bool all = true;
          for (const auto& g : e.cases[k].when) {
            if (g.coeffs.size() > inputs_.size()) throw DimensionError("guard refers to a missing variable");
            Lin h = Lin::constant(n_, g.c);
            for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
              if (g.coeffs[i].is_zero()) continue;
              if (!inputs_[i].Q.is_constant() || !inputs_[i].Q.c.is_zero())
                throw UnsupportedError("guards must not depend on the homotopy parameter");
              h = h + inputs_[i].P.scaled(g.coeffs[i]);
            }
            auto s = signs_on(cell_, h);
            if (s.anyPos && s.anyNeg) return need_split(h);
            if (!rel_holds(g.rel, h.eval(centre_))) all = false;
          }
          if (all) matching.push_back(k);
        }
        if (matching.empty()) {
          if (!e.otherwise) throw DomainError("no piecewise case applies on cell " + cell_.str());
          return resolve(*e.otherwise);
        }
        std::optional<PQ> first;
        for (auto k : matching) {
          auto r = resolve(*e.cases[k].then);
          if (r.split) return r;
          if (!first) first = r.val;
          else if (!same_on_cell(*first, r.val, cell_))
            throw InconsistentPiecewiseError("overlapping piecewise cases disagree on cell " + cell_.str());
        }
        return value(*first);
      }
      case Expr::Kind::Interp: {
        auto a = resolve(*e.from);
        if (a.split) return a;
        auto b = resolve(*e.to);
        if (b.split) return b;
        if (e.index >= inputs_.size()) throw DimensionError("interpolation parameter out of range");
        const PQ& t = inputs_[e.index];
        auto zeroQ = [](const PQ& v) { return v.Q.is_constant() && v.Q.c.is_zero(); };
        if (!zeroQ(a.val) || !zeroQ(b.val))
          throw UnsupportedError("interpolation endpoints must not depend on the homotopy parameter");
        if (!t.P.is_constant() || !t.Q.is_constant())
          throw UnsupportedError("interpolation parameter must be constant or the homotopy parameter");
        Lin diff = b.val.P - a.val.P;
        PQ r{a.val.P + diff.scaled(t.P.c), diff.scaled(t.Q.c)};
        return value(r);
      }
    }
    throw DomainError("unknown expression kind");
  }

 private:
  const Cell& cell_;
  const std::vector<PQ>& inputs_;
  std::size_t n_;
  Point centre_;
};

AffMap zero_map(std::size_t outDim, std::size_t n) {
  return AffMap(outDim, Lin::constant(n, Rat(0)));
}

}  // namespace

std::vector<Piece> refine_map(const PLMap& m, const std::vector<Cell>& cells) {
  std::size_t n = m.in_dim();
  struct Item {
    Cell cell;
    std::size_t stage;
    AffMap A;
  };
  std::deque<Item> work;
  for (const auto& c : cells) {
    if (c.ambient() != n) throw DimensionError("cell dimension does not match map domain");
    work.push_back(Item{c, 0, identity_map(n)});
  }
  std::vector<Piece> out;
  while (!work.empty()) {
    Item it = std::move(work.front());
    work.pop_front();
    if (it.stage == m.stages.size()) {
      out.push_back(Piece{it.cell, it.A, zero_map(it.A.size(), n)});
      continue;
    }
    std::vector<PQ> inputs;
    for (const auto& l : it.A) inputs.push_back(PQ{l, Lin::constant(n, Rat(0))});
    Resolver res(it.cell, inputs, n);
    AffMap next;
    bool split = false;
    for (const auto& e : m.stages[it.stage]) {
      auto r = res.resolve(*e);
      if (r.split) {
        auto parts = split_cell(it.cell, r.hyper);
        if (!parts) throw DomainError("refinement failed to split a cell");
        work.push_front(Item{parts->second, it.stage, it.A});
        work.push_front(Item{parts->first, it.stage, it.A});
        split = true;
        break;
      }
      next.push_back(r.val.P);
    }
    if (!split) work.push_front(Item{std::move(it.cell), it.stage + 1, std::move(next)});
  }
  return out;
}

std::vector<Piece> refine_homotopy(const Homotopy& h, const std::vector<Cell>& cells) {
  std::size_t n = h.domain->dim;
  std::vector<Piece> out;
  if (h.isInterp) {
    for (const auto& pf : refine_map(*h.from, cells))
      for (const auto& pg : refine_map(*h.to, {pf.cell})) {
        Piece p{pg.cell, pf.P, {}};
        for (std::size_t i = 0; i < pf.P.size(); ++i) p.Q.push_back(pg.P[i] - pf.P[i]);
        out.push_back(std::move(p));
      }
    return out;
  }
  std::vector<PQ> inputs;
  for (std::size_t i = 0; i < n; ++i) inputs.push_back(PQ{Lin::coordinate(n, i), Lin::constant(n, Rat(0))});
  inputs.push_back(PQ{Lin::constant(n, Rat(0)), Lin::constant(n, Rat(1))});
  std::deque<Cell> work(cells.begin(), cells.end());
  while (!work.empty()) {
    Cell c = std::move(work.front());
    work.pop_front();
    Resolver res(c, inputs, n);
    Piece p{c, {}, {}};
    bool split = false;
    for (const auto& e : h.exprs) {
      auto r = res.resolve(*e);
      if (r.split) {
        auto parts = split_cell(c, r.hyper);
        if (!parts) throw DomainError("refinement failed to split a cell");
        work.push_front(parts->second);
        work.push_front(parts->first);
        split = true;
        break;
      }
      p.P.push_back(r.val.P);
      p.Q.push_back(r.val.Q);
    }
    if (!split) out.push_back(std::move(p));
  }
  return out;
}

Point Homotopy::eval(const Point& b, const Rat& t) const {
  if (isInterp) {
    Point x = from->apply_raw(b), y = to->apply_raw(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] + t * (y[i] - x[i]);
    return x;
  }
  Point u = b;
  u.push_back(t);
  Point v;
  for (const auto& e : exprs) v.push_back(eval_expr(*e, u));
  return v;
}

PieceFn as_fn(const PLMap& m) {
  PieceFn f;
  f.name = m.name;
  f.inDim = m.in_dim();
  f.outDim = m.out_dim();
  auto mp = std::make_shared<PLMap>(m);
  f.refine = [mp](const std::vector<Cell>& cells) { return refine_map(*mp, cells); };
  f.at01 = [mp](const Point& p) {
    Point v = mp->apply_raw(p);
    return std::make_pair(v, v);
  };
  return f;
}

PieceFn as_fn(const Homotopy& h) {
  PieceFn f;
  f.name = h.name;
  f.inDim = h.domain->dim;
  f.outDim = h.isInterp ? h.from->out_dim() : h.exprs.size();
  f.timeDependent = true;
  auto hp = std::make_shared<Homotopy>(h);
  f.refine = [hp](const std::vector<Cell>& cells) { return refine_homotopy(*hp, cells); };
  f.at01 = [hp](const Point& p) { return std::make_pair(hp->eval(p, Rat(0)), hp->eval(p, Rat(1))); };
  return f;
}

PieceFn restrict_fn(const PieceFn& h, bool atOne) {
  PieceFn f;
  f.name = h.name + (atOne ? "(t=1)" : "(t=0)");
  f.inDim = h.inDim;
  f.outDim = h.outDim;
  auto inner = h;
  f.refine = [inner, atOne](const std::vector<Cell>& cells) {
    auto ps = inner.refine(cells);
    for (auto& p : ps) {
      if (atOne)
        for (std::size_t i = 0; i < p.P.size(); ++i) p.P[i] = p.P[i] + p.Q[i];
      for (auto& q : p.Q) q = Lin::constant(q.a.size(), Rat(0));
    }
    return ps;
  };
  f.at01 = [inner, atOne](const Point& p) {
    auto v = inner.at01(p);
    const Point& w = atOne ? v.second : v.first;
    return std::make_pair(w, w);
  };
  return f;
}

}  // namespace ditopo
