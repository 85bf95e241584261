#pragma once

// Randomised property checks shared by the property test suite and the
// acceptance binary. Each check runs at least `minCases` seeded cases and
// reports how many of them violated the property.

#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

#include "ditopo/plmaps.hpp"

namespace testsupport {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string firstFailure;
  std::string note;

  void fail(const std::string& what) {
    if (failures++ == 0) firstFailure = what;
  }
  bool ok(std::size_t minCases) const { return failures == 0 && cases >= minCases; }
};

// ---------------------------------------------------------------------------
// Partial-order axioms for compare_points.

inline PropertyResult prop_order_axioms(std::uint64_t seed, std::size_t minCases) {
  PropertyResult r{"compare_points is a partial order"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-3, 6), den(1, 3), dimD(1, 3), coin(0, 3);
  auto rnd = [&](std::size_t d) {
    Point p;
    for (std::size_t i = 0; i < d; ++i) p.push_back(Rat(num(rng), den(rng)));
    return p;
  };
  // Nudges p upward or leaves coordinates alone so comparable pairs are common.
  auto above = [&](const Point& p) {
    Point q = p;
    for (auto& x : q)
      if (coin(rng) == 0) x += Rat(num(rng) < 0 ? 0 : 1, den(rng));
    return q;
  };
  while (r.cases < minCases) {
    std::size_t d = static_cast<std::size_t>(dimD(rng));
    Point a = rnd(d);
    Point b = coin(rng) < 2 ? above(a) : rnd(d);
    Point c = coin(rng) < 2 ? above(b) : rnd(d);
    ++r.cases;
    auto rel = compare_points(a, b);
    bool ab = leq(a, b), ba = leq(b, a);
    std::ostringstream w;
    w << point_str(a) << " " << point_str(b) << " " << point_str(c);
    if (!leq(a, a) || compare_points(a, a) != OrderRelation::Equal) r.fail("reflexivity " + w.str());
    if (ab && ba && a != b) r.fail("antisymmetry " + w.str());
    if (ab && leq(b, c) && !leq(a, c)) r.fail("transitivity " + w.str());
    OrderRelation expect = ab && ba   ? OrderRelation::Equal
                           : ab       ? OrderRelation::LessEq
                           : ba       ? OrderRelation::GreaterEq
                                      : OrderRelation::Incomparable;
    if (rel != expect) r.fail("classification " + w.str());
    // Independent componentwise reference.
    bool ref = true;
    for (std::size_t i = 0; i < d; ++i) ref = ref && a[i] <= b[i];
    if (ref != ab) r.fail("componentwise reference " + w.str());
  }
  return r;
}

// ---------------------------------------------------------------------------
// dihomotopic is an equivalence relation, and its classes are the oracle's.

namespace detail {

struct PathPool {
  RandomGrid g;
  std::string x, y;
  HomSet h;
};

// A random grid and a vertex pair joined by between 2 and 400 dipaths.
inline bool pick_pool(std::mt19937_64& rng, PathPool& out, long kMax = 3) {
  std::bernoulli_distribution tri(0.3);
  out.g = random_grid(rng, 1, kMax, 0.3, tri(rng));
  const auto& c = out.g.cx;
  std::uniform_int_distribution<std::size_t> pick(0, c.vertices.size() - 1);
  for (int tries = 0; tries < 20; ++tries) {
    const auto& a = c.vertices[pick(rng)];
    const auto& b = c.vertices[pick(rng)];
    double n = path_count(c, a.id, b.id);
    if (a.id == b.id || n < 2 || n > 400) continue;
    out.x = a.id;
    out.y = b.id;
    out.h = hom_set(c, a.id, b.id);
    return true;
  }
  return false;
}

}  // namespace detail

inline PropertyResult prop_dihomotopy_equivalence(std::uint64_t seed, std::size_t minCases) {
  PropertyResult r{"dihomotopic is an equivalence relation"};
  std::mt19937_64 rng(seed);
  std::size_t pools = 0;
  while (r.cases < minCases) {
    detail::PathPool pool;
    if (!detail::pick_pool(rng, pool)) continue;
    ++pools;
    const auto& c = pool.g.cx;
    OracleHom o = oracle_hom(c, pool.x, pool.y);
    if (o.paths.size() != pool.h.paths.size() || o.classes != pool.h.class_count())
      r.fail("oracle disagrees on " + pool.x + " -> " + pool.y);
    std::uniform_int_distribution<std::size_t> pick(0, pool.h.paths.size() - 1);
    for (int t = 0; t < 8; ++t) {
      const Dipath& p = pool.h.paths[pick(rng)];
      const Dipath& q = pool.h.paths[pick(rng)];
      const Dipath& s = pool.h.paths[pick(rng)];
      ++r.cases;
      bool pq = dihomotopic(c, p, q), qp = dihomotopic(c, q, p);
      bool qs = dihomotopic(c, q, s), ps = dihomotopic(c, p, s);
      std::string w = pool.x + " -> " + pool.y;
      if (!dihomotopic(c, p, p)) r.fail("reflexivity " + w);
      if (pq != qp) r.fail("symmetry " + w);
      if (pq && qs && !ps) r.fail("transitivity " + w);
      // Agreement with the oracle's union-find partition.
      auto oc = [&](const Dipath& d) {
        auto ids = path_ids(c, d);
        for (std::size_t i = 0; i < o.paths.size(); ++i)
          if (o.paths[i] == ids) return o.classOf[i];
        return -1;
      };
      if (pq != (oc(p) == oc(q))) r.fail("oracle partition " + w);
    }
  }
  r.note = std::to_string(pools) + " random complexes";
  return r;
}

// ---------------------------------------------------------------------------
// Functoriality: dihomotopic paths have dihomotopic images under every
// combinatorial map that passes the 2-cell check.

namespace detail {

struct MapInstance {
  DiComplex target;
  CombMap f;
  std::string kind;
};

inline MapInstance random_map(std::mt19937_64& rng, const RandomGrid& g) {
  std::uniform_int_distribution<int> kindD(0, 2);
  int kind = kindD(rng);
  MapInstance m;
  std::map<std::string, std::string> vm;
  if (kind == 0) {
    // Inclusion into the same grid with some holes filled back in.
    RectRegion fewer = g.region;
    std::bernoulli_distribution keep(0.5);
    std::vector<Box> kept;
    for (const auto& b : fewer.forbidden)
      if (keep(rng)) kept.push_back(b);
    fewer.forbidden = kept;
    m.target = build_grid_complex(fewer, {uniform_lines(g.k), uniform_lines(g.k)}, false);
    for (const auto& v : g.cx.vertices) vm[v.id] = v.id;
    m.kind = "inclusion";
  } else if (kind == 1) {
    // Refinement of every grid cell into four.
    m.target = build_grid_complex(g.region, {uniform_lines(2 * g.k), uniform_lines(2 * g.k)}, false);
    for (const auto& v : g.cx.vertices) vm[v.id] = v.id;
    m.kind = "refinement";
  } else {
    // Monotone vertex map onto a subdivided interval: (i, j) -> a_i + b_j.
    std::uniform_int_distribution<long> step(0, 2);
    std::vector<long> a{0}, b{0};
    for (long i = 0; i < g.k; ++i) a.push_back(a.back() + step(rng));
    for (long j = 0; j < g.k; ++j) b.push_back(b.back() + step(rng));
    long L = std::max<long>(1, a.back() + b.back());
    RectRegion line;
    line.outer = Box::closed(Point{Rat(0)}, Point{Rat(1)});
    m.target = build_grid_complex(line, {uniform_lines(L)}, false);
    for (const auto& v : g.cx.vertices) {
      const Point& p = *v.coords;
      long i = (p[0] * Rat(g.k)).num().get_si(), j = (p[1] * Rat(g.k)).num().get_si();
      vm[v.id] = point_str(Point{Rat(a[i] + b[j], L)});
    }
    m.kind = "interval";
  }
  m.f = route_vertex_map(g.cx, m.target, vm);
  return m;
}

}  // namespace detail

inline PropertyResult prop_functoriality(std::uint64_t seed, std::size_t minCases) {
  PropertyResult r{"combinatorial maps preserve dihomotopy"};
  std::mt19937_64 rng(seed);
  std::size_t maps = 0, rejected = 0;
  while (r.cases < minCases) {
    detail::PathPool pool;
    if (!detail::pick_pool(rng, pool)) continue;
    detail::MapInstance m;
    try {
      m = detail::random_map(rng, pool.g);
      check_respects_cells(m.f, pool.g.cx, m.target);
    } catch (const NotAFunctorError&) {
      ++rejected;
      continue;
    }
    ++maps;
    const auto& c = pool.g.cx;
    std::uniform_int_distribution<std::size_t> pick(0, pool.h.paths.size() - 1);
    for (int t = 0; t < 12; ++t) {
      const Dipath& p = pool.h.paths[pick(rng)];
      const Dipath& q = pool.h.paths[pick(rng)];
      if (pool.h.class_of(p) != pool.h.class_of(q)) continue;
      ++r.cases;
      Dipath ip = image_path(m.f, c, m.target, p), iq = image_path(m.f, c, m.target, q);
      if (!dihomotopic(m.target, ip, iq)) r.fail(m.kind + " map breaks a class of " + pool.x + " -> " + pool.y);
    }
    InducedMap im = induced_map(m.f, c, m.target, pool.h);
    for (std::size_t i = 0; i < pool.h.paths.size(); ++i) {
      Dipath ip = image_path(m.f, c, m.target, pool.h.paths[i]);
      if (im.target.class_of(ip) != im.classMap[pool.h.classOf[i]]) r.fail("induced map is not well defined");
    }
  }
  r.note = std::to_string(maps) + " maps, " + std::to_string(rejected) + " rejected by the 2-cell check";
  return r;
}

// ---------------------------------------------------------------------------
// Fast-path acceptance of a linear interpolation implies general acceptance.

namespace detail {

inline ExprP monotone_affine(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> c(0, 3), k(-2, 2);
  std::vector<Rat> co;
  for (std::size_t i = 0; i < n; ++i) co.push_back(Rat(c(rng), 2));
  return ex::lin(co, Rat(k(rng), 4));
}

inline ExprP monotone_expr(std::mt19937_64& rng, std::size_t n, int depth) {
  std::uniform_int_distribution<int> pick(0, 2);
  int p = depth == 0 ? 0 : pick(rng);
  if (p == 0) return monotone_affine(rng, n);
  std::vector<ExprP> args{monotone_expr(rng, n, depth - 1), monotone_expr(rng, n, depth - 1)};
  return p == 1 ? ex::max(args) : ex::min(args);
}

inline PLSpaceP unit_space(std::size_t n) {
  RectRegion r;
  r.outer = Box::closed(Point(n, Rat(0)), Point(n, Rat(1)));
  return make_region_space("unit" + std::to_string(n), r, std::vector<std::vector<Rat>>(n, uniform_lines(1)));
}

inline PLSpaceP box_space(std::size_t n, long half) {
  RectRegion r;
  r.outer = Box::closed(Point(n, Rat(-half)), Point(n, Rat(half)));
  return make_region_space("box" + std::to_string(n), r,
                           std::vector<std::vector<Rat>>(n, std::vector<Rat>{Rat(-half), Rat(half)}));
}

}  // namespace detail

inline PropertyResult prop_fast_implies_general(std::uint64_t seed, std::size_t minCases) {
  PropertyResult r{"fast-path acceptance implies general acceptance"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dimD(1, 2), outD(1, 2);
  std::uniform_int_distribution<int> shape(0, 2);
  std::size_t fastAccepted = 0, generated = 0;
  // Paper presets first.
  for (const auto& name : preset_homotopy_names()) {
    Homotopy h = preset_homotopy(name);
    if (!h.isInterp) continue;
    CheckVerdict fast = check_dihomotopy(h, *h.from, *h.to, {}, true);
    ++generated;
    if (!fast.pass || fast.path != "fast") continue;
    ++fastAccepted;
    ++r.cases;
    if (!check_dihomotopy(h, *h.from, *h.to, {}, false).pass) r.fail("preset " + name);
  }
  while (r.cases < minCases) {
    std::size_t n = dimD(rng), m = outD(rng);
    PLMap f, g;
    f.name = "f";
    g.name = "g";
    f.domain = g.domain = detail::unit_space(n);
    f.codomain = g.codomain = detail::box_space(m, 16);
    Stage fs, gs;
    for (std::size_t i = 0; i < m; ++i) {
      ExprP fe = detail::monotone_expr(rng, n, 1);
      fs.push_back(fe);
      switch (shape(rng)) {
        case 0: gs.push_back(ex::max({fe, detail::monotone_expr(rng, n, 1)})); break;
        case 1: gs.push_back(ex::sum({{Rat(1), fe}}, Rat(std::uniform_int_distribution<long>(0, 3)(rng), 4))); break;
        default: gs.push_back(detail::monotone_expr(rng, n, 1)); break;  // order may fail
      }
    }
    f.stages = {fs};
    g.stages = {gs};
    Homotopy h = linear_interpolation(f, g);
    ++generated;
    CheckVerdict fast = check_dihomotopy(h, f, g, {}, true);
    if (!fast.pass || fast.path != "fast") continue;
    ++fastAccepted;
    ++r.cases;
    CheckVerdict general = check_dihomotopy(h, f, g, {}, false);
    if (!general.pass) r.fail("general path rejects: " + general.premise + " " + general.detail);
  }
  r.note = std::to_string(fastAccepted) + " fast-path acceptances out of " + std::to_string(generated) + " homotopies";
  return r;
}

// ---------------------------------------------------------------------------
// A verified certificate rel A implies no hom-set obstruction for the
// induced combinatorial map.

namespace detail {

inline Json lines_json(const std::vector<Rat>& ls) {
  Json a = Json::array();
  for (const auto& x : ls) a.push_back(rat_json(x));
  return a;
}

// Strictly increasing interior breakpoints with denominators up to 12.
inline std::vector<Rat> random_breaks(std::mt19937_64& rng, std::size_t count) {
  std::set<Rat> s;
  std::uniform_int_distribution<long> den(2, 12);
  while (s.size() < count) {
    long d = den(rng);
    long k = std::uniform_int_distribution<long>(1, d - 1)(rng);
    s.insert(Rat(k, d));
  }
  std::vector<Rat> v{Rat(0)};
  v.insert(v.end(), s.begin(), s.end());
  v.push_back(Rat(1));
  return v;
}

// Piecewise-linear map of [0,1] sending from[i] to to[i].
inline ExprP pl_interval_map(const std::vector<Rat>& from, const std::vector<Rat>& to) {
  std::vector<Case> cases;
  for (std::size_t i = 0; i + 1 < from.size(); ++i) {
    Rat slope = (to[i + 1] - to[i]) / (from[i + 1] - from[i]);
    cases.push_back({{ex::axis(1, 0, Rel::Ge, from[i]), ex::axis(1, 0, Rel::Le, from[i + 1])},
                     ex::lin({slope}, to[i] - slope * from[i])});
  }
  return ex::piecewise(cases);
}

struct CertCase {
  Certificate cert;
  std::string label;
};

inline CertCase square_to_interval(std::mt19937_64& rng, bool offDiagonal) {
  long k = std::uniform_int_distribution<long>(1, 4)(rng);
  std::uniform_int_distribution<long> idx(0, k);
  std::size_t nm = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  std::map<std::string, Point> mb, mc;
  for (std::size_t i = 0; i < nm; ++i) {
    long a = idx(rng);
    std::string name = "m" + std::to_string(i);
    long b = offDiagonal && i == 0 ? (a + 1) % (k + 1) : a;
    mb[name] = Point{Rat(a, k), Rat(b, k)};
    mc[name] = Point{Rat(std::max(a, b), k)};
  }
  RectRegion line;
  line.outer = Box::closed(Point{Rat(0)}, Point{Rat(1)});
  GeoSpaceP B = space_from(region_doc(unit_square(), Json(k), mb), no_files());
  GeoSpaceP C = space_from(region_doc(line, Json(k), mc), no_files());
  CertCase cc;
  cc.label = "dII(" + std::to_string(k) + ") to dI with " + std::to_string(nm) + " marks";
  Certificate& c = cc.cert;
  c.name = cc.label;
  c.B = B;
  c.C = C;
  c.f = PLMap{"max", B->pl, C->pl, {{ex::max({ex::var(0), ex::var(1)})}}};
  c.g = PLMap{"diag", C->pl, B->pl, {{ex::var(0), ex::var(0)}}};
  PLMap gf = compose_plmaps(c.g, c.f);
  gf.name = "diag o max";
  c.zigzagBC = {{linear_interpolation(identity_plmap(B->pl), gf), true}};
  c.zigzagBC[0].h.name = "phi";
  return cc;
}

inline CertCase interval_reparametrisation(std::mt19937_64& rng, bool broken) {
  std::size_t nb = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  std::vector<Rat> from = random_breaks(rng, nb), to = random_breaks(rng, nb);
  std::map<std::string, Point> mb, mc;
  std::uniform_int_distribution<std::size_t> pick(0, from.size() - 1);
  std::size_t nm = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  for (std::size_t i = 0; i < nm; ++i) {
    std::size_t j = pick(rng);
    std::string name = "m" + std::to_string(i);
    mb[name] = Point{from[j]};
    mc[name] = Point{to[j]};
  }
  RectRegion line;
  line.outer = Box::closed(Point{Rat(0)}, Point{Rat(1)});
  GeoSpaceP B = space_from(region_doc(line, Json::array({lines_json(from)}), mb), no_files());
  GeoSpaceP C = space_from(region_doc(line, Json::array({lines_json(to)}), mc), no_files());
  CertCase cc;
  cc.label = "dI reparametrisation with " + std::to_string(nb) + " breakpoints";
  Certificate& c = cc.cert;
  c.name = cc.label;
  c.B = B;
  c.C = C;
  c.f = PLMap{"phi", B->pl, C->pl, {{pl_interval_map(from, to)}}};
  std::vector<Rat> back = from;
  if (broken && back.size() > 2) back[1] = (back[0] + back[1]) / Rat(2);
  c.g = PLMap{"psi", C->pl, B->pl, {{pl_interval_map(to, back)}}};
  return cc;
}

}  // namespace detail

inline PropertyResult prop_certificate_consistency(std::uint64_t seed, std::size_t minCases) {
  PropertyResult r{"verified certificates never meet an obstruction"};
  std::mt19937_64 rng(seed);
  std::size_t verified = 0, rejected = 0;
  std::uniform_int_distribution<int> fam(0, 9);
  auto run = [&](const detail::CertCase& cc) {
    ++r.cases;
    CheckVerdict v = verify_equivalence_certificate(cc.cert);
    if (!v.pass) {
      ++rejected;
      return;
    }
    ++verified;
    const Certificate& c = cc.cert;
    CombMap f = induce_comb_map(c.f, c.B->cx.space, c.C->cx.space);
    if (equivalence_obstruction(c.B->cx, c.C->cx, f).obstruction) r.fail(cc.label + ": obstruction with f");
    if (equivalence_obstruction(c.B->cx, c.C->cx).obstruction) r.fail(cc.label + ": existence obstruction");
  };
  // Paper certificates whose spaces carry combinatorial models.
  for (const char* n : {"dII-dI-corners", "square-removed", "swiss-flag"}) {
    Certificate c = preset_certificate(n);
    run({c, n});
  }
  while (r.cases < minCases) {
    int f = fam(rng);
    if (f < 5)
      run(detail::square_to_interval(rng, f == 0));
    else
      run(detail::interval_reparametrisation(rng, f == 5));
  }
  r.note = std::to_string(verified) + " certificates verified, " + std::to_string(rejected) + " rejected";
  return r;
}

// ---------------------------------------------------------------------------
// Refining a grid leaves hom-set cardinalities unchanged.

namespace detail {

inline std::vector<Rat> refine_lines(const std::vector<Rat>& ls, long m) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    for (long s = 0; s < m; ++s) out.push_back(ls[i] + (ls[i + 1] - ls[i]) * Rat(s, m));
  out.push_back(ls.back());
  return out;
}

}  // namespace detail

inline PropertyResult prop_refinement_invariance(std::uint64_t seed, std::size_t minCases,
                                                 double maxPaths = 3000) {
  PropertyResult r{"hom-set sizes are invariant under grid refinement"};
  std::mt19937_64 rng(seed);
  std::size_t regions = 0;
  auto compare = [&](const RectRegion& reg, const std::vector<Rat>& lines, long m, const std::string& label,
                     std::size_t maxPairs) {
    ++regions;
    DiComplex coarse = build_grid_complex(reg, {lines, lines}, false);
    auto fl = detail::refine_lines(lines, m);
    DiComplex fine = build_grid_complex(reg, {fl, fl}, false);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& a : coarse.vertices)
      for (const auto& b : coarse.vertices)
        if (a.id != b.id && leq(*a.coords, *b.coords)) pairs.push_back({a.id, b.id});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::size_t used = 0;
    for (const auto& [a, b] : pairs) {
      if (used >= maxPairs) break;
      if (!fine.has_vertex(a) || !fine.has_vertex(b)) {
        r.fail(label + ": refined grid lost vertex");
        continue;
      }
      if (path_count(fine, a, b) > maxPaths) continue;
      ++used;
      ++r.cases;
      std::size_t cc = hom_set(coarse, a, b).class_count(), fc = hom_set(fine, a, b).class_count();
      if (cc != fc)
        r.fail(label + ": " + a + " -> " + b + " has " + std::to_string(cc) + " vs " + std::to_string(fc));
    }
  };
  RectRegion sq = unit_square();
  sq.forbidden = {Box::open(P(1, 1, 3), P(2, 2, 3))};
  RectRegion sw = unit_square();
  sw.forbidden = {Box::open(P(1, 2, 5), P(4, 3, 5)), Box::open(P(2, 1, 5), P(3, 4, 5))};
  compare(unit_square(), uniform_lines(2), 2, "dII x2", 1000);
  compare(unit_square(), uniform_lines(2), 3, "dII x3", 1000);
  compare(sq, uniform_lines(3), 2, "square-removed x2", 1000);
  compare(sq, uniform_lines(3), 3, "square-removed x3", 1000);
  compare(sw, uniform_lines(5), 2, "swiss-flag x2", 1000);
  while (r.cases < minCases) {
    RandomGrid g = random_grid(rng, 1, 4, 0.3);
    compare(g.region, uniform_lines(g.k), 2, "random k=" + std::to_string(g.k), 60);
  }
  r.note = std::to_string(regions) + " regions";
  return r;
}

}  // namespace testsupport
