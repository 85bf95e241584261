// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>

#include "properties.hpp"

#include "ditopo/examples.hpp"
#include "ditopo/suite.hpp"

using namespace testsupport;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

RectRegion swiss_region() {
  RectRegion r = unit_square();
  r.forbidden = {Box::open(P(1, 2, 5), P(4, 3, 5)), Box::open(P(2, 1, 5), P(3, 4, 5))};
  return r;
}

// Engine and oracle agree on path and class counts; the class count is the
// expected one.
void hom_entry(Outcome& o, const DiComplex& c, const std::string& label, const std::string& x, const std::string& y,
               std::size_t classes, std::optional<std::size_t> paths = std::nullopt) {
  HomSet h = hom_set(c, x, y);
  OracleHom orc = oracle_hom(c, x, y);
  o.require(h.class_count() == classes, label + " engine classes " + std::to_string(h.class_count()));
  o.require(orc.classes == classes, label + " oracle classes " + std::to_string(orc.classes));
  o.require(h.pathCount == orc.paths.size(), label + " path counts differ");
  if (paths) o.require(h.pathCount == *paths, label + " path count " + std::to_string(h.pathCount));
}

Outcome criterion1() {
  Outcome o;
  hom_entry(o, standard_space("dII"), "dII", V(0, 0, 1), V(1, 1, 1), 1, 6);
  RectRegion sq = unit_square();
  sq.forbidden = {Box::open(P(1, 1, 3), P(2, 2, 3))};
  hom_entry(o, build_grid_complex(sq, {uniform_lines(3), uniform_lines(3)}, false), "square-removed", V(0, 0, 1),
            V(1, 1, 1), 2, 20);
  DiComplex sw = build_grid_complex(swiss_region(), {uniform_lines(5), uniform_lines(5)}, false);
  std::string a = V(0, 0, 1), b = V(1, 1, 1), c = V(2, 2, 5), d = V(3, 3, 5);
  hom_entry(o, sw, "swiss a->b", a, b, 2);
  hom_entry(o, sw, "swiss a->c", a, c, 1);
  hom_entry(o, sw, "swiss c->b", c, b, 0);
  hom_entry(o, sw, "swiss a->d", a, d, 0);
  hom_entry(o, sw, "swiss d->b", d, b, 1);
  hom_entry(o, sw, "swiss c->d", c, d, 0);
  hom_entry(o, standard_space("dO"), "dO", "a", "b", 2);
  hom_entry(o, standard_space("dX"), "dX 0_1->1_2", "0_1", "1_2", 1);
  hom_entry(o, standard_space("dX"), "dX 0_1->0_2", "0_1", "0_2", 0);
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* n : {"dI-point", "dX-point", "dII-dI-corners", "square-removed", "swiss-flag"})
    o.require(verify_equivalence_certificate(preset_certificate(n)).pass, std::string("certificate ") + n);
  Resolver files = table_resolver(embedded_files());
  for (const char* f : {"swiss-flag.cert.json", "dii-di-corners.cert.json"})
    o.require(verify_equivalence_certificate(certificate_from(Json(f), files)).pass, std::string("shipped ") + f);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto B = dII_incomparable();
  for (long i = 0; i <= 4; ++i)
    for (long k = 0; k <= 4; ++k)
      o.require(equivalence_obstruction(B, dI_marked(point_str(Point{q(i, 4)}), point_str(Point{q(k, 4)}))).obstruction,
                "dII incomparable vs dI marking " + std::to_string(i) + "," + std::to_string(k));
  auto X = dX_endpoints();
  std::size_t hits = 0;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c)
        for (long d = 0; d <= 4; ++d) hits += equivalence_obstruction(X, dI_four({a, b, c, d})).obstruction;
  o.require(hits == 625, "dX endpoints vs dI: " + std::to_string(hits) + "/625");
  CheckVerdict s0 = verify_equivalence_certificate(preset_certificate("dI-point-S0"));
  o.require(!s0.pass && s0.premise == "structure map", "dI vs point rel S0 structure map failure");
  return o;
}

Outcome criterion4() {
  Outcome o;
  AttachmentExample ex = build_attachment_example();
  o.require(hom_set(ex.B, ex.a1, ex.b2).pathCount == 0, "hom(a1,b2) empty in B");
  o.require(hom_set(ex.C, ex.induced.vmap.at(ex.a1), ex.induced.vmap.at(ex.b2)).pathCount > 0,
            "hom(a1,b2) nonempty in C");
  std::size_t changed = 0;
  bool right = false;
  for (const auto& row : ex.diff)
    if (row.emptinessChanged()) {
      ++changed;
      right = row.from == ex.a1 && row.to == ex.b2;
    }
  o.require(changed == 1 && right, "hom_diff reports exactly (a1,b2)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (long n : {4, 5, 6}) {
    ZModel z = build_z_model(n);
    for (long s = 0; s <= n; ++s)
      for (long t = 0; t <= n; ++t)
        o.require((hom_set(z.Z, z.p0(s), z.p1(t)).pathCount > 0) == (s == t),
                  "Z law n=" + std::to_string(n) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
    for (long a = 0; a <= n; ++a)
      for (long b = a + 1; b <= n; ++b) {
        ZPushout zp = push_z_along_collapse(z, a, b);
        o.require(hom_set(zp.pushout.space, zp.p0a, zp.p1b).pathCount > 0,
                  "Z' dipath n=" + std::to_string(n) + " [" + std::to_string(a) + "," + std::to_string(b) + "]");
      }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::size_t n = 1000;
  std::vector<PropertyResult> rs = {prop_order_axioms(101, n),        prop_dihomotopy_equivalence(202, n),
                                    prop_functoriality(303, n),       prop_fast_implies_general(404, n),
                                    prop_certificate_consistency(505, n), prop_refinement_invariance(606, n)};
  for (const auto& r : rs) {
    o.notes.push_back(r.name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
                      " failures (" + r.note + ")");
    o.require(r.ok(n), r.name + (r.firstFailure.empty() ? "" : ": " + r.firstFailure));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::string first = dump_json(suite_json(run_paper_suite()));
  std::string second = dump_json(suite_json(run_paper_suite()));
  o.require(first == second, "suite reports differ between runs");
  o.require(suite_passed(run_paper_suite()), "suite rows fail");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hom-set table matches the brute-force oracle", criterion1},
      {"certificate suite verifies exactly", criterion2},
      {"obstruction suite", criterion3},
      {"attachment pushout counterexample", criterion4},
      {"non-discrete context example", criterion5},
      {"property suites (1000 seeded cases each)", criterion6},
      {"determinism of the example suite", criterion7},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
