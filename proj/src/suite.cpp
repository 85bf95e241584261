#include "ditopo/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ditopo/errors.hpp"
#include "ditopo/examples.hpp"

namespace ditopo {

namespace {

struct RowDef {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  std::string expected;
  std::function<std::string(const Resolver&)> compute;
};

std::string classes(std::size_t n) { return std::to_string(n) + (n == 1 ? " class" : " classes"); }

std::string hom_row(const Resolver& r, const std::string& file, const std::string& from, const std::string& to,
                    bool withPaths) {
  auto s = space_from(Json(file), r);
  const auto& cx = s->cx;
  std::string x = cx.marking.count(from) ? cx.at(from) : from;
  std::string y = cx.marking.count(to) ? cx.at(to) : to;
  HomSet h = hom_set(cx.space, x, y);
  std::string out = classes(h.class_count());
  if (withPaths) out += " / " + std::to_string(h.pathCount) + " paths";
  return out;
}

std::string verdict_str(const CheckVerdict& v) {
  if (v.pass) return v.path.empty() ? "Pass" : "Pass (" + v.path + ")";
  const CheckVerdict* f = &v;
  while (!f->stages.empty()) {
    auto it = std::find_if(f->stages.begin(), f->stages.end(), [](const CheckVerdict& s) { return !s.pass; });
    if (it == f->stages.end()) break;
    f = &*it;
  }
  return "Fail at " + f->stage + (f->premise.empty() ? "" : " (" + f->premise + ")");
}

std::string cert_row(const Resolver& r, const Json& ref) {
  return verdict_str(verify_equivalence_certificate(certificate_from(ref, r)));
}

std::string map_row(const std::string& name, OrderMode mode = OrderMode::Local) {
  CheckVerdict v = check_dimap(preset_map(name), mode);
  return v.pass ? "Pass" : "Fail (" + v.premise + ")";
}

std::string changed_pairs(const std::vector<HomDiffRow>& rows) {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : rows) {
    if (!d.emptinessChanged()) continue;
    if (!first) os << "; ";
    first = false;
    os << "hom(" << d.from << "," << d.to << ") " << d.before << " -> " << (d.after > 0 ? ">=1" : "0");
  }
  return first ? "none" : os.str();
}

std::vector<RowDef> row_defs() {
  std::vector<RowDef> rows;
  auto add = [&](std::string id, std::vector<std::string> tags, std::string desc, std::string expected,
                 std::function<std::string(const Resolver&)> f) {
    rows.push_back({std::move(id), std::move(tags), std::move(desc), std::move(expected), std::move(f)});
  };

  // Hom-set table.
  add("hom/dII-grid", {"homsets"}, "dII on the 2x2 grid, (0,0) to (1,1)", "1 class / 6 paths",
      [](const Resolver& r) { return hom_row(r, "dII-grid.space.json", "(0,0)", "(1,1)", true); });
  add("hom/square-removed", {"homsets"}, "unit square minus the central third, corner to corner",
      "2 classes / 20 paths",
      [](const Resolver& r) { return hom_row(r, "square-removed.space.json", "a", "b", true); });
  for (auto [x, y, n] : std::vector<std::tuple<const char*, const char*, std::size_t>>{
           {"a", "b", 2}, {"a", "c", 1}, {"c", "b", 0}, {"a", "d", 0}, {"d", "b", 1}, {"c", "d", 0}}) {
    std::string xs = x, ys = y;
    add("hom/swiss-flag/" + xs + ys, {"homsets", "swiss-flag"}, "Swiss flag on the fifths grid, " + xs + " to " + ys,
        classes(n), [xs, ys](const Resolver& r) { return hom_row(r, "swiss-flag.space.json", xs, ys, false); });
  }
  add("hom/dO", {"homsets"}, "two parallel edges a to b", "2 classes",
      [](const Resolver& r) { return hom_row(r, "dO.space.json", "a", "b", false); });
  add("hom/dX/0_1-1_2", {"homsets"}, "dX, (0)_1 to (1)_2", "1 class",
      [](const Resolver& r) { return hom_row(r, "dX.space.json", "0_1", "1_2", false); });
  add("hom/dX/0_1-0_2", {"homsets"}, "dX, (0)_1 to (0)_2", "0 classes",
      [](const Resolver& r) { return hom_row(r, "dX.space.json", "0_1", "0_2", false); });

  // Validation.
  add("validate/dS1", {"validation"}, "directed circle is only a local pospace", "acyclic=false, 1 cycle",
      [](const Resolver& r) {
        auto v = validate_complex(space_from(Json("dS1.space.json"), r)->cx.space);
        return std::string("acyclic=") + (v.acyclic ? "true" : "false") + ", " + std::to_string(v.cycles.size()) +
               (v.cycles.size() == 1 ? " cycle" : " cycles");
      });
  add("validate/dII-grid", {"validation"}, "dII grid is a loop-free, face-closed, monotone embedding",
      "acyclic, faceClosed, embeddingMonotone", [](const Resolver& r) {
        auto v = validate_complex(space_from(Json("dII-grid.space.json"), r)->cx.space);
        std::string out;
        out += v.acyclic ? "acyclic" : "cyclic";
        out += v.faceClosed ? ", faceClosed" : ", not faceClosed";
        out += v.embeddingMonotone ? ", embeddingMonotone" : ", not embeddingMonotone";
        return out;
      });

  // Dimaps.
  for (const char* m : {"F1", "F2", "F2F1"})
    add(std::string("map/") + m, {"maps", "square-removed"}, std::string(m) + " on dI is a dimap", "Pass",
        [m](const Resolver&) { return map_row(m); });
  add("map/oneminus", {"maps"}, "x -> 1 - x is not a dimap", "Fail (monotonicity)",
      [](const Resolver&) { return map_row("oneminus"); });
  for (const char* m : {"f1", "f2", "f3", "f4"})
    add(std::string("map/swiss-") + m, {"maps", "swiss-flag"}, std::string("Swiss flag map ") + m + " is a dimap",
        "Pass", [m](const Resolver&) { return map_row(m); });
  add("map/swiss-f3-induced", {"maps", "swiss-flag"},
      "f3 against the order restricted from the plane (non-local order)", "Fail (monotonicity)",
      [](const Resolver&) { return map_row("f3", OrderMode::Induced); });

  // Dihomotopies.
  add("homotopy/dI-H", {"homotopies"}, "interpolation from Id to the constant 1 on dI", "Pass (fast)",
      [](const Resolver&) {
        Homotopy h = preset_homotopy("dI-H");
        return verdict_str(check_dihomotopy(h, *h.from, *h.to));
      });
  add("homotopy/dI-H-general", {"homotopies"}, "same interpolation through the general check", "Pass (general)",
      [](const Resolver&) {
        Homotopy h = preset_homotopy("dI-H");
        return verdict_str(check_dihomotopy(h, *h.from, *h.to, {}, false));
      });

  // Certificates.
  add("cert/dI-point", {"certificates"}, "dI is equivalent to a point (empty context)", "Pass",
      [](const Resolver& r) { return cert_row(r, Json{{"preset", "dI-point"}}); });
  add("cert/dII-point", {"certificates"}, "dII is equivalent to a point (empty context)", "Pass",
      [](const Resolver& r) { return cert_row(r, Json{{"preset", "dII-point"}}); });
  add("cert/dX-point", {"certificates"}, "dX is equivalent to a point via h and two interpolations", "Pass",
      [](const Resolver& r) { return cert_row(r, Json{{"preset", "dX-point"}}); });
  add("cert/dii-di-corners", {"certificates"}, "dII is equivalent to dI rel the corners (shipped file)", "Pass",
      [](const Resolver& r) { return cert_row(r, Json("dii-di-corners.cert.json")); });
  add("cert/square-removed", {"certificates", "square-removed"},
      "square minus the centre is equivalent to its boundary rel the corners", "Pass",
      [](const Resolver& r) { return cert_row(r, Json{{"preset", "square-removed"}}); });
  add("cert/swiss-flag", {"certificates", "swiss-flag"},
      "Swiss flag is equivalent to its sub-complex rel a, b, c, d (shipped file)", "Pass",
      [](const Resolver& r) { return cert_row(r, Json("swiss-flag.cert.json")); });
  add("cert/swiss-flag-tampered", {"certificates", "swiss-flag"},
      "Swiss flag certificate with the direction of H2 swapped", "Fail at zigzagBC[1] H2 fwd (chain endpoint)",
      [](const Resolver& r) {
        Json c = r("swiss-flag.cert.json");
        c["zigzagBC"][1]["direction"] = "fwd";
        return cert_row(r, c);
      });

  // Obstructions.
  add("obstruction/dII-incomparable", {"obstructions"},
      "dII rel the incomparable (0,1/4), (3/4,0) against dI under every marking at quarters", "25/25 obstructed",
      [](const Resolver&) {
        auto B = dII_incomparable();
        int hits = 0, total = 0;
        for (long i = 0; i <= 4; ++i)
          for (long k = 0; k <= 4; ++k) {
            auto C = dI_marked(point_str(Point{Rat(i, 4)}), point_str(Point{Rat(k, 4)}));
            ++total;
            hits += equivalence_obstruction(B, C).obstruction;
          }
        return std::to_string(hits) + "/" + std::to_string(total) + " obstructed";
      });
  add("obstruction/dX-endpoints", {"obstructions"},
      "dX rel its four endpoints against dI under every marking at quarters", "625/625 obstructed",
      [](const Resolver&) {
        auto B = dX_endpoints();
        int hits = 0, total = 0;
        for (long a = 0; a <= 4; ++a)
          for (long b = 0; b <= 4; ++b)
            for (long c = 0; c <= 4; ++c)
              for (long d = 0; d <= 4; ++d) {
                ++total;
                hits += equivalence_obstruction(B, dI_four({a, b, c, d})).obstruction;
              }
        return std::to_string(hits) + "/" + std::to_string(total) + " obstructed";
      });
  add("obstruction/dI-point-S0", {"obstructions"}, "dI rel its endpoints against a point rel two points",
      "Fail at dI-g preserves context (structure map)",
      [](const Resolver& r) { return cert_row(r, Json{{"preset", "dI-point-S0"}}); });

  // Pushouts.
  add("pushout/b-vs-c", {"attachment"}, "attaching two copies of dO to dII and to dI (shipped glue file)",
      "hom(O1.a,O2.b) 0 -> >=1", [](const Resolver& r) {
        GlueDoc d = glue_from(Json("b-vs-c.glue.json"), r);
        GlueResult before = pushout_identify(d.main.spec), after = pushout_identify(d.compare->spec);
        std::vector<std::pair<std::string, std::string>> pairs;
        std::map<std::string, std::string> vm;
        for (const auto& [x, y] : d.main.watch) {
          pairs.push_back({before.vertexMap[x.part].at(x.id), before.vertexMap[y.part].at(y.id)});
          vm[pairs.back().first] = after.vertexMap[x.part].at(x.id);
          vm[pairs.back().second] = after.vertexMap[y.part].at(y.id);
        }
        return changed_pairs(hom_diff(before.space, after.space, pairs, vm));
      });
  add("pushout/attachment-along-max", {"attachment"}, "the same C obtained as a pushout along max: dII -> dI",
      "hom(O1.a,O2.b) 0 -> >=1", [](const Resolver&) { return changed_pairs(build_attachment_example().diff); });
  add("glue/dX-from-two-dI", {"glue"}, "two copies of dI glued at their midpoints", "isomorphic to dX",
      [](const Resolver& r) {
        GlueDoc d = glue_from(Json("dX-from-two-dI.glue.json"), r);
        bool iso = isomorphic(pushout_identify(d.main.spec).space, *d.main.expectIsomorphic);
        return std::string(iso ? "isomorphic to dX" : "not isomorphic to dX");
      });

  // Non-discrete context.
  add("z/law-n4", {"non-discrete-context"}, "in Z (n=4), hom(p0_s, p1_t) is nonempty exactly when s = t",
      "25/25 pairs agree", [](const Resolver&) {
        ZModel z = build_z_model(4);
        int ok = 0;
        for (long s = 0; s <= 4; ++s)
          for (long t = 0; t <= 4; ++t) {
            bool nonempty = hom_set(z.Z, z.p0(s), z.p1(t)).class_count() > 0;
            ok += nonempty == (s == t);
          }
        return std::to_string(ok) + "/25 pairs agree";
      });
  add("z/pushout-file", {"non-discrete-context"}, "pushout of Z along the collapse with [a,b] = [1/4,3/4] (shipped)",
      "new dipath p0_a -> p1_b", [](const Resolver& r) {
        PushoutJob job = pushout_from(Json("z-zprime.pushout.json"), r);
        PushoutResult po = pushout_along_map(job.D, job.B, job.inclusion, job.Bp, job.f, job.primeName);
        auto rows = hom_diff(job.D, po.space, job.watch, po.induced.vmap);
        bool ok = rows.size() == 1 && rows[0].before == 0 && rows[0].after > 0 && rows[0].witness;
        return std::string(ok ? "new dipath p0_a -> p1_b" : "no new dipath");
      });
  add("z/pushout-all-intervals", {"non-discrete-context"},
      "every merge interval a < b at n=4 creates a dipath p0_a -> p1_b", "10/10 intervals", [](const Resolver&) {
        ZModel z = build_z_model(4);
        int ok = 0;
        for (long a = 0; a <= 4; ++a)
          for (long b = a + 1; b <= 4; ++b) {
            ZPushout p = push_z_along_collapse(z, a, b);
            ok += hom_set(p.pushout.space, p.p0a, p.p1b).class_count() > 0;
          }
        return std::to_string(ok) + "/10 intervals";
      });

  // Pasting.
  add("pasting/collapse-maps", {"pasting"}, "B -> B' and C -> C' respect every 2-cell", "both respect cells",
      [](const Resolver&) {
        PastingExample p = build_pasting_example();
        check_respects_cells(p.fB, p.B.space, p.Bp.space);
        check_respects_cells(p.gC, p.C.space, p.Cp.space);
        return std::string("both respect cells");
      });
  add("pasting/D-vs-F", {"pasting"}, "D against its double pushout F", "NecessaryConditionsPass",
      [](const Resolver&) {
        PastingExample p = build_pasting_example();
        return equivalence_obstruction(p.D, p.F).name();
      });
  add("pasting/F-vs-G", {"pasting"}, "F against the boundary-plus-diagonal G with marks a, b, c",
      "ObstructionFound (a,c): 1 vs 3", [](const Resolver&) {
        PastingExample p = build_pasting_example();
        auto v = equivalence_obstruction(p.F, p.G);
        if (!v.obstruction) return v.name();
        return v.name() + " (" + v.a + "," + v.b + "): " + std::to_string(v.homB.classCount) + " vs " +
               std::to_string(v.homC.classCount);
      });
  add("pasting/F-vs-filled-G", {"pasting"}, "F against the solid triangulated square with the same marks",
      "NecessaryConditionsPass", [](const Resolver&) {
        PastingExample p = build_pasting_example();
        return equivalence_obstruction(p.F, p.Gfilled).name();
      });
  add("pasting/F'-vs-G'", {"pasting"}, "F' against G'", "NecessaryConditionsPass", [](const Resolver&) {
    PastingExample p = build_pasting_example();
    return equivalence_obstruction(p.Fp, p.Gp).name();
  });
  return rows;
}

bool selected(const RowDef& r, const std::optional<std::string>& only) {
  if (!only) return true;
  if (r.id.rfind(*only, 0) == 0) return true;
  return std::find(r.tags.begin(), r.tags.end(), *only) != r.tags.end();
}

}  // namespace

std::vector<std::string> suite_tags() {
  std::vector<std::string> tags;
  for (const auto& r : row_defs())
    for (const auto& t : r.tags)
      if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::vector<SuiteRow> run_paper_suite(const SuiteOptions& opt) {
  Resolver r = table_resolver(opt.files);
  std::vector<SuiteRow> out;
  for (const auto& def : row_defs()) {
    if (!selected(def, opt.only)) continue;
    SuiteRow row{def.id, def.tags, def.description, def.expected, "", false};
    try {
      row.computed = def.compute(r);
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    row.pass = row.computed == row.expected;
    out.push_back(std::move(row));
  }
  return out;
}

Json suite_json(const std::vector<SuiteRow>& rows) {
  Json j;
  j["rows"] = Json::array();
  std::size_t passed = 0;
  for (const auto& r : rows) {
    j["rows"].push_back(Json{{"id", r.id},
                             {"tags", r.tags},
                             {"description", r.description},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"status", r.pass ? "PASS" : "FAIL"}});
    passed += r.pass;
  }
  j["summary"] = Json{{"total", rows.size()}, {"passed", passed}, {"failed", rows.size() - passed}};
  return j;
}

std::string suite_table(const std::vector<SuiteRow>& rows) {
  std::size_t w = 2;
  for (const auto& r : rows) w = std::max(w, r.id.size());
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << std::string(w - r.id.size() + 2, ' ') << "expected: " << r.expected
       << " | computed: " << r.computed << "\n";
    passed += r.pass;
  }
  os << passed << "/" << rows.size() << " rows match\n";
  return os.str();
}

bool suite_passed(const std::vector<SuiteRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

Json z_pushout_document(long n, long a, long b) {
  ZModel z = build_z_model(n);
  CombMap f = z_collapse(z, a, b);
  CombMap incl;
  for (const auto& v : z.X.vertices) incl.vmap[v.id] = z.glue.vertexMap[0].at(v.id);
  for (const auto& e : z.X.edges) incl.routing[e.id] = {z.glue.edgeMap[0].at(e.id)};
  auto space = [](const DiComplex& c, const std::string& name) {
    Json j = complex_json(c);
    j["type"] = "space";
    j["name"] = name;
    return j;
  };
  Json j;
  j["type"] = "pushout";
  j["space"] = space(z.Z, "Z");
  j["sub"] = space(z.X, "X");
  j["target"] = space(z.X, "X");
  j["inclusion"] = combmap_json(incl);
  Json route;
  route["type"] = "combmap";
  route["route"]["vmap"] = f.vmap;
  route["route"]["axis"] = 0;
  j["map"] = route;
  j["primeName"] = "X'";
  j["watch"] = Json::array({Json::array({z.p0(a), z.p1(b)})});
  return j;
}

std::map<std::string, Json> generated_documents() {
  std::map<std::string, Json> docs;
  for (const auto& [name, prefix] :
       std::vector<std::pair<std::string, std::string>>{{"swiss-flag", "swiss-flag"}, {"dII-dI-corners", "dii-di-corners"}})
    for (auto& [file, doc] : export_certificate(preset_certificate(name), prefix)) docs[file] = doc;
  for (const char* s : {"dO", "dX", "dS1"}) {
    GeoSpace g;
    g.name = s;
    g.cx = mark_context(standard_space(s), discrete_context({}), {});
    Json j = space_json(g);
    docs[std::string(s) + ".space.json"] = j;
  }
  docs["z-zprime.pushout.json"] = z_pushout_document(4, 1, 3);
  return docs;
}

void corrupt_file(std::map<std::string, std::string>& files, const std::string& name) {
  auto it = files.find(name);
  if (it == files.end()) throw UnknownNameError("no embedded file '" + name + "'");
  it->second = it->second.substr(0, it->second.size() / 2);
}

}  // namespace ditopo
