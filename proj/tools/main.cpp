#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ditopo/errors.hpp"
#include "ditopo/io.hpp"
#include "ditopo/suite.hpp"
#include "ditopo/svg.hpp"

using namespace ditopo;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

// Relative output paths go below DITOPO_OUT_DIR when it is set.
fs::path output_path(const std::string& p) {
  fs::path out(p);
  if (out.is_relative())
    if (const char* dir = std::getenv("DITOPO_OUT_DIR")) return fs::path(dir) / out;
  return out;
}

void write_text(const std::string& p, const std::string& text) {
  fs::path out = output_path(p);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + out.string() + "'");
  f << text;
}

struct Loaded {
  Json doc;
  Resolver resolver;
};

Loaded load(const std::string& file) {
  fs::path p(file);
  return {read_json_file(p), file_resolver(p.has_parent_path() ? p.parent_path() : fs::path("."))};
}

std::string resolve_vertex(const ContextedComplex& cx, const std::string& name) {
  if (cx.marking.count(name)) return cx.at(name);
  cx.space.vertex(name);
  return name;
}

std::optional<std::size_t> opt_len(long v) {
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

RenderOptions render_options(double stroke, double pathWidth, const std::string& colours, bool labels) {
  RenderOptions o;
  o.strokeWidth = stroke;
  o.pathWidth = pathWidth;
  o.vertexLabels = labels;
  if (!colours.empty()) {
    o.classColors.clear();
    std::stringstream ss(colours);
    std::string c;
    while (std::getline(ss, c, ',')) o.classColors.push_back(c);
  }
  return o;
}

std::vector<std::pair<Point, Point>> rel_targets(const Json& doc) {
  std::vector<std::pair<Point, Point>> rel;
  if (doc.is_object() && doc.contains("rel"))
    for (const auto& r : doc.at("rel")) rel.push_back({point_from(r.at("point")), point_from(r.at("value"))});
  return rel;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed-topology toolkit: dipath classes, dimaps, dihomotopies and pushouts of cell complexes"};
  app.require_subcommand(1);
  int rc = kPass;

  std::string file, from, to, svg, out, order = "local", only, reportFile, corrupt, colours;
  std::string exportSpace, exportMap, exportHomotopy, exportCert, exportStandard, outDir;
  long maxLen = -1;
  bool allowLoops = false, noFast = false, labels = false, generated = false, listTags = false;
  double stroke = 1.5, pathWidth = 4.0;
  std::vector<long> zArgs;

  auto* validate = app.add_subcommand("validate", "Validate a space file");
  validate->add_option("file", file, "space document")->required();
  validate->add_flag("--allow-loops", allowLoops, "accept local pospaces with directed cycles");

  auto* homset = app.add_subcommand("homset", "Dihomotopy classes of dipaths between two vertices");
  auto* paths = app.add_subcommand("paths", "All dipaths between two vertices with their classes");
  for (auto* sc : {homset, paths}) {
    sc->add_option("file", file, "space document")->required();
    sc->add_option("--from", from, "source vertex or context name")->required();
    sc->add_option("--to", to, "target vertex or context name")->required();
    sc->add_option("--max-len", maxLen, "length bound for spaces with directed cycles");
  }
  homset->add_option("--svg", svg, "write one representative per class as SVG");

  auto* checkMap = app.add_subcommand("check-map", "Check that a PL map is a dimap");
  checkMap->add_option("file", file, "map document")->required();
  checkMap->add_option("--order", order, "local (along directed paths) or induced (restricted from R^n)")
      ->check(CLI::IsMember({"local", "induced"}));

  auto* checkHom = app.add_subcommand("check-homotopy", "Check that a homotopy is a dihomotopy");
  checkHom->add_option("file", file, "homotopy document")->required();
  checkHom->add_flag("--no-fast", noFast, "skip the interpolation fast path");

  auto* check = app.add_subcommand("check", "Verify an equivalence certificate");
  check->add_option("file", file, "certificate document")->required();

  auto* obstruct = app.add_subcommand("obstruction", "Compare hom-set cardinalities of two contexted spaces");
  std::string other;
  obstruct->add_option("first", file, "space document")->required();
  obstruct->add_option("second", other, "space document")->required();

  auto* glue = app.add_subcommand("glue", "Glue spaces along identified vertices");
  glue->add_option("file", file, "glue document")->required();
  glue->add_option("--out", out, "write the quotient complex here");

  auto* pushout = app.add_subcommand("pushout", "Pushout of a space along a map of a sub-complex");
  pushout->add_option("file", file, "pushout document")->required();
  pushout->add_option("--out", out, "write the pushout complex here");

  auto* render = app.add_subcommand("render", "Draw a 2D space as SVG");
  render->add_option("file", file, "space document")->required();
  render->add_option("--out", out, "SVG output file")->required();
  render->add_option("--from", from, "highlight class representatives from this vertex");
  render->add_option("--to", to, "highlight class representatives to this vertex");
  render->add_option("--max-len", maxLen, "length bound for spaces with directed cycles");
  for (auto* sc : {homset, render}) {
    sc->add_option("--stroke-width", stroke, "edge stroke width");
    sc->add_option("--path-width", pathWidth, "highlighted path width");
    sc->add_option("--colors", colours, "comma separated class colours");
    sc->add_flag("--labels", labels, "label every vertex");
  }

  auto* suite = app.add_subcommand("paper-suite", "Replay the shipped example suite");
  suite->add_option("--only", only, "row id prefix or tag");
  suite->add_option("--report", reportFile, "write the JSON report here");
  suite->add_option("--corrupt", corrupt, "test mode: truncate this embedded file before running");
  suite->add_flag("--list-tags", listTags, "print the available tags");

  auto* exporter = app.add_subcommand("export-preset", "Write built-in objects as documents");
  exporter->add_option("--space", exportSpace, "preset space");
  exporter->add_option("--standard", exportStandard, "standard complex (dI, dII, dX, dO, dS1, dIIgrid:k)");
  exporter->add_option("--map", exportMap, "preset map");
  exporter->add_option("--homotopy", exportHomotopy, "preset homotopy");
  exporter->add_option("--certificate", exportCert, "preset certificate (needs --out-dir)");
  exporter->add_option("--z-pushout", zArgs, "n a b: pushout of Z along the collapse on [a/n, b/n]")->expected(3);
  exporter->add_flag("--generated", generated, "all generated shipped documents (needs --out-dir)");
  exporter->add_option("--out-dir", outDir, "directory for multi-file exports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (validate->parsed()) {
      auto [doc, r] = load(file);
      auto g = space_from(doc, r);
      ValidationReport v = validate_complex(g->cx.space);
      std::cout << dump_json(validation_json(v, !v.acyclic));
      bool ok = v.faceClosed && v.embeddingMonotone && (v.acyclic || allowLoops);
      rc = ok ? kPass : kFail;
    } else if (homset->parsed() || paths->parsed()) {
      auto [doc, r] = load(file);
      auto g = space_from(doc, r);
      std::string x = resolve_vertex(g->cx, from), y = resolve_vertex(g->cx, to);
      HomSet h = hom_set(g->cx.space, x, y, opt_len(maxLen));
      if (homset->parsed()) {
        std::cout << dump_json(homset_json(g->cx.space, h));
        if (!svg.empty()) {
          HomSummary s = summarize(g->cx.space, h);
          write_text(svg, render_svg(*g, s.representatives, render_options(stroke, pathWidth, colours, labels)));
        }
      } else {
        Json j;
        j["source"] = x;
        j["target"] = y;
        j["paths"] = Json::array();
        for (std::size_t i = 0; i < h.paths.size(); ++i)
          j["paths"].push_back(Json{{"edges", path_ids(g->cx.space, h.paths[i])}, {"class", h.classOf[i]}});
        if (h.bounded) j["bounded"] = true;
        std::cout << dump_json(j);
      }
    } else if (checkMap->parsed()) {
      auto [doc, r] = load(file);
      CheckVerdict v = check_dimap(map_from(doc, r), order == "induced" ? OrderMode::Induced : OrderMode::Local);
      std::cout << dump_json(verdict_json(v));
      rc = v.pass ? kPass : kFail;
    } else if (checkHom->parsed()) {
      auto [doc, r] = load(file);
      Homotopy h = homotopy_from(doc, r);
      auto rel = rel_targets(doc);
      CheckVerdict v;
      if (h.from && h.to) {
        v = check_dihomotopy(h, *h.from, *h.to, rel, !noFast);
      } else {
        PieceFn fn = as_fn(h);
        v = check_dihomotopy(h, restrict_fn(fn, false), restrict_fn(fn, true), rel, !noFast);
      }
      std::cout << dump_json(verdict_json(v));
      rc = v.pass ? kPass : kFail;
    } else if (check->parsed()) {
      auto [doc, r] = load(file);
      CheckVerdict v = verify_equivalence_certificate(certificate_from(doc, r));
      std::cout << dump_json(verdict_json(v));
      rc = v.pass ? kPass : kFail;
    } else if (obstruct->parsed()) {
      auto [d1, r1] = load(file);
      auto [d2, r2] = load(other);
      ObstructionVerdict v = equivalence_obstruction(space_from(d1, r1)->cx, space_from(d2, r2)->cx);
      std::cout << dump_json(obstruction_json(v));
      rc = v.obstruction ? kFail : kPass;
    } else if (glue->parsed()) {
      auto [doc, r] = load(file);
      GlueDoc d = glue_from(doc, r);
      GlueResult g = pushout_identify(d.main.spec);
      Json rep;
      rep["validation"] = validation_json(g.report, !g.report.acyclic);
      rep["geometryDropped"] = g.geometryDropped;
      rep["vertices"] = g.space.vertices.size();
      rep["edges"] = g.space.edges.size();
      if (d.main.expectIsomorphic) rep["isomorphic"] = isomorphic(g.space, *d.main.expectIsomorphic);
      if (d.compare) {
        GlueResult after = pushout_identify(d.compare->spec);
        std::vector<std::pair<std::string, std::string>> pairs;
        std::map<std::string, std::string> vm;
        for (const auto& [x, y] : d.main.watch) {
          pairs.push_back({g.vertexMap[x.part].at(x.id), g.vertexMap[y.part].at(y.id)});
          vm[pairs.back().first] = after.vertexMap[x.part].at(x.id);
          vm[pairs.back().second] = after.vertexMap[y.part].at(y.id);
        }
        rep["homDiff"] = homdiff_json(hom_diff(g.space, after.space, pairs, vm));
      } else if (!d.main.watch.empty()) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [x, y] : d.main.watch)
          pairs.push_back({g.vertexMap[x.part].at(x.id), g.vertexMap[y.part].at(y.id)});
        rep["homDiff"] = homdiff_json(hom_diff(g.space, g.space, pairs));
      }
      if (!out.empty()) {
        Json sp = complex_json(g.space);
        sp["type"] = "space";
        sp["name"] = "glued";
        write_text(out, dump_json(sp));
      }
      std::cout << dump_json(rep);
    } else if (pushout->parsed()) {
      auto [doc, r] = load(file);
      PushoutJob job = pushout_from(doc, r);
      PushoutResult po = pushout_along_map(job.D, job.B, job.inclusion, job.Bp, job.f, job.primeName);
      Json rep;
      rep["validation"] = validation_json(po.report, !po.report.acyclic);
      rep["geometryDropped"] = po.geometryDropped;
      rep["vertices"] = po.space.vertices.size();
      rep["edges"] = po.space.edges.size();
      rep["homDiff"] = homdiff_json(hom_diff(job.D, po.space, job.watch, po.induced.vmap));
      if (!out.empty()) {
        Json sp = complex_json(po.space);
        sp["type"] = "space";
        sp["name"] = "pushout";
        write_text(out, dump_json(sp));
      }
      std::cout << dump_json(rep);
    } else if (render->parsed()) {
      auto [doc, r] = load(file);
      auto g = space_from(doc, r);
      std::vector<std::vector<std::string>> reps;
      if (!from.empty() && !to.empty()) {
        HomSet h = hom_set(g->cx.space, resolve_vertex(g->cx, from), resolve_vertex(g->cx, to), opt_len(maxLen));
        reps = summarize(g->cx.space, h).representatives;
      }
      write_text(out, render_svg(*g, reps, render_options(stroke, pathWidth, colours, labels)));
    } else if (suite->parsed()) {
      if (listTags) {
        for (const auto& t : suite_tags()) std::cout << t << "\n";
        return kPass;
      }
      SuiteOptions opt;
      if (!only.empty()) opt.only = only;
      if (!corrupt.empty()) corrupt_file(opt.files, corrupt);
      auto rows = run_paper_suite(opt);
      std::cout << suite_table(rows);
      if (!reportFile.empty()) write_text(reportFile, dump_json(suite_json(rows)));
      rc = suite_passed(rows) && !rows.empty() ? kPass : kFail;
    } else if (exporter->parsed()) {
      auto write_all = [&](const std::map<std::string, Json>& docs) {
        if (outDir.empty()) throw ParseError("--out-dir is required for multi-file exports");
        for (const auto& [name, d] : docs) write_text((fs::path(outDir) / name).string(), dump_json(d));
      };
      if (!exportSpace.empty()) {
        std::cout << dump_json(space_json(*preset_space(exportSpace)));
      } else if (!exportStandard.empty()) {
        GeoSpace g;
        g.name = exportStandard;
        g.cx = mark_context(standard_space(exportStandard), discrete_context({}), {});
        std::cout << dump_json(space_json(g));
      } else if (!exportMap.empty()) {
        std::cout << dump_json(map_json(preset_map(exportMap)));
      } else if (!exportHomotopy.empty()) {
        std::cout << dump_json(homotopy_json(preset_homotopy(exportHomotopy)));
      } else if (!exportCert.empty()) {
        write_all(export_certificate(preset_certificate(exportCert), exportCert));
      } else if (!zArgs.empty()) {
        std::cout << dump_json(z_pushout_document(zArgs[0], zArgs[1], zArgs[2]));
      } else if (generated) {
        write_all(generated_documents());
      } else {
        throw ParseError("nothing to export");
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
