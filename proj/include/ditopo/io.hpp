#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ditopo/complex.hpp"
#include "ditopo/fundcat.hpp"
#include "ditopo/glue.hpp"
#include "ditopo/plmaps.hpp"

namespace ditopo {

using Json = nlohmann::json;

// Turns a document reference (a file name) into the parsed document.
using Resolver = std::function<Json(const std::string& ref)>;
// References are paths relative to `baseDir`.
Resolver file_resolver(const std::filesystem::path& baseDir);
// References are looked up by file name in an in-memory table.
Resolver table_resolver(const std::map<std::string, std::string>& files);

// Throws ParseError with `what` in the message.
Json parse_json_text(const std::string& text, const std::string& what);
Json read_json_file(const std::filesystem::path& p);
// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string dump_json(const Json& j);

Json rat_json(const Rat& r);
Rat rat_from(const Json& j);
Json point_json(const Point& p);
Point point_from(const Json& j);

Json complex_json(const DiComplex& c);
DiComplex complex_from(const Json& j);
Json plspace_json(const PLSpace& s);
PLSpaceP plspace_from(const Json& j, const Resolver& r);

// Space documents come in four forms: {"preset": name}, {"standard": name}
// (dI, dII, dX, dO, dS1, dIIgrid:k), region builders
// {outer, forbidden, gridLines, triangulate, marks?} and explicit
// complexes {dimension, vertices, edges, cells, context?, pl?}.
Json space_json(const GeoSpace& s);
GeoSpaceP space_from(const Json& j, const Resolver& r);

Json expr_json(const Expr& e);
ExprP expr_from(const Json& j);

// Names for spaces that should be written as references instead of inline.
using SpaceRefs = std::map<const PLSpace*, std::string>;

Json map_json(const PLMap& m, const SpaceRefs& refs = {});
PLMap map_from(const Json& j, const Resolver& r);
Json homotopy_json(const Homotopy& h, const SpaceRefs& refs = {});
Homotopy homotopy_from(const Json& j, const Resolver& r);

Certificate certificate_from(const Json& j, const Resolver& r);
// Certificate document plus the documents it references, keyed by file
// name. The certificate itself is stored under "<prefix>.cert.json".
std::map<std::string, Json> export_certificate(const Certificate& c, const std::string& prefix);

CombMap combmap_from(const Json& j, const DiComplex& B, const DiComplex& C);
Json combmap_json(const CombMap& f);

struct GlueJob {
  GlueSpec spec;
  std::vector<std::pair<GlueRef, GlueRef>> watch;
  std::optional<DiComplex> expectIsomorphic;
  std::vector<std::string> partNames;
};
struct GlueDoc {
  GlueJob main;
  std::optional<GlueJob> compare;  // second gluing of parts with the same names
};
GlueDoc glue_from(const Json& j, const Resolver& r);

struct PushoutJob {
  DiComplex D, B, Bp;
  CombMap inclusion, f;
  std::string primeName = "B'";
  std::vector<std::pair<std::string, std::string>> watch;  // vertex ids of D
};
PushoutJob pushout_from(const Json& j, const Resolver& r);

// Reports.
Json validation_json(const ValidationReport& v, bool localOnly);
Json homset_json(const DiComplex& c, const HomSet& h);
Json verdict_json(const CheckVerdict& v);
Json obstruction_json(const ObstructionVerdict& v);
Json homdiff_json(const std::vector<HomDiffRow>& rows);

}  // namespace ditopo
