#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ditopo/complex.hpp"
#include "ditopo/fundcat.hpp"

namespace ditopo {

struct GlueRef {
  std::size_t part = 0;
  std::string id;
};

struct GlueSpec {
  std::vector<std::string> names;  // one per part; used to qualify ids
  std::vector<DiComplex> parts;
  std::vector<std::pair<GlueRef, GlueRef>> vertices;  // vertex identifications
  std::vector<std::pair<GlueRef, GlueRef>> edges;     // edge identifications
  bool qualify = true;                                // prefix ids with "name."
};

// Identifies every vertex of part p lying at the same coordinates as a
// vertex of part q (and the edges between identified vertices).
void identify_by_coordinates(GlueSpec& spec, std::size_t p, std::size_t q);
// Adds the edge identifications implied by the current vertex pairs
// between parts p and q.
void identify_induced_edges(GlueSpec& spec, std::size_t p, std::size_t q);

struct GlueResult {
  DiComplex space;
  ValidationReport report;
  bool geometryDropped = false;
  // Per part: original vertex id -> quotient vertex id, same for edges.
  std::vector<std::map<std::string, std::string>> vertexMap, edgeMap;
};

GlueResult pushout_identify(const GlueSpec& spec);

struct PushoutResult {
  DiComplex space;
  CombMap induced;  // D -> E
  ValidationReport report;
  bool geometryDropped = false;
  std::map<std::string, std::string> targetMap;  // B' vertex id -> E vertex id
};

// Pushout of an inclusion B -> D (given as a vertex/edge embedding) along
// f: B -> B'. Throws InclusionError for non-injective inclusions.
PushoutResult pushout_along_map(const DiComplex& D, const DiComplex& B, const CombMap& inclusion,
                                const DiComplex& Bp, const CombMap& f, const std::string& primeName = "B'");

struct HomDiffRow {
  std::string from, to;            // ids in the first complex
  std::string fromAfter, toAfter;  // ids in the second complex
  std::size_t before = 0, after = 0;
  bool boundedAfter = false;
  std::optional<std::vector<std::string>> witness;  // new dipath when emptiness changed
  bool emptinessChanged() const { return (before == 0) != (after == 0); }
};

// Hom-set cardinalities before and after, with vertex ids translated by
// `vmap` (identity when a vertex is absent from it). Cyclic complexes are
// enumerated with a length bound of the edge count.
std::vector<HomDiffRow> hom_diff(const DiComplex& before, const DiComplex& after,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::map<std::string, std::string>& vmap = {});

// Routes each edge of B along a directed path in C between the images of
// its endpoints, preferring steps that increase coordinate `axis` first.
// Throws NotAFunctorError when no path exists.
CombMap route_vertex_map(const DiComplex& B, const DiComplex& C, const std::map<std::string, std::string>& vmap,
                         std::size_t axis = 0);

}  // namespace ditopo
