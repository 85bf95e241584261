#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ditopo/complex.hpp"

namespace ditopo {

struct Dipath {
  int source = -1, target = -1;
  std::vector<int> edges;  // edge indices into the complex
  bool operator==(const Dipath& o) const {
    return source == o.source && target == o.target && edges == o.edges;
  }
};

std::vector<std::string> path_ids(const DiComplex& c, const Dipath& p);
Dipath path_from_ids(const DiComplex& c, const std::vector<std::string>& ids,
                     const std::string& source);
// Strict lexicographic order on edge-id sequences.
bool path_less(const DiComplex& c, const Dipath& a, const Dipath& b);

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const;
};

// All directed edge paths from x to y in lexicographic edge-id order.
// Cyclic complexes require maxLen (NeedsBoundError otherwise).
std::vector<Dipath> enumerate_dipaths(const DiComplex& c, const std::string& x, const std::string& y,
                                      std::optional<std::size_t> maxLen = std::nullopt);

// Paths obtained from p by one elementary flip.
std::vector<std::vector<int>> flip_neighbours(const DiComplex& c, const std::vector<int>& p);

// Throws EndpointError when endpoints differ. On cyclic complexes the
// search is limited to paths of length at most maxLen (NeedsBoundError
// when absent).
bool dihomotopic(const DiComplex& c, const Dipath& p, const Dipath& q,
                 std::optional<std::size_t> maxLen = std::nullopt);

struct HomClass {
  int classId = 0;
  Dipath representative;
  std::size_t members = 0;
};

struct HomSet {
  std::string source, target;
  std::vector<HomClass> classes;
  std::size_t pathCount = 0;
  bool bounded = false;  // bounded enumeration on a complex with cycles
  std::optional<std::size_t> maxLen;
  std::vector<Dipath> paths;
  std::vector<int> classOf;  // parallel to paths
  std::unordered_map<std::vector<int>, int, VecHash> index;

  std::size_t class_count() const { return classes.size(); }
  // Class of a path from source to target; -1 if the path is not enumerated.
  int class_of(const Dipath& p) const;
};

HomSet hom_set(const DiComplex& c, const std::string& x, const std::string& y,
               std::optional<std::size_t> maxLen = std::nullopt);

// Combinatorial map: vertices to vertices, edges to edge paths.
struct CombMap {
  std::map<std::string, std::string> vmap;
  std::map<std::string, std::vector<std::string>> routing;
};

CombMap identity_comb_map(const DiComplex& c);
// Structural check of endpoints and routings. Throws NotAFunctorError.
void check_comb_map(const CombMap& f, const DiComplex& B, const DiComplex& C);
Dipath image_path(const CombMap& f, const DiComplex& B, const DiComplex& C, const Dipath& p);
// Throws NotAFunctorError naming the first 2-cell whose images are not
// dihomotopic in C.
void check_respects_cells(const CombMap& f, const DiComplex& B, const DiComplex& C);

struct InducedMap {
  HomSet target;
  std::vector<int> classMap;  // source classId -> target classId
  bool injective() const;
  bool surjective() const;
};

InducedMap induced_map(const CombMap& f, const DiComplex& B, const DiComplex& C, const HomSet& h);

struct HomSummary {
  std::size_t classCount = 0, pathCount = 0;
  std::vector<std::vector<std::string>> representatives;
};
HomSummary summarize(const DiComplex& c, const HomSet& h);

struct ObstructionVerdict {
  bool obstruction = false;  // false means NecessaryConditionsPass
  std::string a, b;
  HomSummary homB, homC;
  std::string reason;
  std::string name() const { return obstruction ? "ObstructionFound" : "NecessaryConditionsPass"; }
};

ObstructionVerdict equivalence_obstruction(const ContextedComplex& B, const ContextedComplex& C,
                                           const std::optional<CombMap>& f = std::nullopt);

}  // namespace ditopo
