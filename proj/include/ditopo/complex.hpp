#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ditopo/order.hpp"

namespace ditopo {

enum class EdgeKind { Directed, Undirected };
const char* to_string(EdgeKind k);

struct Vertex {
  std::string id;
  std::optional<Point> coords;
};

struct Edge {
  std::string id;
  std::string src, dst;
  EdgeKind kind = EdgeKind::Directed;
};

// Two parallel directed edge paths declared dihomotopic.
struct Cell2 {
  std::string id;
  std::vector<std::string> pathA, pathB;
};

struct DiComplex {
  std::size_t dimension = 0;  // ambient dimension of the embedding (0 when absent)
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Cell2> cells;
  bool loopFree = true;
  bool localOnly = false;

  // Index structures; rebuilt by reindex() after any structural edit.
  std::unordered_map<std::string, int> vIndex, eIndex;
  std::vector<std::vector<int>> out;  // directed out-edges per vertex, sorted by edge id
  std::vector<std::vector<int>> in;   // directed in-edges per vertex
  std::vector<int> edgeRank;          // rank of each edge in id order
  std::vector<int> srcIdx, dstIdx;

  void reindex();
  int vertex(const std::string& id) const;  // throws UnknownVertexError
  int edge(const std::string& id) const;    // throws UnknownVertexError
  bool has_vertex(const std::string& id) const { return vIndex.count(id) > 0; }
  bool has_edge(const std::string& id) const { return eIndex.count(id) > 0; }
  bool embedded() const;
  // Vertex id at the given coordinates, if any.
  std::optional<std::string> vertex_at(const Point& p) const;
  std::size_t out_degree(const std::string& v) const { return out[vertex(v)].size(); }
  std::size_t in_degree(const std::string& v) const { return in[vertex(v)].size(); }
};

struct ValidationReport {
  bool acyclic = true;
  bool embeddingMonotone = true;
  bool faceClosed = true;
  std::vector<std::vector<std::string>> cycles;
  std::vector<std::string> problems;
};

ValidationReport validate_complex(const DiComplex& c);
// Runs validation and updates loopFree/localOnly.
ValidationReport refresh_flags(DiComplex& c);

// Vertices reachable from v along directed edges (including v).
std::vector<bool> reachable_from(const DiComplex& c, int v);

DiComplex build_grid_complex(const RectRegion& region,
                             const std::vector<std::vector<Rat>>& gridLines,
                             bool triangulate);
std::vector<Rat> uniform_lines(long k);  // 0, 1/k, ..., 1

// dI, dII, dX, dO, dS1, dIIgrid(k) (spelled "dIIgrid:k" or "dIIgrid(k)").
DiComplex standard_space(const std::string& name);

struct ContextedComplex {
  DiComplex space;
  DiComplex context;
  std::map<std::string, std::string> marking;  // context vertex -> space vertex

  const std::string& at(const std::string& a) const;  // throws MarkingError
  std::vector<std::string> context_vertices() const;
};

DiComplex discrete_context(const std::vector<std::string>& names);
ContextedComplex mark_context(const DiComplex& space, const DiComplex& context,
                              const std::map<std::string, std::string>& marking);

// Brute-force isomorphism test on vertices/edges/cell counts for small
// complexes (up to 9 vertices).
bool isomorphic(const DiComplex& a, const DiComplex& b);

}  // namespace ditopo
