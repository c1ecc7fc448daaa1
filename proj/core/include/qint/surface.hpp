#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qint {

/// One end of an edge. End 0 of edge e sits on the curve alpha_e, end 1 on
/// its parallel copy alpha'_e.
struct HalfEdge {
  int edge = 0;
  int end = 0;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct GraphVertex {
  int id = 0;
  /// Incident edge ids in cyclic (banding) order. A loop edge appears twice;
  /// its first occurrence is end 0.
  std::vector<int> half_edges;
};

struct GraphEdge {
  int id = 0;
  std::array<int, 2> ends{0, 0};
};

/// Banded trivalent graph dual to a pants decomposition. Edges index the
/// 3g-3 pants curves, vertices the 2g-2 pairs of pants.
///
/// Vertices and edges are kept sorted by id. Nothing here enforces the
/// trivalence invariants; see validate_graph().
struct DualGraph {
  int genus = 0;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  /// Position of an id in the sorted vectors; nullopt when absent.
  std::optional<int> edge_index(int edge_id) const;
  std::optional<int> vertex_index(int vertex_id) const;

  const GraphEdge& edge(int edge_id) const;
  const GraphVertex& vertex(int vertex_id) const;
  bool is_loop(int edge_id) const;

  /// Half-edges at a vertex in banding order, with loop ends resolved.
  std::vector<HalfEdge> slots(int vertex_id) const;

  std::vector<int> edge_ids() const;

  /// Restores id ordering after manual edits.
  void sort_by_id();
};

/// Boundary slot of a pants piece: the curve alpha_e (side 0) or alpha'_e (side 1).
struct BoundarySlot {
  int edge = 0;
  int side = 0;
  friend bool operator==(const BoundarySlot&, const BoundarySlot&) = default;
};

struct PantsPiece {
  int id = 0;  // equals the dual vertex id
  std::array<BoundarySlot, 3> boundary;
};

struct AnnulusPiece {
  int edge = 0;  // bounded by alpha_e and alpha'_e
};

/// The pieces cut out by the doubled pants curves P u P'.
struct DecompositionSystem {
  std::vector<PantsPiece> pants;
  std::vector<AnnulusPiece> annuli;

  const PantsPiece& pants_piece(int id) const;
};

struct SurfaceModel {
  std::string name;
  DualGraph graph;
  DecompositionSystem system;
};

struct ValidationIssue {
  std::string kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string kind, std::string message) {
    issues.push_back({std::move(kind), std::move(message)});
  }
  bool has(const std::string& kind) const;
  std::string to_string() const;
};

/// Names accepted by standard_surface for a genus. "chain" and "ring" exist
/// for every genus; "theta"/"dumbbell" are genus 2, "k4"/"star" genus 3.
std::vector<std::string> catalog_names(int genus);

/// Builds a catalog surface. Throws DomainError for genus < 2 or an unknown
/// name. "ring" at genus 2 is the theta graph, "chain" the dumbbell.
SurfaceModel standard_surface(int genus, const std::string& name = "chain");

/// Wraps a graph into a SurfaceModel. Throws ValidationError if the graph
/// is not a valid dual graph.
SurfaceModel make_surface(DualGraph graph, std::string name = "custom");

DecompositionSystem decomposition_of(const DualGraph& graph);

/// Every broken DualGraph invariant, with the offending ids.
ValidationReport validate_graph(const DualGraph& graph);

/// Whitehead move on a non-loop edge e = (u, v). With banding (e, a, b) at
/// u and (e, c, d) at v the result has (e, a, c) at u and (e, b, d) at v:
/// the half-edge following a at u trades places with the one following e
/// at v. Throws MoveError on a loop edge, DomainError on an unknown id.
DualGraph elementary_shift(const DualGraph& graph, int edge_id);

/// Multigraph isomorphism (loops and multiplicities respected, banding
/// ignored). Backtracking with degree/loop refinement.
bool are_isomorphic(const DualGraph& a, const DualGraph& b);

}  // namespace qint
