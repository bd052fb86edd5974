#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

/// Finite simplicial graph: undirected, irreflexive, no multi-edges.
///
/// The vertex order is fixed at construction (input order) and every
/// canonical choice downstream -- letter order in normal forms, witness
/// enumeration, serialisation -- derives from it.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Builds a graph from named vertices and an edge list. Throws
  /// std::invalid_argument on duplicate vertices, unknown endpoints,
  /// self-loops or duplicate edges (in either orientation).
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

  /// Index of a named vertex; throws std::invalid_argument if unknown.
  int index_of(const std::string& vertex) const;
  std::optional<int> find_vertex(const std::string& vertex) const;

  bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  std::size_t edge_count() const;
  /// Edges as index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Structural equality: same names in the same order, same edges.
  bool operator==(const SimplicialGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<bool>> matrix_;
};

/// Graph with a total colouring, colour indices contiguous from 1.
struct ColouredGraph {
  SimplicialGraph graph;
  std::vector<int> colour;  // by vertex index
};

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const std::vector<std::string>& s);
SimplicialGraph complement(const SimplicialGraph& g);

/// Closed star: v together with its neighbors, in vertex order.
std::vector<std::string> star(const SimplicialGraph& g, const std::string& v);

/// Partition into maximal connected vertex sets, each sorted by vertex
/// order, components ordered by least vertex.
std::vector<std::vector<int>> connected_component_indices(const SimplicialGraph& g);
std::vector<std::vector<std::string>> connected_components(const SimplicialGraph& g);

/// Quotient identifying vertices with equal closed stars. Classes are
/// named by their least member and ordered by it; the result is an
/// induced subgraph of g on those representatives.
SimplicialGraph deflation(const SimplicialGraph& g);

/// n fresh copies "v#1".."v#n" per vertex: copies of one vertex span a
/// clique, and copies inherit adjacency from the base graph.
SimplicialGraph inflation(const SimplicialGraph& g, int n);

/// Disjoint union of the parts with a full join between parts i and j
/// exactly when base vertices i and j are adjacent. Part vertices are
/// renamed "<base vertex>.<part vertex>".
SimplicialGraph graph_substitution(const SimplicialGraph& base,
                                   const std::vector<SimplicialGraph>& parts);

/// Convention for "P3-free" in the triangle-built predicate: a path
/// measured in edges (4 vertices) or in vertices (3 vertices).
enum class PathConvention { Edges, Vertices };

struct GraphClassification {
  bool connected = false;
  bool clique = false;
  bool join = false;
  bool forest = false;
  bool complement_of_forest = false;
  bool triangle_free = false;
  bool triangle_built = false;
  bool weakly_chordal = false;
  bool atomic = false;
};

bool is_connected(const SimplicialGraph& g);
bool is_clique(const SimplicialGraph& g);
bool is_join(const SimplicialGraph& g);
bool is_forest(const SimplicialGraph& g);
bool is_triangle_free(const SimplicialGraph& g);
bool is_complement_of_forest(const SimplicialGraph& g);
bool is_triangle_built(const SimplicialGraph& g,
                       PathConvention convention = PathConvention::Edges);

/// No triangles and no induced paths with more than 3 edges. This is
/// the phrasing used alongside the deflation-closure results; it does
/// not match the usual definition of weakly chordal graphs (no long
/// induced cycles in the graph or its complement), which would admit
/// triangles. The narrower reading is implemented deliberately.
bool is_weakly_chordal(const SimplicialGraph& g);

/// Connected, minimum degree >= 2, girth >= 5, and no separating closed
/// star (removing any closed star leaves a connected graph or at most
/// one vertex).
bool is_atomic(const SimplicialGraph& g);

/// Length of a shortest cycle, or nullopt for acyclic graphs.
std::optional<int> girth(const SimplicialGraph& g);

int max_clique_size(const SimplicialGraph& g);

GraphClassification classify(const SimplicialGraph& g,
                             PathConvention convention = PathConvention::Edges);

/// Injective map pattern index -> host index.
using VertexMap = std::vector<int>;

/// Backtracking search for an induced-subgraph embedding. Pattern
/// vertices are assigned in their fixed order and host candidates tried
/// in ascending order, so a hit is the lexicographically least witness.
std::optional<VertexMap> find_induced_embedding(const SimplicialGraph& pattern,
                                                const SimplicialGraph& host);

/// Exhaustive check of all injections in lexicographic order; testing
/// oracle for find_induced_embedding, no pruning shared with it.
std::optional<VertexMap> brute_force_induced_embedding(const SimplicialGraph& pattern,
                                                       const SimplicialGraph& host);

bool is_isomorphic(const SimplicialGraph& g1, const SimplicialGraph& g2);

}  // namespace pcg
