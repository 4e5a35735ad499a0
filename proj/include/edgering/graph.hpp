// Simple graphs, walks and paths, and the contraction/gluing surgeries used
// throughout the library.
#ifndef EDGERING_GRAPH_HPP
#define EDGERING_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace edgering {

using VertexId = int;

/// Unordered vertex pair stored with first < second.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool contains(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return v == a ? b : a; }

  auto operator<=>(const Edge&) const = default;
};

/// A finite simple graph on positive integer vertex ids.
///
/// Vertices and edges are kept sorted; the position of an edge in `edges()`
/// is its index everywhere else in the library (monomial variables, incidence
/// matrix columns, simplicial complex labels). Values are immutable once
/// built.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws std::invalid_argument on loops, duplicate edges, non-positive
  /// ids or endpoints that are not declared vertices.
  SimpleGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertex set is taken to be the union of the endpoints.
  static SimpleGraph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId x, VertexId y) const;
  std::optional<std::size_t> edge_index(VertexId x, VertexId y) const;
  /// Position of `v` in `vertices()`; throws if absent.
  std::size_t vertex_index(VertexId v) const;
  VertexId max_vertex() const { return vertices_.empty() ? 0 : vertices_.back(); }

  /// Edge indices incident to the vertex at position `vi` of `vertices()`.
  const std::vector<std::size_t>& incident_edges(std::size_t vi) const { return incidence_[vi]; }

  bool operator==(const SimpleGraph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// A walk (x_0, ..., x_k) of a host graph together with its edge indices.
class Walk {
 public:
  Walk() = default;
  /// Throws std::invalid_argument if consecutive vertices are not adjacent.
  Walk(const SimpleGraph& g, std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<std::size_t>& edge_ids() const { return edge_ids_; }
  std::size_t length() const { return edge_ids_.size(); }
  bool is_closed() const { return !vertices_.empty() && vertices_.front() == vertices_.back(); }
  bool has_distinct_vertices() const;

  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }

  Walk reversed(const SimpleGraph& g) const;
  /// w || w'; throws unless back() == other.front().
  Walk concat(const SimpleGraph& g, const Walk& other) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> edge_ids_;
};

struct ContractionResult {
  SimpleGraph graph;
  std::map<VertexId, VertexId> chi;  // old vertex -> new vertex
  VertexId new_vertex = 0;
};

struct ConnectedByEdge {
  SimpleGraph graph;
  Edge bridge;
};

std::set<VertexId> neighbors(const SimpleGraph& g, VertexId x);
std::size_t degree(const SimpleGraph& g, VertexId x);

/// Distinct vertices and every internal vertex of degree exactly 2 in `g`.
bool is_path(const SimpleGraph& g, const Walk& w);
/// N(x) ∩ N(x') ⊆ p for the endpoints x, x' of the path.
bool is_simple_path(const SimpleGraph& g, const Walk& p);

ContractionResult contract_edge(const SimpleGraph& g, Edge e);
ContractionResult contract_path(const SimpleGraph& g, const Walk& p);
ContractionResult contract_walk(const SimpleGraph& g, const Walk& w);

/// Folds contract_edge over the walk's edges in the given direction; the
/// surviving fresh vertex is renamed to max(V)+1.
ContractionResult contract_sequentially(const SimpleGraph& g, const Walk& w, bool reverse_order);

ConnectedByEdge connect_by_edge(const SimpleGraph& g1, VertexId x, const SimpleGraph& g2, VertexId y);
SimpleGraph triangle_sequence(int n);
SimpleGraph relabel(const SimpleGraph& g, const std::map<VertexId, VertexId>& map);
SimpleGraph shift_vertices(const SimpleGraph& g, int offset);

bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
/// |E|-|V| for non-bipartite, |E|-|V|+1 for bipartite connected graphs.
std::size_t codim(const SimpleGraph& g);

/// r x n vertex-by-edge 0/1 matrix in canonical vertex and edge order.
Eigen::MatrixXi incidence_matrix(const SimpleGraph& g);

/// Sorted edge list of the lexicographically least relabelling onto
/// 1..|V|, restricted to relabellings that order vertices by degree.
std::vector<Edge> canonical_form(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& g, const SimpleGraph& h);

/// For a bridge e whose removal leaves exactly two connected sides, returns
/// the two sides (the one containing e.a first).
std::optional<std::pair<SimpleGraph, SimpleGraph>> split_at_bridge(const SimpleGraph& g, Edge e);

std::string to_string(const SimpleGraph& g);

// JSON graph files: {"vertices":[...],"edges":[[a,b],...]}.
SimpleGraph graph_from_json(const std::string& text);
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph load_graph(const std::string& path);
void save_graph(const SimpleGraph& g, const std::string& path);

}  // namespace edgering

#endif  // EDGERING_GRAPH_HPP
