#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace idforest {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of edges of some host graph.
using EdgeSet = std::vector<Edge>;

/// Dense vertex blocks of the graph a result was derived from: entry i lists
/// the source vertices that became vertex i.
using OriginMap = std::vector<std::vector<Vertex>>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  /// Builds the simple graph underlying a multigraph: loops and repeated
  /// pairs are dropped instead of rejected.
  static Graph simplified(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool has_edge(Vertex a, Vertex b) const;

  const EdgeSet& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;

  /// Bit i of entry v is set iff v~i. Requires vertex_count() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  void build(std::vector<Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  EdgeSet edges_;
};

/// Blocks are listed by increasing minimum vertex; each block is sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
int component_count(const Graph& g);

EdgeSet bridges(const Graph& g);
Graph remove_bridges(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_2_connected(const Graph& g);
bool is_bridgeless(const Graph& g);

/// Remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> vs);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_edges(const Graph& g, std::span<const Edge> es);
/// Endpoints are removed and the heir is appended as the last vertex.
Graph contract_edge(const Graph& g, Edge e);

/// Vertex i of the result is vs[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Drops isolated vertices, keeping the rest in order.
Graph strip_isolated(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

}  // namespace idforest
