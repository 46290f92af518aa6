#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rigsep {

using Vertex = std::int32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 stored as CSR with
// sorted neighbor lists.  The vertex order is the tie-breaking order used
// throughout the library.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds from an edge list.  Loops are rejected; repeated edges are merged.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t m() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  // Throws InputError for ids outside 0..n-1.
  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& s) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// Sorts and deduplicates.
VertexSet make_set(std::vector<Vertex> vs);
VertexSet all_vertices(int n);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
std::vector<char> membership_mask(int n, const VertexSet& s);

struct Subgraph {
  Graph graph;
  // Local id i corresponds to original vertex to_parent[i]; increasing, so
  // the original order is preserved.
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Components of G[S], each sorted, ordered by smallest id.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);
// Components of G restricted to vertices with alive[v] != 0.
std::vector<VertexSet> connected_components_masked(const Graph& g, const std::vector<char>& alive);
bool is_connected(const Graph& g);
bool is_connected_set(const Graph& g, const VertexSet& s);

// Vertices of U with a neighbor outside U.
VertexSet boundary(const Graph& g, const VertexSet& u);
// U minus its boundary.
VertexSet interior(const Graph& g, const VertexSet& u);
// A together with every vertex adjacent to A.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);
// True if some edge has one endpoint in A and the other in B.
bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Replaces every edge by a path of length two.  Original vertices keep their
// ids; the midpoint of the i-th edge of g.edges() gets id n + i.
Graph subdivision(const Graph& g);

}  // namespace rigsep
