#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "topoclique/rational.hpp"

namespace topoclique {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Dense membership flags indexed by vertex id.
using VertexMask = std::vector<char>;

/// Sorts and deduplicates in place, returning the normalized set.
VertexSet normalize(VertexSet set);

VertexMask to_mask(int n, std::span<const Vertex> members);

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// Undirected simple graph on dense ids 0..n-1 with sorted adjacency lists.
/// Immutable once built; use GraphBuilder to construct.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Throws InputError on self-loops, out-of-range ids or repeated edges.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  int min_degree() const;
  int max_degree() const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Accumulates edges; repeated insertions of the same edge are ignored.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Returns false when the edge was already present. Throws InputError on
  /// self-loops and out-of-range ids.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  int num_vertices() const { return static_cast<int>(adj_.size()); }

  Graph build() &&;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// 2|E|/n, and 0 for the empty graph.
Rational average_degree(const Graph& g);

/// {u not in X : u adjacent to some v in X}.
VertexSet external_neighborhood(const Graph& g, std::span<const Vertex> x);

/// All vertices at distance <= r from X, X included.
VertexSet ball(const Graph& g, std::span<const Vertex> x, int r);

/// The literal i-fold iterate N(N(...N(X))). Not the distance-i sphere.
VertexSet iterated_neighborhood(const Graph& g, std::span<const Vertex> x, int i);

/// BFS distances from `sources` in g minus `blocked`; -1 marks unreachable
/// vertices. Search stops expanding past `max_dist` when it is >= 0.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources,
                               const VertexMask* blocked = nullptr, int max_dist = -1);

/// Proper 2-colouring if one exists. side[v] in {0,1}.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);

struct BipartiteHalf {
  Graph graph;
  std::vector<int> side;
  VertexSet parts[2];
};

/// Spanning bipartite subgraph keeping at least half of every vertex's
/// edges (local-search max cut started from a BFS parity colouring).
BipartiteHalf bipartite_half(const Graph& g);

/// A subgraph with translation back to the ids of the graph it came from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // subgraph id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> subgraph id, -1 if dropped

  Vertex parent_of(Vertex v) const { return to_parent[static_cast<std::size_t>(v)]; }
};

/// Induced subgraph on `keep` (any order; ids are assigned in increasing
/// parent-id order).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Induced subgraph on V minus W.
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> w);

/// Consecutive vertices adjacent, all vertices distinct, non-empty.
bool is_simple_path(const Graph& g, const Path& p);

/// Maps a path in a subgraph back into parent ids.
Path lift_path(const Subgraph& sub, const Path& p);

/// Edge-list text format: "n m" then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace topoclique
