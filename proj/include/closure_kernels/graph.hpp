#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ck {

/// Thrown for vertex ids out of range, malformed sets and similar caller errors.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet normalized(VertexSet s);

/// Undirected simple graph over dense ids 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds from an edge list. Duplicate edges are merged; self-loops and ids
  /// outside [0, n) raise invalid_input.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return m_; }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;
  bool valid(int v) const { return v >= 0 && v < n(); }

  /// |N(u) ∩ N(v)|
  std::size_t common_neighbors(int u, int v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  int max_degree() const;
  int min_degree() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

/// Throws invalid_input unless every id of `s` is a vertex of `g`.
void require_vertices(const Graph& g, std::span<const int> s);

struct Subgraph {
  Graph graph;
  /// to_parent[i] is the id in the original graph of vertex i of `graph`.
  std::vector<int> to_parent;
};

/// G[keep] with vertices renumbered in increasing original id order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// G - remove.
Subgraph remove_vertices(const Graph& g, const VertexSet& remove);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// Connected components, each sorted; components are ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// True when G[s] is connected. The empty set and singletons count as connected.
bool induces_connected(const Graph& g, const VertexSet& s);

/// Returns (side of 0-colored vertices, side of 1-colored vertices) when bipartite.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct Biclique {
  VertexSet left;
  VertexSet right;
};

/// Disjoint U, W with |U| = r, |W| = s and every U-W pair adjacent (not
/// necessarily induced). Exhaustive over r-subsets with common-neighborhood
/// pruning; intended for small graphs.
std::optional<Biclique> contains_biclique(const Graph& g, int r, int s);

/// Classes of vertices with identical open neighborhoods, singletons included.
/// Each class is sorted; classes are ordered by smallest member.
std::vector<VertexSet> false_twin_classes(const Graph& g);

/// Ids of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace ck
