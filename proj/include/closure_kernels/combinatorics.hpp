#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "closure_kernels/graph.hpp"

namespace ck {

struct Matching {
  std::vector<Edge> edges;  // (u, v) with u < v, sorted
  std::vector<int> mate;    // -1 when unmatched
  std::size_t size() const { return edges.size(); }
};

/// Maximum cardinality matching (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g);

/// True when `edges` are pairwise disjoint edges of g.
bool is_matching(const Graph& g, const std::vector<Edge>& edges);

/// Half-integral optimum of the vertex cover LP. Values are doubled: 0, 1, 2.
struct HalfIntegralSolution {
  std::vector<int> doubled;
  /// 2 · opt(G)
  std::int64_t doubled_objective = 0;
  VertexSet v0, v_half, v1;
};

/// Solved through a minimum vertex cover of the bipartite double cover (König).
HalfIntegralSolution vclp_half_integral(const Graph& g);

struct Sunflower {
  VertexSet core;
  std::vector<std::size_t> members;  // indices into the input family, increasing
};

/// Erdős–Rado greedy: take a maximal disjoint subfamily in index order; if it
/// has fewer than k sets, recurse on the sets through the most frequent
/// element of its union (ties to the smallest element). Duplicate sets are
/// distinct members. Returns none when the greedy fails.
std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, std::size_t k);

/// Pairwise intersections of the members all equal the core.
bool is_sunflower(const std::vector<VertexSet>& family, const Sunflower& s);

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each sorted,
/// in lexicographic order. The empty graph has the single clique ∅.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// A maximum clique, lexicographically smallest among maximum ones.
VertexSet maximum_clique(const Graph& g);

/// Integral max-flow (Dinic) on a small directed network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);
  void add_arc(int from, int to, std::int64_t cap);
  std::int64_t max_flow(int s, int t);
  /// Flow on the i-th arc added.
  std::int64_t flow(std::size_t arc) const;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::size_t rev;
  };
  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t pushed);

  std::vector<std::vector<Arc>> g_;
  std::vector<std::pair<int, std::size_t>> index_;
  std::vector<std::int64_t> original_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace ck
