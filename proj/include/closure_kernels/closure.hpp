#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "closure_kernels/graph.hpp"

namespace ck {

/// cl_G(v) = max over w outside N[v] of |N(v) ∩ N(w)|, 0 if v is universal.
int vertex_closure(const Graph& g, int v);

/// 1 + max_v cl_G(v); the smallest c for which g is c-closed. 1 for the empty graph.
int closure_number(const Graph& g);

struct ClosureOrdering {
  std::vector<int> order;
  /// step_closure[i] = cl of order[i] in the graph induced by order[i..].
  std::vector<int> step_closure;
  int gamma = 1;
  /// position[v] = index of v in order.
  std::vector<int> position;
};

/// Greedy min-closure peeling with ties to the smallest id. The returned
/// gamma is the weak closure number of g.
ClosureOrdering weak_closure_ordering(const Graph& g);

/// Recomputes the step closures of an arbitrary permutation. Throws
/// invalid_input if `order` is not a permutation of g's vertices.
ClosureOrdering make_ordering(const Graph& g, const std::vector<int>& order);

struct PQSplit {
  int v = -1;
  VertexSet prior;
  VertexSet posterior;
};

PQSplit pq_split(const Graph& g, const ClosureOrdering& ord, int v);

struct Degeneracy {
  int d = 0;
  std::vector<int> order;
};

/// Min-degree peeling, ties to the smallest id.
Degeneracy degeneracy(const Graph& g);

struct Observation1Violation {
  int u = -1;
  int v = -1;
  int qq = 0;  // |Q(u) ∩ Q(v)|
  int qn = 0;  // |Q(u) ∩ N(v)|
};

/// Checks |Q(u) ∩ Q(v)| ≤ |Q(u) ∩ N(v)| ≤ gamma − 1 for all ordered nonadjacent pairs.
std::optional<Observation1Violation> check_observation1(const Graph& g, const ClosureOrdering& ord);

struct ClassCounts {
  std::size_t independent_size = 0;
  std::size_t p_classes = 0;
  std::size_t q_classes = 0;
  std::size_t n_classes = 0;
  /// Largest N-equivalence class.
  std::size_t t = 0;
};

/// Groups I = V ∖ cover by equal P(v), Q(v) and N(v). Throws invalid_input
/// when I is not independent.
ClassCounts neighborhood_classes(const Graph& g, const VertexSet& cover, const ClosureOrdering& ord);

/// Moon–Moser bound on the number of maximal cliques of a k-vertex graph (≥ 1).
std::uint64_t moon_moser(int k);

/// Explicit upper bound on |I| for a graph with a vertex cover S of size k,
/// weak closure gamma and N-classes of size at most t:
///   t · [(γ−1)·C(k,2) + M + M·k·Σ_{i<γ} C(k,i)] · Σ_{i≤γ} C(k,i)
/// where M is the number of maximal cliques of G[S] (Moon–Moser if absent).
/// Saturates at kSaturated.
std::uint64_t lemma2_bound(int k, int gamma, std::uint64_t t,
                           std::optional<std::uint64_t> maximal_cliques = std::nullopt);

}  // namespace ck
