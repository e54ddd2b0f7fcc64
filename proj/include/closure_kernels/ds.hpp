#pragma once

#include <optional>
#include <vector>

#include "closure_kernels/closure.hpp"
#include "closure_kernels/instance.hpp"

namespace ck {

struct SplitPartition {
  VertexSet clique;       // C
  VertexSet independent;  // I
};

/// Degree-sequence recognition; C is a maximum clique. Throws invalid_input
/// when g is not split.
SplitPartition split_partition(const Graph& g);
bool is_split(const Graph& g);

/// The partition with I a maximum independent set: a clique vertex without
/// neighbors in I, if any, moves to I.
SplitPartition max_independent_partition(const Graph& g);

/// Deletes every isolated vertex and pays one unit of budget for each, then
/// decides negative budgets (No), empty graphs (Yes) and k = 0 on a nonempty
/// graph (No).
Reduced rr_ds_isolated(const Instance& inst);

/// Deletes every vertex v of I with N(v) = C, for the partition with I a
/// maximum independent set.
Reduced rr_dss_nc(const Instance& inst);

/// Closure ordering with every vertex of C before every vertex of I, built by
/// the recursion: if Δ < γ, C then I by id; if δ >= γ, prepend the clique
/// vertex of smallest closure; otherwise append an I-vertex of degree < γ.
ClosureOrdering good_ordering(const Graph& g, const SplitPartition& part);

struct SNeighborhood {
  int u = 0;
  /// Number of leading clique vertices of the ordering adjacent to u.
  int s = 0;
  VertexSet set;  // N(u) minus those leading vertices
};

/// One row per vertex of I, in id order. Throws std::logic_error when some
/// u has N(u) = C.
std::vector<SNeighborhood> compute_s_neighborhoods(const Graph& g, const SplitPartition& part,
                                                   const ClosureOrdering& ord);

/// A sunflower {S(v) | v in I'} with |I'| = k+2, or none. Tries a value of
/// S(·) shared by k+2 vertices, then the greedy on distinct sets, then the
/// greedy on the multiset.
std::optional<std::vector<int>> find_s_sunflower(const std::vector<SNeighborhood>& table, std::int64_t k);

/// Deletes the member of a (k+2)-petal sunflower with the largest s (ties to
/// the largest id).
Reduced rr_dss_sunflower(const Instance& inst);

/// Deletes the largest clique vertex v with N[u] ⊇ N[v] for another clique
/// vertex u. With closed = false the test uses open neighborhoods as
/// literally stated, which never holds for two adjacent vertices.
Reduced rr_dss_twin(const Instance& inst, bool closed = true);

/// isolated, nc, sunflower and twin to joint exhaustion. Throws invalid_input
/// on a non-split graph.
KernelResult kernelize_ds_split(const Instance& inst);

/// |I| < (γ−1)!·(k+2)^(γ−1) and |C| <= γ|I| + 1.
std::vector<BoundCheck> ds_split_size_bounds(const Instance& reduced);

struct RhoCertificate {
  int gamma = 1;
  int omega = 0;
  int rho = 0;
  std::optional<Biclique> violation;
};

/// ρ = γ + ω + 1 and a search for K_{ρ,ρ} as a subgraph.
RhoCertificate rho_biclique_certificate(const Graph& g);

}  // namespace ck
